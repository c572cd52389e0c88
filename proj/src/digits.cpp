#include "loves/digits.hpp"

#include <numeric>
#include <stdexcept>

namespace loves {

DigitString::DigitString(std::initializer_list<int> digits) {
    digits_.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d > 9) {
            throw std::invalid_argument("DigitString: digit out of range [0, 9]");
        }
        digits_.push_back(static_cast<char>(d));
    }
}

DigitString DigitString::from_digits(std::span<const int> digits) {
    DigitString s;
    s.digits_.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d > 9) {
            throw std::invalid_argument("DigitString: digit out of range [0, 9]");
        }
        s.digits_.push_back(static_cast<char>(d));
    }
    return s;
}

DigitString DigitString::parse(std::string_view text) {
    DigitString s;
    s.digits_.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("DigitString: expected only digits 0-9");
        }
        s.digits_.push_back(static_cast<char>(c - '0'));
    }
    return s;
}

int DigitString::magnitude() const {
    return std::accumulate(digits_.begin(), digits_.end(), 0,
                           [](int acc, char d) { return acc + d; });
}

std::string DigitString::to_string() const {
    std::string out;
    out.reserve(digits_.size());
    for (char d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

} // namespace loves
