#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace loves {

// An ordered sequence of base-10 digits: the game state. Digits are held
// as raw byte values 0..9 so the buffer doubles as a hash key.
class DigitString {
public:
    DigitString() = default;

    DigitString(std::initializer_list<int> digits);

    static DigitString from_digits(std::span<const int> digits);

    // Parses "11010" style text; rejects anything outside '0'..'9'.
    static DigitString parse(std::string_view text);

    bool empty() const { return digits_.empty(); }
    std::size_t width() const { return digits_.size(); }

    // Sum of all digits.
    int magnitude() const;

    int digit(std::size_t i) const { return digits_[i]; }

    const std::string& bytes() const { return digits_; }

    std::string to_string() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;
    friend std::strong_ordering operator<=>(const DigitString&, const DigitString&) = default;

private:
    friend DigitString iterate(const DigitString&);
    friend DigitString play(std::span<const int>);

    std::string digits_;
};

} // namespace loves

template <>
struct std::hash<loves::DigitString> {
    std::size_t operator()(const loves::DigitString& s) const noexcept {
        return std::hash<std::string>{}(s.bytes());
    }
};
