#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace loves {

// Exact rational with 64-bit terms, kept normalized (gcd 1, positive
// denominator). All probabilities and averages in this project are
// reported through this type so comparisons can stay exact.
class Fraction {
public:
    constexpr Fraction() = default;

    Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::invalid_argument("Fraction: zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend bool operator==(const Fraction& a, const Fraction& b) = default;

    friend bool operator<(const Fraction& a, const Fraction& b) {
        using wide = __int128;
        return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    // |a - b| <= tol, evaluated exactly.
    static bool within(const Fraction& a, const Fraction& b, const Fraction& tol) {
        using wide = __int128;
        wide diff = static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_;
        if (diff < 0) {
            diff = -diff;
        }
        const wide lhs = diff * tol.den_;
        const wide rhs = static_cast<wide>(tol.num_) * a.den_ * b.den_;
        return lhs <= rhs;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace loves
