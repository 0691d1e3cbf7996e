#pragma once

#include <compare>
#include <string>

namespace gapentropy {

// exp applied `height` times to `top`. Height 0 is a plain real. Used for
// thresholds like e^(7e7) that overflow a double.
class LogDomainNumber {
public:
    constexpr LogDomainNumber(int height, double top) : height_(height), top_(top) {}
    static constexpr LogDomainNumber real(double value) { return {0, value}; }

    int height() const { return height_; }
    double top() const { return top_; }

    // Natural log: drops one level, or takes ln of a plain positive real.
    LogDomainNumber ln() const;
    LogDomainNumber exp() const { return {height_ + 1, top_}; }

    // Adds a real of ordinary size. On a tower the shift is folded into the
    // top through log1p and vanishes once it is below double resolution.
    LogDomainNumber plus(double c) const;

    // Plain value when it fits a double.
    double to_double() const;

    std::string to_string() const;

    // Compares values, not representations: both sides are reduced by ln
    // until one is a plain real.
    friend std::partial_ordering operator<=>(const LogDomainNumber& a, const LogDomainNumber& b);
    friend bool operator==(const LogDomainNumber& a, const LogDomainNumber& b) {
        return (a <=> b) == std::partial_ordering::equivalent;
    }

private:
    int height_;
    double top_;
};

}  // namespace gapentropy
