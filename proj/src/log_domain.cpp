#include "gapentropy/log_domain.hpp"

#include <cmath>

#include <fmt/format.h>

#include "gapentropy/error.hpp"

namespace gapentropy {

LogDomainNumber LogDomainNumber::ln() const {
    if (height_ > 0) return {height_ - 1, top_};
    if (!(top_ > 0.0)) throw DomainError("ln of a non-positive number");
    return real(std::log(top_));
}

LogDomainNumber LogDomainNumber::plus(double c) const {
    if (height_ == 0) return real(top_ + c);
    const double value = to_double();
    // V + c = exp(ln V + log1p(c / V)).
    const double shift = std::isinf(value) ? 0.0 : std::log1p(c / value);
    if (std::isnan(shift)) throw DomainError("tower shifted below zero");
    if (shift == 0.0) return *this;
    return ln().plus(shift).exp();
}

double LogDomainNumber::to_double() const {
    double v = top_;
    for (int i = 0; i < height_ && std::isfinite(v); ++i) v = std::exp(v);
    return v;
}

std::string LogDomainNumber::to_string() const {
    if (height_ == 0) return fmt::format("{:.12g}", top_);
    std::string out;
    for (int i = 0; i < height_; ++i) out += "exp(";
    out += fmt::format("{:.12g}", top_);
    out.append(static_cast<std::size_t>(height_), ')');
    return out;
}

std::partial_ordering operator<=>(const LogDomainNumber& a, const LogDomainNumber& b) {
    if (std::isnan(a.top_) || std::isnan(b.top_)) return std::partial_ordering::unordered;
    int ha = a.height_;
    int hb = b.height_;
    double ta = a.top_;
    double tb = b.top_;
    const int common = std::min(ha, hb);
    ha -= common;
    hb -= common;
    // One side is now a plain real; a tower of height >= 1 is positive.
    while (ha > 0 && hb == 0) {
        if (!(tb > 0.0)) return std::partial_ordering::greater;
        tb = std::log(tb);
        --ha;
    }
    while (hb > 0 && ha == 0) {
        if (!(ta > 0.0)) return std::partial_ordering::less;
        ta = std::log(ta);
        --hb;
    }
    return ta <=> tb;
}

}  // namespace gapentropy
