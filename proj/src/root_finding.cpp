#include "gapentropy/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapentropy/error.hpp"

namespace gapentropy::roots {

namespace {

bool same_sign(double x, double y) { return (x > 0.0) == (y > 0.0); }

}  // namespace

Root solve(const std::function<double(double)>& g, Bracket bracket, double tol) {
    if (!(tol > 0.0)) throw DomainError("root tolerance must be > 0");
    double a = std::min(bracket.lo, bracket.hi);
    double b = std::max(bracket.lo, bracket.hi);
    double fa = g(a);
    double fb = g(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw BracketError("equation is not finite at the bracket ends [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    if (fa == 0.0) return {a, 0};
    if (fb == 0.0) return {b, 0};
    if (same_sign(fa, fb))
        throw BracketError("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");

    // Shrink [a, b] keeping g(a), g(b) of opposite sign.
    auto shrink = [&](double t, double ft) {
        if (same_sign(ft, fa)) {
            a = t;
            fa = ft;
        } else {
            b = t;
            fb = ft;
        }
    };

    for (int it = 1; it <= kMaxIterations; ++it) {
        const double width = b - a;
        const double secant = b - fb * (b - a) / (fb - fa);
        if (secant > a && secant < b) {
            const double fs = g(secant);
            if (fs == 0.0) return {secant, it};
            shrink(secant, fs);
        }
        if (b - a > 0.5 * width) {
            const double mid = a + 0.5 * (b - a);
            const double fm = g(mid);
            if (fm == 0.0) return {mid, it};
            shrink(mid, fm);
        }
        const double mid = a + 0.5 * (b - a);
        if (b - a < tol * std::max(1.0, std::abs(mid)) || !(mid > a && mid < b)) return {mid, it};
    }
    throw ConvergenceError("root finder exceeded " + std::to_string(kMaxIterations) + " iterations");
}

}  // namespace gapentropy::roots
