#pragma once

#include <functional>

namespace gapentropy::roots {

inline constexpr int kMaxIterations = 200;
inline constexpr double kDefaultTolerance = 1e-6;

struct Bracket {
    double lo;
    double hi;
};

struct Root {
    double value;
    int iterations;
};

// Bracketed root of a continuous g with g(lo)*g(hi) < 0. Each step tries a
// secant (regula falsi) point inside the bracket and falls back to
// bisection when that point does not at least halve the bracket. Stops when
// g is exactly zero or the bracket is narrower than tol * max(1, |t|).
// Throws BracketError without a sign change, ConvergenceError after
// kMaxIterations.
Root solve(const std::function<double(double)>& g, Bracket bracket, double tol = kDefaultTolerance);

}  // namespace gapentropy::roots
