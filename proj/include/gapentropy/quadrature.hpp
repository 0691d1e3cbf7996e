#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace gapentropy::quadrature {

struct Options {
    double abs_tol = 0.0;
    double rel_tol = 1e-6;
    std::size_t max_intervals = 20000;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
    bool converged = false;
};

// Global adaptive Gauss-Kronrod (7/15) over the consecutive intervals of
// `breakpoints` (ascending, at least two). The interval with the largest
// error estimate is bisected until the summed error drops below
// max(abs_tol, rel_tol * |value|) or max_intervals is reached.
Result integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const Options& options = {});

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& options = {});

}  // namespace gapentropy::quadrature
