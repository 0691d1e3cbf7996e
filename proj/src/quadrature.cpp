#include "gapentropy/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "gapentropy/error.hpp"

namespace gapentropy::quadrature {

namespace {

// Kronrod 15-point abscissae; odd indices are the Gauss 7-point nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Piece {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Piece& other) const { return error < other.error; }
};

Piece gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, std::span<const double> breakpoints, const Options& options) {
    if (breakpoints.size() < 2) throw DomainError("integrate needs at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) throw DomainError("integration breakpoints must be ascending");
    }

    std::priority_queue<Piece> pieces;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const Piece p = gauss_kronrod(f, breakpoints[i - 1], breakpoints[i]);
        value += p.value;
        error += p.error;
        pieces.push(p);
    }

    auto good_enough = [&] { return error <= std::max(options.abs_tol, options.rel_tol * std::abs(value)); };
    while (!good_enough() && pieces.size() < options.max_intervals) {
        const Piece worst = pieces.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval at machine resolution
        pieces.pop();
        const Piece left = gauss_kronrod(f, worst.a, mid);
        const Piece right = gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        pieces.push(left);
        pieces.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    Result result;
    result.intervals = pieces.size();
    value = 0.0;
    error = 0.0;
    while (!pieces.empty()) {
        value += pieces.top().value;
        error += pieces.top().error;
        pieces.pop();
    }
    result.value = value;
    result.error_estimate = error;
    result.converged = error <= std::max(options.abs_tol, options.rel_tol * std::abs(value));
    return result;
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& options) {
    const std::array<double, 2> ends{a, b};
    return integrate(f, ends, options);
}

}  // namespace gapentropy::quadrature
