#pragma once

// Independent reference implementations used only by tests.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

inline bool is_prime_td(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_td(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (is_prime_td(n)) out.push_back(n);
    }
    return out;
}

inline std::map<std::uint64_t, std::uint64_t> gaps_td(std::uint64_t limit) {
    const auto p = primes_td(limit);
    std::map<std::uint64_t, std::uint64_t> h;
    for (std::size_t i = 1; i < p.size(); ++i) ++h[p[i] - p[i - 1]];
    return h;
}

// Plain bisection, 200 halvings.
inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
    double glo = g(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Envelope integral by composite Simpson in s = ln(k - e), which makes the
// endpoint singularity smooth: dk = e^s ds.
inline double envelope_simpson(double upper, double delta, int panels = 400000) {
    constexpr double e = std::numbers::e;
    const double a = std::log(delta);
    const double b = std::log(upper - e);
    const double h = (b - a) / panels;
    auto f = [&](double s) {
        const double u = std::exp(s);
        const double L = std::log(std::log(e + u));
        return std::log(L) / L * u;
    };
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace oracle
