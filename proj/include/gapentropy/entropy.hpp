#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapentropy/error.hpp"
#include "gapentropy/sieve.hpp"

// All entropies are in nats.
namespace gapentropy::entropy {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

enum class EstimateKind {
    discrete_empirical,
    continuous_uniform_reals,
    continuous_uniform_gaps,
    factorization,
    envelope_integral,
};

std::string_view to_string(EstimateKind kind);

struct EntropyEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::discrete_empirical;
    std::string support_description;
};

// -sum p_i ln p_i over an unnormalized count table.
template <class Symbol, class Count>
EntropyEstimate discrete_entropy(const std::map<Symbol, Count>& distribution) {
    if (distribution.empty()) throw DomainError("discrete_entropy of an empty distribution");
    double total = 0.0;
    for (const auto& [symbol, count] : distribution) {
        if (!(count > 0)) throw DomainError("discrete_entropy requires positive counts");
        total += static_cast<double>(count);
    }
    // sum p ln p = (1/T) sum c ln c - ln T
    double weighted = 0.0;
    for (const auto& [symbol, count] : distribution) {
        const double c = static_cast<double>(count);
        weighted += c * std::log(c);
    }
    double h = std::log(total) - weighted / total;
    if (h < 0.0) h = 0.0;
    const double cap = std::log(static_cast<double>(distribution.size()));
    if (h > cap) h = cap;
    return {h, EstimateKind::discrete_empirical,
            std::to_string(distribution.size()) + " symbols, " + std::to_string(static_cast<std::uint64_t>(total)) +
                " observations"};
}

EntropyEstimate empirical_gap_entropy(const sieve::GapHistogram& hist, bool exclude_gap_one);

// ln(x/ln x - 2): uniform reals on [2, pi(x)] with pi(x) ~ x/ln x.
EntropyEstimate h_real(double x_max);

// ln(G - 2): uniform gaps on [2, G].
EntropyEstimate h_uniform_gaps(double max_gap);

struct FactorizationProfile {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    unsigned big_omega = 0;
};

FactorizationProfile factorize(std::uint64_t n);

// H(n) = ln Omega(n) - (1/Omega(n)) sum a_i ln a_i.
std::pair<FactorizationProfile, EntropyEstimate> factorization_entropy(std::uint64_t n);

// (1 - gamma)/ln 2.
double entropy_loss_constant();

// sum over primes p <= n of ln p / p.
double chebyshev_C(std::uint64_t n);

inline constexpr double kDefaultEnvelopeDelta = 1e-6;

// Integral of (ln L)/L with L = ln ln k over [e + delta, upper], i.e. the
// smooth-envelope entropy -int (1/L) ln(1/L) dk. The integrand diverges like
// ln(k-e)/(k-e) at k = e, so the cutoff removes O((ln delta)^2) mass.
double envelope_entropy_integral(double upper, double lower_cutoff_delta = kDefaultEnvelopeDelta);

}  // namespace gapentropy::entropy
