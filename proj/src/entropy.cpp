#include "gapentropy/entropy.hpp"

#include <numbers>

#include "gapentropy/quadrature.hpp"

namespace gapentropy::entropy {

std::string_view to_string(EstimateKind kind) {
    switch (kind) {
        case EstimateKind::discrete_empirical: return "discrete_empirical";
        case EstimateKind::continuous_uniform_reals: return "continuous_uniform_reals";
        case EstimateKind::continuous_uniform_gaps: return "continuous_uniform_gaps";
        case EstimateKind::factorization: return "factorization";
        case EstimateKind::envelope_integral: return "envelope_integral";
    }
    return "unknown";
}

EntropyEstimate empirical_gap_entropy(const sieve::GapHistogram& hist, bool exclude_gap_one) {
    auto counts = hist.counts;
    if (exclude_gap_one) counts.erase(1);
    if (counts.empty()) throw DomainError("no gaps left to measure");
    auto estimate = discrete_entropy(counts);
    estimate.support_description = "prime gaps up to " + std::to_string(hist.limit) +
                                   (exclude_gap_one ? " (gap 1 excluded), " : ", ") + estimate.support_description;
    return estimate;
}

EntropyEstimate h_real(double x_max) {
    if (!(x_max > 1.0)) throw DomainError("h_real requires x_max > 1");
    const double count = x_max / std::log(x_max);
    return {std::log(count - 2.0), EstimateKind::continuous_uniform_reals, "uniform reals on [2, x/ln x]"};
}

EntropyEstimate h_uniform_gaps(double max_gap) {
    if (!(max_gap > 2.0)) throw DomainError("h_uniform_gaps requires G > 2");
    return {std::log(max_gap - 2.0), EstimateKind::continuous_uniform_gaps, "uniform gaps on [2, G]"};
}

FactorizationProfile factorize(std::uint64_t n) {
    if (n < 2) throw DomainError("factorization requires n >= 2");
    FactorizationProfile profile;
    profile.n = n;
    auto take = [&](std::uint64_t p) {
        unsigned a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        if (a > 0) {
            profile.factors.emplace_back(p, a);
            profile.big_omega += a;
        }
    };

    // Sieved primes first, then odd trial divisors beyond the table.
    constexpr std::uint64_t kTable = 1 << 16;
    std::uint64_t last = 1;
    sieve::for_each_prime(2, kTable, sieve::kDefaultSegmentSize, [&](sieve::Prime p) {
        if (p > n / p) return false;
        take(p);
        last = p;
        return true;
    });
    for (std::uint64_t d = last < 3 ? 3 : last + 2; n > 1 && d <= n / d; d += 2) take(d);
    if (n > 1) {
        profile.factors.emplace_back(n, 1u);
        profile.big_omega += 1;
    }
    return profile;
}

std::pair<FactorizationProfile, EntropyEstimate> factorization_entropy(std::uint64_t n) {
    auto profile = factorize(n);
    std::map<std::uint64_t, std::uint64_t> multiplicities;
    for (const auto& [p, a] : profile.factors) multiplicities[p] = a;
    EntropyEstimate estimate{discrete_entropy(multiplicities).value, EstimateKind::factorization,
                             "multiplicities of " + std::to_string(profile.factors.size()) + " prime factors"};
    return {std::move(profile), std::move(estimate)};
}

double entropy_loss_constant() { return (1.0 - kEulerGamma) / std::numbers::ln2; }

double chebyshev_C(std::uint64_t n) {
    if (n < 2) throw DomainError("chebyshev_C requires n >= 2");
    double sum = 0.0;
    sieve::for_each_prime(2, n, sieve::kDefaultSegmentSize, [&](sieve::Prime p) {
        const double dp = static_cast<double>(p);
        sum += std::log(dp) / dp;
        return true;
    });
    return sum;
}

double envelope_entropy_integral(double upper, double lower_cutoff_delta) {
    constexpr double e = std::numbers::e;
    if (!(lower_cutoff_delta > 0.0)) throw DomainError("envelope cutoff delta must be > 0");
    if (!(upper > e + lower_cutoff_delta)) throw DomainError("envelope upper limit must exceed e + delta");

    // Work in u = k - e so the singular end keeps full precision:
    // ln k = 1 + log1p(u/e), L = ln ln k = log1p(log1p(u/e)).
    auto integrand = [](double u) {
        const double L = std::log1p(std::log1p(u / e));
        return std::log(L) / L;
    };

    const double u_hi = upper - e;
    std::vector<double> breaks{lower_cutoff_delta};
    for (double b = lower_cutoff_delta * 10.0; b < u_hi; b *= 10.0) breaks.push_back(b);
    breaks.push_back(u_hi);

    quadrature::Options options;
    options.rel_tol = 1e-3;
    const auto rough = quadrature::integrate(integrand, breaks, options);
    options.abs_tol = 1e-6 * std::abs(rough.value);
    options.rel_tol = 0.0;
    const auto result = quadrature::integrate(integrand, breaks, options);
    if (!result.converged) throw ConvergenceError("envelope integral did not reach tolerance");
    return result.value;
}

}  // namespace gapentropy::entropy
