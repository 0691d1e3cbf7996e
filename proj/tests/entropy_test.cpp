#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gapentropy/entropy.hpp"
#include "oracles.hpp"

using namespace gapentropy;
using namespace gapentropy::entropy;
using doctest::Approx;

TEST_CASE("discrete_entropy closed forms") {
    CHECK(discrete_entropy(std::map<char, int>{{'a', 1}, {'b', 1}, {'c', 1}, {'d', 1}}).value ==
          Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(discrete_entropy(std::map<char, int>{{'a', 7}}).value == 0.0);
    const auto e = discrete_entropy(std::map<int, int>{{2, 2}, {4, 1}, {6, 1}});
    CHECK(e.value == Approx(1.5 * std::numbers::ln2).epsilon(1e-12));
    CHECK(e.value == Approx(1.039721).epsilon(1e-6));
    CHECK(e.kind == EstimateKind::discrete_empirical);
    CHECK_THROWS_AS(discrete_entropy(std::map<int, int>{}), DomainError);
    CHECK_THROWS_AS(discrete_entropy(std::map<int, int>{{1, 0}}), DomainError);
}

TEST_CASE("discrete_entropy properties on random tables") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int symbols = 1 + static_cast<int>(rng() % 40);
        std::map<int, std::uint64_t> counts;
        for (int s = 0; s < symbols; ++s) counts[s] = 1 + rng() % 1000;
        const double h = discrete_entropy(counts).value;
        CHECK(h >= 0.0);
        CHECK(h <= std::log(static_cast<double>(symbols)) + 1e-15);

        // Scale invariance.
        const std::uint64_t c = 1 + rng() % 97;
        auto scaled = counts;
        for (auto& [s, n] : scaled) n *= c;
        CHECK(discrete_entropy(scaled).value == Approx(h).epsilon(1e-12));

        // Relabeling symbols does not matter.
        std::map<int, std::uint64_t> relabeled;
        for (const auto& [s, n] : counts) relabeled[1000 - 7 * s] = n;
        CHECK(discrete_entropy(relabeled).value == Approx(h).epsilon(1e-12));

        // Maximum reached by equal counts.
        std::map<int, std::uint64_t> flat;
        for (int s = 0; s < symbols; ++s) flat[s] = c;
        CHECK(discrete_entropy(flat).value == Approx(std::log(static_cast<double>(symbols))).epsilon(1e-12));
    }
}

TEST_CASE("empirical_gap_entropy") {
    const auto h10 = sieve::gap_histogram(sieve::PrimeRange(10));
    const double expected = -(std::log(1.0 / 3) / 3 + 2.0 / 3 * std::log(2.0 / 3));
    CHECK(empirical_gap_entropy(h10, false).value == Approx(expected).epsilon(1e-12));
    CHECK(empirical_gap_entropy(h10, false).value == Approx(0.636514).epsilon(1e-6));
    CHECK(empirical_gap_entropy(h10, true).value == 0.0);
    CHECK_THROWS_AS(empirical_gap_entropy(sieve::gap_histogram(sieve::PrimeRange(3)), true), DomainError);

    const auto h6 = sieve::gap_histogram(sieve::PrimeRange(1000000));
    const double v = empirical_gap_entropy(h6, false).value;
    CHECK(v > 0.0);
    CHECK(v <= std::log(static_cast<double>(h6.counts.size())));
    // numpy oracle.
    CHECK(v == Approx(2.7099606864).epsilon(1e-9));
    CHECK(empirical_gap_entropy(h6, true).value == Approx(2.7098388860).epsilon(1e-9));
}

TEST_CASE("h_real") {
    constexpr double e = std::numbers::e;
    CHECK(h_real(e * e).value == Approx(std::log(e * e / 2 - 2)).epsilon(1e-12));
    CHECK(h_real(e * e).value == Approx(0.527404).epsilon(1e-6));
    CHECK(h_real(93.3545).value == Approx(2.922030).epsilon(1e-6));
    CHECK(h_real(1e6).value == Approx(11.189691).epsilon(1e-6));
    CHECK(h_real(1e6).kind == EstimateKind::continuous_uniform_reals);
    CHECK_THROWS_AS(h_real(1.0), DomainError);
    // Strictly increasing past e^2.
    double prev = h_real(e * e).value;
    for (double x = e * e * 1.01; x < 1e9; x *= 1.37) {
        const double cur = h_real(x).value;
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("h_uniform_gaps") {
    CHECK(h_uniform_gaps(3.0).value == 0.0);
    CHECK(h_uniform_gaps(102.0).value == Approx(std::log(100.0)).epsilon(1e-14));
    CHECK(h_uniform_gaps(7e7).value == Approx(18.064006).epsilon(1e-7));
    CHECK_THROWS_AS(h_uniform_gaps(2.0), DomainError);
}

TEST_CASE("factorization_entropy") {
    const auto [profile, h] = factorization_entropy(2250);
    CHECK(profile.big_omega == 6);
    CHECK(profile.factors == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 2}, {5, 3}});
    CHECK(h.value == Approx(std::log(6.0) - (2 * std::log(2.0) + 3 * std::log(3.0)) / 6).epsilon(1e-14));
    CHECK(h.value == Approx(1.0114).epsilon(1e-4));
    CHECK(h.kind == EstimateKind::factorization);

    for (std::uint64_t p : {2ull, 3ull, 97ull, 7919ull, 1000000007ull}) CHECK(factorization_entropy(p).second.value == 0.0);
    for (unsigned k = 1; k < 63; ++k) CHECK(factorization_entropy(std::uint64_t{1} << k).second.value == 0.0);
    CHECK_THROWS_AS(factorization_entropy(1), DomainError);
    CHECK_THROWS_AS(factorization_entropy(0), DomainError);
}

TEST_CASE("factorization profile invariants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t n = 2 + rng() % 100000000;
        const auto [profile, h] = factorization_entropy(n);
        std::uint64_t product = 1;
        unsigned omega = 0;
        for (const auto& [p, a] : profile.factors) {
            CHECK(oracle::is_prime_td(p));
            CHECK(a >= 1);
            for (unsigned i = 0; i < a; ++i) product *= p;
            omega += a;
        }
        CHECK(product == n);
        CHECK(omega == profile.big_omega);
        CHECK(h.value >= 0.0);
        const bool prime_power = profile.factors.size() == 1;
        CHECK((h.value == 0.0) == prime_power);
    }
    // Large semiprime near 2^62 needs the trial-division tail past the table.
    const auto big = factorize(4611686014132420609ULL);  // (2^31 - 1)^2
    CHECK(big.factors == std::vector<std::pair<std::uint64_t, unsigned>>{{2147483647ULL, 2}});
}

TEST_CASE("entropy loss constant") {
    CHECK(entropy_loss_constant() == Approx(0.609949).epsilon(1e-6 / 0.609949));
    CHECK(kEulerGamma == Approx(0.577216).epsilon(1e-6));
    CHECK(1.0 - 0.609949 * std::numbers::ln2 == Approx(kEulerGamma).epsilon(1e-5));
}

TEST_CASE("chebyshev_C") {
    CHECK(chebyshev_C(2) == Approx(std::log(2.0) / 2).epsilon(1e-15));
    CHECK(chebyshev_C(10) ==
          Approx(std::log(2.0) / 2 + std::log(3.0) / 3 + std::log(5.0) / 5 + std::log(7.0) / 7).epsilon(1e-14));
    CHECK(chebyshev_C(10) == Approx(1.312652433).epsilon(1e-9));
    const double ratio = chebyshev_C(1000000) / std::log(1e6);
    CHECK(ratio > 0.8);
    CHECK(ratio < 1.1);
    CHECK_THROWS_AS(chebyshev_C(1), DomainError);

    // Nondecreasing, and increasing exactly at primes.
    double prev = chebyshev_C(2);
    for (std::uint64_t n = 3; n < 300; ++n) {
        const double cur = chebyshev_C(n);
        if (oracle::is_prime_td(n)) CHECK(cur > prev);
        else CHECK(cur == prev);
        prev = cur;
    }
}

TEST_CASE("envelope integral against independent Simpson oracle") {
    // mpmath reference values (30 digits, split tanh-sinh).
    const double paper_setting = envelope_entropy_integral(7e7, 1e-6);
    CHECK(paper_setting == Approx(25722848.63586564).epsilon(1e-6));
    CHECK(paper_setting == Approx(2.57231e7).epsilon(0.01));
    CHECK(paper_setting == Approx(oracle::envelope_simpson(7e7, 1e-6)).epsilon(1e-6));

    CHECK(envelope_entropy_integral(1e4, 1e-6) == Approx(3198.349696194900).epsilon(1e-6));
    CHECK(envelope_entropy_integral(1e4, 1e-9) == Approx(2855.301254726582).epsilon(1e-6));
}

TEST_CASE("envelope integral cutoff sensitivity") {
    // Near k = e the integrand is ~ e ln(u/e)/u with u = k - e, so moving the
    // cutoff from d1 to d2 removes about (e/2)(ln^2(d2/e) - ln^2(d1/e)).
    constexpr double e = std::numbers::e;
    auto tail = [&](double d) { return 0.5 * e * std::pow(std::log(d / e), 2); };
    const double predicted = tail(1e-9) - tail(1e-6);
    for (const double upper : {1e4, 7e7}) {
        const double diff = envelope_entropy_integral(upper, 1e-6) - envelope_entropy_integral(upper, 1e-9);
        CHECK(diff == Approx(predicted).epsilon(0.01));
    }
    // At the envelope's own upper limit the cutoff is immaterial.
    const double big = envelope_entropy_integral(7e7, 1e-6);
    CHECK(std::abs(big - envelope_entropy_integral(7e7, 1e-9)) / big < 1e-3);
}

TEST_CASE("envelope integral at the L = 1 point") {
    const double v = envelope_entropy_integral(std::exp(std::numbers::e), 1e-6);
    CHECK(std::isfinite(v));
    CHECK(v == Approx(-306.9531106713543).epsilon(1e-6));
    CHECK_THROWS_AS(envelope_entropy_integral(std::numbers::e, 1e-6), DomainError);
    CHECK_THROWS_AS(envelope_entropy_integral(100.0, 0.0), DomainError);
}
