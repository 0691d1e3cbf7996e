#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gapentropy/entropy.hpp"

namespace gapentropy::randgaps {

// Draws come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard (the 10000th value from the default seed is
// 9981545732273789042), so samples are reproducible across platforms.
using Engine = std::mt19937_64;

// Uniform integer in [0, n) by rejection; n >= 1.
std::uint64_t uniform_below(Engine& engine, std::uint64_t n);

struct GapSample {
    std::uint64_t seed = 0;
    std::uint64_t min_gap = 2;
    std::uint64_t max_gap = 0;
    std::vector<std::uint64_t> values;

    std::size_t count() const { return values.size(); }
    // Number of even values in [min_gap, max_gap].
    std::uint64_t support_size() const { return (max_gap - min_gap) / 2 + 1; }
};

// i.i.d. uniform draws over the even integers of [min_gap, max_gap].
GapSample generate(std::uint64_t seed, std::uint64_t count, std::uint64_t min_gap, std::uint64_t max_gap);

entropy::EntropyEstimate sample_entropy(const GapSample& sample);

struct MonteCarloSummary {
    std::uint64_t x_max = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t max_gap = 0;
    double prime_gap_entropy = 0.0;
    // Trials where the prime-gap entropy is strictly below the random one.
    std::uint64_t prime_lower_count = 0;
    double fraction_prime_lower = 0.0;
    double random_mean = 0.0;
    double random_min = 0.0;
    double random_max = 0.0;

    friend bool operator==(const MonteCarloSummary&, const MonteCarloSummary&) = default;
};

// Trial i uses seed + i and draws pi(x_max) - 1 gaps over the even values of
// [2, G_emp(x_max)]. The prime-gap entropy includes the gap 1.
MonteCarloSummary monte_carlo_theorem_check(std::uint64_t x_max, std::uint64_t trials, std::uint64_t seed);

std::string sample_to_csv(const GapSample& sample);
void write_sample(const GapSample& sample, const std::filesystem::path& path);
nlohmann::json summary_to_json(const MonteCarloSummary& summary);

}  // namespace gapentropy::randgaps
