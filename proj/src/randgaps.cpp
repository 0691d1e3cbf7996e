#include "gapentropy/randgaps.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gapentropy/error.hpp"
#include "gapentropy/sieve.hpp"

namespace gapentropy::randgaps {

std::uint64_t uniform_below(Engine& engine, std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_below requires n >= 1");
    // Reject the top (2^64 mod n) outputs so every residue is equally likely.
    const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - n + 1) % n;
    for (;;) {
        const std::uint64_t r = engine();
        if (r >= threshold) return r % n;
    }
}

GapSample generate(std::uint64_t seed, std::uint64_t count, std::uint64_t min_gap, std::uint64_t max_gap) {
    if (count < 1) throw DomainError("sample count must be >= 1");
    if (min_gap < 2 || min_gap % 2 != 0) throw DomainError("min_gap must be an even integer >= 2");
    if (max_gap <= min_gap || max_gap % 2 != 0) throw DomainError("max_gap must be even and > min_gap");

    GapSample sample;
    sample.seed = seed;
    sample.min_gap = min_gap;
    sample.max_gap = max_gap;
    sample.values.reserve(count);
    Engine engine(seed);
    const std::uint64_t symbols = sample.support_size();
    for (std::uint64_t i = 0; i < count; ++i) sample.values.push_back(min_gap + 2 * uniform_below(engine, symbols));
    return sample;
}

entropy::EntropyEstimate sample_entropy(const GapSample& sample) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto v : sample.values) ++counts[v];
    auto estimate = entropy::discrete_entropy(counts);
    estimate.support_description = "random even gaps in [" + std::to_string(sample.min_gap) + ", " +
                                   std::to_string(sample.max_gap) + "], " + estimate.support_description;
    return estimate;
}

MonteCarloSummary monte_carlo_theorem_check(std::uint64_t x_max, std::uint64_t trials, std::uint64_t seed) {
    if (x_max < 10000) throw DomainError("monte carlo check requires x_max >= 10^4");
    if (trials < 1) throw DomainError("monte carlo check requires trials >= 1");

    const auto stats = sieve::gap_statistics(sieve::PrimeRange(x_max));
    MonteCarloSummary s;
    s.x_max = x_max;
    s.trials = trials;
    s.seed = seed;
    s.sample_count = stats.histogram.total_gaps;
    s.max_gap = stats.max_gap.gap;
    s.prime_gap_entropy = entropy::empirical_gap_entropy(stats.histogram, false).value;

    double sum = 0.0;
    s.random_min = std::numeric_limits<double>::infinity();
    s.random_max = -std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double h = sample_entropy(generate(seed + t, s.sample_count, 2, s.max_gap)).value;
        sum += h;
        s.random_min = std::min(s.random_min, h);
        s.random_max = std::max(s.random_max, h);
        if (s.prime_gap_entropy < h) ++s.prime_lower_count;
    }
    s.random_mean = sum / static_cast<double>(trials);
    s.fraction_prime_lower = static_cast<double>(s.prime_lower_count) / static_cast<double>(trials);
    return s;
}

std::string sample_to_csv(const GapSample& sample) {
    std::ostringstream out;
    out << "index,gap\n";
    for (std::size_t i = 0; i < sample.values.size(); ++i) out << i << ',' << sample.values[i] << '\n';
    return out.str();
}

void write_sample(const GapSample& sample, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << sample_to_csv(sample);
    if (!out) throw IoError("write failed: " + path.string());
}

nlohmann::json summary_to_json(const MonteCarloSummary& s) {
    return {
        {"x_max", s.x_max},
        {"trials", s.trials},
        {"seed", s.seed},
        {"sample_count", s.sample_count},
        {"max_gap", s.max_gap},
        {"prime_gap_entropy", s.prime_gap_entropy},
        {"prime_lower_count", s.prime_lower_count},
        {"fraction_prime_lower", s.fraction_prime_lower},
        {"random_entropy_mean", s.random_mean},
        {"random_entropy_min", s.random_min},
        {"random_entropy_max", s.random_max},
        {"prng", "mt19937_64, seed + trial index"},
        {"log_base", "natural log (ln)"},
    };
}

}  // namespace gapentropy::randgaps
