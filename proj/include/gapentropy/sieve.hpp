#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gapentropy::sieve {

using Prime = std::uint64_t;

// Odd candidates per segment. 2^18 odd numbers fit a 256 KiB byte array.
inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 18;

// Inclusive sieving bound plus internal chunking.
class PrimeRange {
public:
    explicit PrimeRange(std::uint64_t limit, std::size_t segment_size = kDefaultSegmentSize);

    std::uint64_t limit() const { return limit_; }
    std::size_t segment_size() const { return segment_size_; }

private:
    std::uint64_t limit_;
    std::size_t segment_size_;
};

// Calls `visit` for every prime p with lo <= p <= hi, ascending.
// Returning false from `visit` stops the walk early.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, std::size_t segment_size,
                    const std::function<bool(Prime)>& visit);

std::vector<Prime> primes_up_to(const PrimeRange& range);

// pi(floor(x)).
std::uint64_t prime_count(double x);
std::uint64_t prime_count(const PrimeRange& range);

// P_1 = 2.
Prime nth_prime(std::uint64_t n);

// Smallest prime strictly greater than x.
Prime next_prime_above(double x);

bool is_prime(std::uint64_t n);

struct GapHistogram {
    std::uint64_t limit = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total_gaps = 0;

    std::uint64_t count(std::uint64_t gap) const;
    std::uint64_t max_key() const;

    friend bool operator==(const GapHistogram&, const GapHistogram&) = default;
};

GapHistogram gap_histogram(const PrimeRange& range);

struct MaxGap {
    std::uint64_t gap = 0;
    Prime lower_prime = 0;

    friend bool operator==(const MaxGap&, const MaxGap&) = default;
};

// Ties go to the smallest lower prime.
MaxGap max_gap(const PrimeRange& range);

// Histogram and max gap in one sieve pass.
struct GapStatistics {
    GapHistogram histogram;
    MaxGap max_gap;
};

GapStatistics gap_statistics(const PrimeRange& range);

// One sieve pass to the largest checkpoint; a snapshot of the running
// statistics is taken at every checkpoint (ascending, each >= 3).
std::vector<GapStatistics> gap_statistics_at(std::span<const std::uint64_t> checkpoints,
                                             std::size_t segment_size = kDefaultSegmentSize);

// Histogram cache: "# limit=<N>" comment, "gap,count" header, ascending rows.
std::string histogram_to_csv(const GapHistogram& hist);
GapHistogram histogram_from_csv(const std::string& text);
void write_histogram(const GapHistogram& hist, const std::filesystem::path& path);
GapHistogram read_histogram(const std::filesystem::path& path);

}  // namespace gapentropy::sieve
