#include "gapentropy/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gapentropy/error.hpp"

namespace gapentropy::sieve {

namespace {

constexpr std::uint64_t kMaxLimit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Odd base primes up to `bound`, by a plain sieve. Bound is at most ~3e9
// for 63-bit limits, but desk use keeps it below 10^5.
std::vector<std::uint32_t> odd_base_primes(std::uint64_t bound) {
    std::vector<std::uint32_t> out;
    if (bound < 3) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 3; i <= bound; i += 2) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = true;
    }
    return out;
}

}  // namespace

PrimeRange::PrimeRange(std::uint64_t limit, std::size_t segment_size)
    : limit_(limit), segment_size_(segment_size) {
    if (limit < 2) throw DomainError("prime range limit must be >= 2");
    if (limit > kMaxLimit) throw DomainError("prime range limit exceeds 2^63-1");
    if (segment_size < 1) throw DomainError("segment size must be >= 1");
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, std::size_t segment_size,
                    const std::function<bool(Prime)>& visit) {
    if (segment_size < 1) throw DomainError("segment size must be >= 1");
    if (hi > kMaxLimit) throw DomainError("upper bound exceeds 2^63-1");
    if (hi < 2 || lo > hi) return;
    if (lo <= 2) {
        if (!visit(2)) return;
        lo = 3;
    }
    if (lo % 2 == 0) ++lo;
    if (lo > hi) return;

    const auto base = odd_base_primes(isqrt(hi));
    // Segment i covers odd numbers seg_lo, seg_lo+2, ..., seg_lo+2*(len-1).
    std::vector<std::uint8_t> composite(segment_size);
    for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
        const std::uint64_t span_odds = (hi - seg_lo) / 2 + 1;
        const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(segment_size, span_odds));
        std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(len), 0);
        const std::uint64_t seg_hi = seg_lo + 2 * (len - 1);

        for (const std::uint32_t p : base) {
            const std::uint64_t pp = std::uint64_t{p} * p;
            if (pp > seg_hi) break;
            std::uint64_t start = std::max(pp, (seg_lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t m = (start - seg_lo) / 2; m < len; m += p) composite[m] = 1;
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (!composite[i] && !visit(seg_lo + 2 * i)) return;
        }
        if (seg_hi >= hi) break;
        seg_lo = seg_hi + 2;
    }
}

std::vector<Prime> primes_up_to(const PrimeRange& range) {
    std::vector<Prime> out;
    if (range.limit() > 100) {
        const double x = static_cast<double>(range.limit());
        out.reserve(static_cast<std::size_t>(1.26 * x / std::log(x)));
    }
    for_each_prime(2, range.limit(), range.segment_size(), [&](Prime p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::uint64_t prime_count(const PrimeRange& range) {
    std::uint64_t count = 0;
    for_each_prime(2, range.limit(), range.segment_size(), [&](Prime) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t prime_count(double x) {
    if (!(x >= 2.0)) throw DomainError("prime_count requires x >= 2");
    if (x > static_cast<double>(kMaxLimit)) throw DomainError("prime_count argument exceeds 2^63-1");
    return prime_count(PrimeRange(static_cast<std::uint64_t>(std::floor(x))));
}

Prime nth_prime(std::uint64_t n) {
    if (n < 1) throw DomainError("nth_prime requires n >= 1");
    // Rosser: p_n < n (ln n + ln ln n) for n >= 6.
    std::uint64_t bound = 13;
    if (n >= 6) {
        const double dn = static_cast<double>(n);
        bound = static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 1;
    }
    std::uint64_t seen = 0;
    Prime result = 0;
    for_each_prime(2, bound, kDefaultSegmentSize, [&](Prime p) {
        if (++seen == n) {
            result = p;
            return false;
        }
        return true;
    });
    if (result == 0) throw DomainError("nth_prime: index beyond supported range");
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime next_prime_above(double x) {
    if (!(x >= 0.0)) throw DomainError("next_prime_above requires x >= 0");
    if (x >= static_cast<double>(kMaxLimit)) throw DomainError("next_prime_above: search bound overflows");
    std::uint64_t lo = static_cast<std::uint64_t>(std::floor(x)) + 1;
    // Bertrand: a prime exists in (m, 2m]; sieve windows of growing width.
    std::uint64_t width = 64;
    for (;;) {
        const std::uint64_t hi = lo > kMaxLimit - width ? kMaxLimit : lo + width;
        Prime found = 0;
        for_each_prime(lo, hi, kDefaultSegmentSize, [&](Prime p) {
            found = p;
            return false;
        });
        if (found != 0) return found;
        if (hi == kMaxLimit) throw DomainError("next_prime_above: search bound overflows");
        lo = hi + 1;
        width *= 2;
    }
}

std::uint64_t GapHistogram::count(std::uint64_t gap) const {
    const auto it = counts.find(gap);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t GapHistogram::max_key() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

namespace {

class GapAccumulator {
public:
    void add(Prime p) {
        if (previous_ != 0) {
            const std::uint64_t gap = p - previous_;
            ++hist_.counts[gap];
            ++hist_.total_gaps;
            if (gap > max_.gap) max_ = {gap, previous_};
        }
        previous_ = p;
    }

    GapStatistics snapshot(std::uint64_t limit) const {
        GapStatistics s{hist_, max_};
        s.histogram.limit = limit;
        return s;
    }

private:
    Prime previous_ = 0;
    GapHistogram hist_;
    MaxGap max_;
};

}  // namespace

GapStatistics gap_statistics(const PrimeRange& range) {
    if (range.limit() < 3) throw DomainError("gap statistics require limit >= 3");
    GapAccumulator acc;
    for_each_prime(2, range.limit(), range.segment_size(), [&](Prime p) {
        acc.add(p);
        return true;
    });
    return acc.snapshot(range.limit());
}

std::vector<GapStatistics> gap_statistics_at(std::span<const std::uint64_t> checkpoints,
                                             std::size_t segment_size) {
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw DomainError("checkpoints must be ascending");
    if (checkpoints.front() < 3) throw DomainError("gap statistics require limit >= 3");
    const PrimeRange range(checkpoints.back(), segment_size);

    std::vector<GapStatistics> out;
    out.reserve(checkpoints.size());
    GapAccumulator acc;
    std::size_t next = 0;
    for_each_prime(2, range.limit(), range.segment_size(), [&](Prime p) {
        while (next < checkpoints.size() && p > checkpoints[next]) out.push_back(acc.snapshot(checkpoints[next++]));
        acc.add(p);
        return true;
    });
    while (next < checkpoints.size()) out.push_back(acc.snapshot(checkpoints[next++]));
    return out;
}

GapHistogram gap_histogram(const PrimeRange& range) { return gap_statistics(range).histogram; }

MaxGap max_gap(const PrimeRange& range) { return gap_statistics(range).max_gap; }

std::string histogram_to_csv(const GapHistogram& hist) {
    std::ostringstream out;
    out << "# limit=" << hist.limit << '\n' << "gap,count\n";
    for (const auto& [gap, count] : hist.counts) out << gap << ',' << count << '\n';
    return out.str();
}

GapHistogram histogram_from_csv(const std::string& text) {
    GapHistogram hist;
    std::istringstream in(text);
    std::string line;
    bool have_limit = false;
    bool have_header = false;
    std::uint64_t last_gap = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("# limit=", 0) == 0) {
            hist.limit = std::stoull(line.substr(8));
            have_limit = true;
            continue;
        }
        if (line[0] == '#') continue;
        if (line == "gap,count") {
            have_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (!have_header || comma == std::string::npos) throw IoError("malformed histogram row: " + line);
        std::uint64_t gap = 0;
        std::uint64_t count = 0;
        try {
            gap = std::stoull(line.substr(0, comma));
            count = std::stoull(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw IoError("malformed histogram row: " + line);
        }
        if (count == 0 || gap <= last_gap) throw IoError("histogram rows must be ascending with positive counts");
        last_gap = gap;
        hist.counts[gap] = count;
        hist.total_gaps += count;
    }
    if (!have_limit || !have_header) throw IoError("histogram cache missing '# limit=' line or header");
    return hist;
}

void write_histogram(const GapHistogram& hist, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << histogram_to_csv(hist);
    if (!out) throw IoError("write failed: " + path.string());
}

GapHistogram read_histogram(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return histogram_from_csv(buf.str());
}

}  // namespace gapentropy::sieve
