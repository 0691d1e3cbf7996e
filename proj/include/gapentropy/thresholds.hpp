#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gapentropy/log_domain.hpp"
#include "gapentropy/root_finding.hpp"

namespace gapentropy::thresholds {

inline constexpr double kDefaultReportTolerance = 1e-3;
// Solver tolerance used for registry claims, far below any report tolerance.
inline constexpr double kClaimSolveTolerance = 1e-12;
inline constexpr std::int64_t kScanCap = 1000000;

// Inclusive integer range where an inequality holds.
struct IntegerWindow {
    std::int64_t first;
    std::int64_t last;
    friend bool operator==(const IntegerWindow&, const IntegerWindow&) = default;
};

using ClaimValue = std::variant<double, LogDomainNumber, IntegerWindow>;

std::string format_value(const ClaimValue& value);

enum class ClaimKind { crossover, domain_validity, integral_value, symbolic };
enum class Status { REPRODUCED, DIVERGENT, SYMBOLIC, INTERPRETATION_DEPENDENT };

std::string_view to_string(ClaimKind kind);
std::string_view to_string(Status status);

struct SymbolicCheck {
    std::string description;
    bool passed;
};

struct ThresholdClaim {
    std::string claim_id;
    ClaimValue paper_value;
    std::string equation;
    ClaimKind kind;
    std::string quote;
    std::string notes;

    // Root claims: g(t) = 0 on bracket. Empty for scans, integrals, symbols.
    std::function<double(double)> g;
    std::optional<roots::Bracket> bracket;

    // Non-symbolic claims: produces the computed value.
    std::function<ClaimValue()> compute;
    // Symbolic claims: log-domain consistency checks.
    std::function<std::vector<SymbolicCheck>()> symbolic_checks;

    // Smallest prime above the threshold, as printed alongside it.
    std::optional<std::uint64_t> companion_prime;
    // Status is reported as INTERPRETATION_DEPENDENT regardless of value.
    bool interpretation_dependent = false;
    // Known inconsistency in the source derivation; a DIVERGENT status here
    // does not fail verification.
    bool paper_inconsistency = false;
};

// The fixed 17-claim registry, validated on first use: every root bracket
// has a sign change and straddles the printed value at +-10%.
const std::vector<ThresholdClaim>& claim_registry();
const ThresholdClaim& find_claim(std::string_view claim_id);

// Smallest n with ln(R(n)/ln R(n) - 2) > ln(ln^2 R(n) - 2 ln R(n+1) - 2),
// R(n) = n ln n + n (ln ln n - 0.9385), and the run it starts, scanning
// n in [3, cap]. Both log arguments must be positive for the inequality to
// count as true.
std::optional<IntegerWindow> robin_window(std::int64_t cap = kScanCap);

struct ClaimResult {
    std::string claim_id;
    std::string equation;
    std::string quote;
    std::string notes;
    ClaimKind kind;
    ClaimValue paper_value;
    std::optional<ClaimValue> computed;
    std::optional<double> relative_error;
    Status status;
    std::optional<std::uint64_t> companion_expected;
    std::optional<std::uint64_t> companion_computed;
    std::vector<SymbolicCheck> checks;
    bool paper_inconsistency = false;
    std::string diagnostic;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;
    double tolerance;
    std::string timestamp;
    std::string tool_version;

    // DIVERGENT claims not pre-annotated as paper inconsistencies.
    std::vector<std::string> unexplained_divergences() const;
};

VerificationReport verify_all(double tol = kDefaultReportTolerance);

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_table(const VerificationReport& report);

struct EntropyComparison {
    std::uint64_t x_max;
    std::uint64_t max_gap;
    double h_prime_gaps;
    double h_uniform_gaps;
    double h_reals;
    bool gaps_below_uniform;
    bool uniform_below_reals;
};

// Empirical prime-gap entropy, ln(G_emp - 2), ln(x/ln x - 2).
EntropyComparison compare_entropies(std::uint64_t x_max, bool exclude_gap_one = false);

}  // namespace gapentropy::thresholds
