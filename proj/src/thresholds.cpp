#include "gapentropy/thresholds.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "gapentropy/bounds.hpp"
#include "gapentropy/entropy.hpp"
#include "gapentropy/error.hpp"
#include "gapentropy/sieve.hpp"

#ifndef GAPENTROPY_VERSION
#define GAPENTROPY_VERSION "0.0.0"
#endif

namespace gapentropy::thresholds {

namespace {

constexpr double kE = std::numbers::e;

double ln(double x) { return std::log(x); }

// Entropy-argument gap between uniform reals and a gap model: x/ln x - G(x).
double reals_minus(double x, double gap) { return x / ln(x) - gap; }

std::int64_t first_positive(const std::function<double(std::int64_t)>& g, std::int64_t start) {
    for (std::int64_t n = start; n < start + kScanCap; ++n) {
        if (g(n) > 0.0) return n;
    }
    throw ConvergenceError("integer scan reached its cap");
}

ClaimValue solve_claim(const std::function<double(double)>& g, roots::Bracket bracket) {
    return roots::solve(g, bracket, kClaimSolveTolerance).value;
}

std::uint64_t sinha_prime_threshold() {
    std::uint64_t previous = 0;
    std::uint64_t found = 0;
    std::int64_t steps = 0;
    sieve::for_each_prime(2, std::uint64_t{1} << 40, sieve::kDefaultSegmentSize, [&](sieve::Prime p) {
        if (previous != 0 && bounds::sinha_G(static_cast<double>(previous), static_cast<double>(p)) - 2.0 > 0.0) {
            found = previous;
            return false;
        }
        previous = p;
        return ++steps < kScanCap;
    });
    if (found == 0) throw ConvergenceError("prime-pair scan reached its cap");
    return found;
}

std::vector<ThresholdClaim> build_registry() {
    using bounds::heath_brown_G;
    std::vector<ThresholdClaim> r;

    auto root_claim = [&](std::string id, double paper, std::string equation, ClaimKind kind, std::string quote,
                          std::function<double(double)> g, roots::Bracket bracket, std::string notes = {}) {
        ThresholdClaim c;
        c.claim_id = std::move(id);
        c.paper_value = paper;
        c.equation = std::move(equation);
        c.kind = kind;
        c.quote = std::move(quote);
        c.notes = std::move(notes);
        c.g = std::move(g);
        c.bracket = bracket;
        c.compute = [g = c.g, bracket] { return solve_claim(g, bracket); };
        r.push_back(std::move(c));
        return &r.back();
    };

    root_claim("gpy16", 67.3611, "x/ln x = 16", ClaimKind::crossover, "approximately for x_max > 67.3611",
               [](double x) { return x / ln(x) - 16.0; }, {10.0, 200.0},
               "printed as the solution of ln(x/ln x - 2) > 16, which it is not; it solves x/ln x = 16")
        ->paper_inconsistency = true;

    root_claim("wolf_gap2", 9.17162, "ln x (ln x - 2 ln ln x + c) = 2", ClaimKind::domain_validity,
               "x_max > 9.17162", [](double x) { return bounds::wolf_G(x) - 2.0; }, {kE + 0.01, 20.0},
               "argument ln(G(x) - 2) becomes positive");

    root_claim("cramer_reals", 93.3545, "x = ln^3 x", ClaimKind::crossover, "x_max > 93.3545",
               [](double x) { return x - std::pow(ln(x), 3); }, {50.0, 200.0},
               "ln(x/ln x - 2) = ln(ln^2 x - 2)");

    root_claim("hb_lower", 5.69781, "ln x (ln x + ln ln ln x) = 2", ClaimKind::domain_validity,
               "5.69781 < x < 8.43901", [](double x) { return heath_brown_G(x) - 2.0; }, {3.0, 8.0});

    root_claim("hb_equal_low", 8.43901, "x/ln x = ln x (ln x + ln ln ln x)", ClaimKind::crossover,
               "5.69781 < x < 8.43901", [](double x) { return reals_minus(x, heath_brown_G(x)); }, {7.0, 20.0},
               "lower root");

    root_claim("hb_equal_high", 120.027, "x/ln x = ln x (ln x + ln ln ln x)", ClaimKind::crossover,
               "always true for x >120.027", [](double x) { return reals_minus(x, heath_brown_G(x)); },
               {50.0, 200.0}, "upper root");

    root_claim("granville", 128.703, "P/ln P = 2 e^-gamma ln^2 P", ClaimKind::crossover, "gives P_n > 128.703",
               [](double p) { return reals_minus(p, bounds::granville_G(p)); }, {50.0, 200.0})
        ->companion_prime = 131;

    root_claim("baker_harman", 3.6532, "P^0.535 = 2", ClaimKind::domain_validity, "P_n > 3.6532",
               [](double p) { return bounds::baker_harman_G(p) - 2.0; }, {1.0, 10.0})
        ->companion_prime = 5;

    root_claim("cramer_rh", 5503.66, "P = ln^4 P", ClaimKind::crossover, "P_n > 5503.66",
               [](double p) { return p - std::pow(ln(p), 4); }, {1000.0, 10000.0},
               "ln(P/ln P - 2) = ln(sqrt(P) ln P - 2)")
        ->companion_prime = 5507;

    {
        ThresholdClaim c;
        c.claim_id = "sinha_prime";
        c.paper_value = 17.0;
        c.equation = "smallest consecutive primes P < P' with ln^2 P - 2 ln P' - 2 > 0";
        c.kind = ClaimKind::domain_validity;
        c.quote = "true for P_n >= 17 and P_{n+1} >= 19";
        c.notes = "uses the 2 ln P' form; the bare inequality carries ln P'";
        c.compute = [] { return static_cast<double>(sinha_prime_threshold()); };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "sinha_index";
        c.paper_value = 9.0;
        c.equation = "smallest n with ln^2(n ln n) - 2 ln((n+1) ln(n+1)) - 2 > 0";
        c.kind = ClaimKind::domain_validity;
        c.quote = "which is true for n >= 9";
        c.compute = [] {
            const auto g = [](std::int64_t n) {
                const double p = bounds::pnt_nth(static_cast<double>(n));
                const double q = bounds::pnt_nth(static_cast<double>(n + 1));
                return bounds::sinha_G(p, q) - 2.0;
            };
            return static_cast<double>(first_positive(g, 2));
        };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "jaroma";
        c.paper_value = 16.0;
        c.equation = "smallest n with ln^2(1.2^n) - 2 ln(1.2^(n+1)) - 2 > 0";
        c.kind = ClaimKind::domain_validity;
        c.quote = "n in +Z and n >= 16";
        c.compute = [] {
            const auto g = [](std::int64_t n) {
                const double a = static_cast<double>(n) * ln(bounds::kJaromaBase);
                const double b = static_cast<double>(n + 1) * ln(bounds::kJaromaBase);
                return a * a - 2.0 * b - 2.0;
            };
            return static_cast<double>(first_positive(g, 1));
        };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "robin_window";
        c.paper_value = IntegerWindow{16, 32};
        c.equation = "ln(R(n)/ln R(n) - 2) > ln(ln^2 R(n) - 2 ln R(n+1) - 2), R(n) = n ln n + n (ln ln n - 0.9385)";
        c.kind = ClaimKind::crossover;
        c.quote = "But this is true only for 16 <= n <= 32";
        c.notes = "the printed left-hand denominator lacks parentheses; read as ln(R(n))";
        c.interpretation_dependent = true;
        c.compute = []() -> ClaimValue {
            const auto w = robin_window();
            if (!w) throw ConvergenceError("inequality never holds on the scanned range");
            return *w;
        };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "envelope_integral";
        c.paper_value = 2.57231e7;
        c.equation = "-int_{e+delta}^{7e7} (1/ln ln k) ln(1/ln ln k) dk, delta = 1e-6";
        c.kind = ClaimKind::integral_value;
        c.quote = "Solving we obtain 2.57231 x 10^7";
        c.notes = "printed lower limit is 2; the integrand is undefined on [2, e]";
        c.compute = [] {
            return entropy::envelope_entropy_integral(static_cast<double>(bounds::zhang_bound()),
                                                      entropy::kDefaultEnvelopeDelta);
        };
        r.push_back(std::move(c));
    }

    const LogDomainNumber zhang_floor{1, static_cast<double>(bounds::kZhangBound)};
    const LogDomainNumber random_floor = LogDomainNumber::real(3e7).exp().plus(2.0).exp();
    const LogDomainNumber triple{3, 3e7};
    {
        ThresholdClaim c;
        c.claim_id = "zhang_real_floor";
        c.paper_value = zhang_floor;
        c.equation = "ln x = 7e7";
        c.kind = ClaimKind::symbolic;
        c.quote = "we obtain the exact number x = e^{7 x 10^7}";
        c.symbolic_checks = [zhang_floor] {
            return std::vector<SymbolicCheck>{
                {"ln x == 7e7", zhang_floor.ln() == LogDomainNumber::real(static_cast<double>(bounds::zhang_bound()))},
                {"exp(ln x) == x", zhang_floor.ln().exp() == zhang_floor},
                {"x > e^(1e6)", zhang_floor > LogDomainNumber{1, 1e6}},
            };
        };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "random_gap_floor";
        c.paper_value = random_floor;
        c.equation = "ln(ln x - 2) = 3e7";
        c.kind = ClaimKind::symbolic;
        c.quote = "The entropy is therefore x = e^{2+e^{3 x 10^7}}";
        c.notes = "uses G(x_max) = 3e7 as printed here, while the Zhang bound elsewhere is 7e7";
        c.symbolic_checks = [random_floor, zhang_floor] {
            return std::vector<SymbolicCheck>{
                {"ln x == 2 + e^(3e7)", random_floor.ln() == LogDomainNumber{1, 3e7}.plus(2.0)},
                {"ln(ln x - 2) == 3e7", random_floor.ln().plus(-2.0).ln() == LogDomainNumber::real(3e7)},
                {"x > e^(7e7)", random_floor > zhang_floor},
            };
        };
        r.push_back(std::move(c));
    }
    {
        ThresholdClaim c;
        c.claim_id = "triple_exp";
        c.paper_value = triple;
        c.equation = "x = exp(exp(exp(3e7)))";
        c.kind = ClaimKind::symbolic;
        c.quote = "it is sufficient that x >= exp(exp(exp[3 x 10^7]))";
        c.symbolic_checks = [triple, random_floor] {
            // ln(ln x / ln ln x) = ln ln x - ln ln ln x
            const LogDomainNumber log_ratio = triple.ln().ln().plus(-triple.ln().ln().ln().to_double());
            return std::vector<SymbolicCheck>{
                {"ln ln ln x == 3e7", triple.ln().ln().ln() == LogDomainNumber::real(3e7)},
                {"ln(ln x / ln ln x) >= 3e7", log_ratio >= LogDomainNumber::real(3e7)},
                {"x > e^(2+e^(3e7))", triple > random_floor},
            };
        };
        r.push_back(std::move(c));
    }
    return r;
}

void validate(const std::vector<ThresholdClaim>& registry) {
    for (const auto& c : registry) {
        if (!c.g || !c.bracket) continue;
        const double glo = c.g(c.bracket->lo);
        const double ghi = c.g(c.bracket->hi);
        if (!(glo * ghi < 0.0)) throw std::logic_error("claim " + c.claim_id + ": bracket has no sign change");
        const double v = std::get<double>(c.paper_value);
        if ((c.g(0.9 * v) > 0.0) == (c.g(1.1 * v) > 0.0))
            throw std::logic_error("claim " + c.claim_id + ": equation does not change sign around the printed value");
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json value_to_json(const ClaimValue& v) {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* w = std::get_if<IntegerWindow>(&v)) return {{"first", w->first}, {"last", w->last}};
    const auto& t = std::get<LogDomainNumber>(v);
    return {{"tower_height", t.height()}, {"top_value", t.top()}, {"text", t.to_string()}};
}

}  // namespace

std::string format_value(const ClaimValue& value) {
    if (const auto* d = std::get_if<double>(&value)) return fmt::format("{:.6g}", *d);
    if (const auto* w = std::get_if<IntegerWindow>(&value)) return fmt::format("[{}, {}]", w->first, w->last);
    return std::get<LogDomainNumber>(value).to_string();
}

std::string_view to_string(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::crossover: return "crossover";
        case ClaimKind::domain_validity: return "domain_validity";
        case ClaimKind::integral_value: return "integral_value";
        case ClaimKind::symbolic: return "symbolic";
    }
    return "unknown";
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::REPRODUCED: return "REPRODUCED";
        case Status::DIVERGENT: return "DIVERGENT";
        case Status::SYMBOLIC: return "SYMBOLIC";
        case Status::INTERPRETATION_DEPENDENT: return "INTERPRETATION_DEPENDENT";
    }
    return "unknown";
}

const std::vector<ThresholdClaim>& claim_registry() {
    static const std::vector<ThresholdClaim> registry = [] {
        auto r = build_registry();
        validate(r);
        return r;
    }();
    return registry;
}

const ThresholdClaim& find_claim(std::string_view claim_id) {
    for (const auto& c : claim_registry()) {
        if (c.claim_id == claim_id) return c;
    }
    throw DomainError("unknown claim: " + std::string(claim_id));
}

std::optional<IntegerWindow> robin_window(std::int64_t cap) {
    const auto R = [](double n) { return bounds::robin_upper(n).value; };
    std::optional<IntegerWindow> window;
    for (std::int64_t n = 3; n <= cap; ++n) {
        const double rn = R(static_cast<double>(n));
        const double rn1 = R(static_cast<double>(n + 1));
        const double lhs_arg = rn / ln(rn) - 2.0;
        const double rhs_arg = ln(rn) * ln(rn) - 2.0 * ln(rn1) - 2.0;
        const bool holds = lhs_arg > 0.0 && rhs_arg > 0.0 && ln(lhs_arg) > ln(rhs_arg);
        if (holds) {
            if (!window) window = IntegerWindow{n, n};
            else window->last = n;
        } else if (window) {
            break;
        }
    }
    return window;
}

std::vector<std::string> VerificationReport::unexplained_divergences() const {
    std::vector<std::string> out;
    for (const auto& c : claims) {
        if (c.status == Status::DIVERGENT && !c.paper_inconsistency) out.push_back(c.claim_id);
    }
    return out;
}

VerificationReport verify_all(double tol) {
    if (!(tol > 0.0)) throw DomainError("verification tolerance must be > 0");
    VerificationReport report;
    report.tolerance = tol;
    report.timestamp = utc_timestamp();
    report.tool_version = GAPENTROPY_VERSION;

    for (const auto& claim : claim_registry()) {
        ClaimResult res;
        res.claim_id = claim.claim_id;
        res.equation = claim.equation;
        res.quote = claim.quote;
        res.notes = claim.notes;
        res.kind = claim.kind;
        res.paper_value = claim.paper_value;
        res.paper_inconsistency = claim.paper_inconsistency;
        res.companion_expected = claim.companion_prime;
        res.status = Status::DIVERGENT;

        try {
            if (claim.kind == ClaimKind::symbolic) {
                res.checks = claim.symbolic_checks();
                bool ok = true;
                for (const auto& ch : res.checks) {
                    ok = ok && ch.passed;
                    if (!ch.passed) res.diagnostic += "failed: " + ch.description + "; ";
                }
                res.computed = claim.paper_value;
                res.status = ok ? Status::SYMBOLIC : Status::DIVERGENT;
            } else {
                res.computed = claim.compute();
                if (const auto* v = std::get_if<double>(&*res.computed)) {
                    const double paper = std::get<double>(claim.paper_value);
                    res.relative_error = std::abs(*v - paper) / std::abs(paper);
                    res.status = *res.relative_error < tol ? Status::REPRODUCED : Status::DIVERGENT;
                    if (claim.companion_prime) {
                        res.companion_computed = sieve::next_prime_above(*v);
                        if (*res.companion_computed != *claim.companion_prime) {
                            res.status = Status::DIVERGENT;
                            res.diagnostic = "next prime above the computed threshold differs";
                        }
                    }
                }
                if (claim.interpretation_dependent) {
                    res.status = Status::INTERPRETATION_DEPENDENT;
                    if (*res.computed != claim.paper_value) {
                        res.diagnostic = "computed " + format_value(*res.computed) + " differs from printed " +
                                         format_value(claim.paper_value) + " under the implemented reading";
                        if (const auto* w = std::get_if<IntegerWindow>(&*res.computed); w && w->last == kScanCap)
                            res.diagnostic += "; holds for every scanned n from " + std::to_string(w->first) +
                                              " to the scan cap " + std::to_string(kScanCap);
                    }
                }
            }
        } catch (const std::exception& e) {
            res.status = Status::DIVERGENT;
            res.diagnostic = e.what();
        }
        report.claims.push_back(std::move(res));
    }
    return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["tolerance"] = report.tolerance;
    j["timestamp"] = report.timestamp;
    j["tool_version"] = report.tool_version;
    j["log_base"] = "natural log (ln) throughout";
    auto& arr = j["claims"] = nlohmann::json::array();
    for (const auto& c : report.claims) {
        nlohmann::json e;
        e["claim_id"] = c.claim_id;
        e["kind"] = to_string(c.kind);
        e["equation"] = c.equation;
        e["paper"] = value_to_json(c.paper_value);
        e["computed"] = c.computed ? value_to_json(*c.computed) : nlohmann::json(nullptr);
        e["rel_error"] = c.relative_error ? nlohmann::json(*c.relative_error) : nlohmann::json(nullptr);
        e["status"] = to_string(c.status);
        e["quote"] = c.quote;
        e["notes"] = c.notes;
        e["paper_inconsistency"] = c.paper_inconsistency;
        if (c.companion_expected) {
            e["companion_prime"] = {{"paper", *c.companion_expected},
                                    {"computed", c.companion_computed ? nlohmann::json(*c.companion_computed)
                                                                      : nlohmann::json(nullptr)}};
        }
        if (!c.checks.empty()) {
            auto& checks = e["checks"] = nlohmann::json::array();
            for (const auto& ch : c.checks) checks.push_back({{"check", ch.description}, {"passed", ch.passed}});
        }
        if (!c.diagnostic.empty()) e["diagnostic"] = c.diagnostic;
        arr.push_back(std::move(e));
    }
    return j;
}

std::string report_to_table(const VerificationReport& report) {
    std::ostringstream out;
    out << fmt::format("# natural log throughout; tolerance {:g}; {} {}\n", report.tolerance, report.tool_version,
                       report.timestamp);
    out << fmt::format("{:<18} {:<16} {:>24} {:>24} {:>11}  {}\n", "claim", "kind", "paper", "computed", "rel_err",
                       "status");
    for (const auto& c : report.claims) {
        out << fmt::format("{:<18} {:<16} {:>24} {:>24} {:>11}  {}", c.claim_id, to_string(c.kind),
                           format_value(c.paper_value), c.computed ? format_value(*c.computed) : "-",
                           c.relative_error ? fmt::format("{:.3g}", *c.relative_error) : "-", to_string(c.status));
        if (c.companion_computed) out << fmt::format("  next prime {}", *c.companion_computed);
        if (!c.diagnostic.empty()) out << "  (" << c.diagnostic << ")";
        out << '\n';
    }
    return out.str();
}

EntropyComparison compare_entropies(std::uint64_t x_max, bool exclude_gap_one) {
    if (x_max < 1000) throw DomainError("compare_entropies requires x_max >= 1000");
    const auto stats = sieve::gap_statistics(sieve::PrimeRange(x_max));
    EntropyComparison out;
    out.x_max = x_max;
    out.max_gap = stats.max_gap.gap;
    out.h_prime_gaps = entropy::empirical_gap_entropy(stats.histogram, exclude_gap_one).value;
    out.h_uniform_gaps = entropy::h_uniform_gaps(static_cast<double>(stats.max_gap.gap)).value;
    out.h_reals = entropy::h_real(static_cast<double>(x_max)).value;
    out.gaps_below_uniform = out.h_prime_gaps < out.h_uniform_gaps;
    out.uniform_below_reals = out.h_uniform_gaps < out.h_reals;
    return out;
}

}  // namespace gapentropy::thresholds
