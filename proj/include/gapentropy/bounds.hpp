#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

// Gap-size and prime-size formulas. Asymptotic "~" and big-O statements are
// evaluated as exact formulas with implicit constant 1; every threshold
// derived from them assumes exactly that.
namespace gapentropy::bounds {

// Wolf's fitted constant, as printed.
inline constexpr double kWolfC = 0.2778769;
inline constexpr double kBakerHarmanExponent = 0.535;
inline constexpr double kRobinConstant = 0.9385;
inline constexpr double kJaromaBase = 1.2;
inline constexpr double kRobinValidFrom = 7022.0;
inline constexpr std::uint64_t kZhangBound = 70000000;

enum class BoundId {
    wolf,
    cramer_log2,
    heath_brown,
    granville,
    baker_harman,
    cramer_rh,
    sinha_firoozbakht,
    jaroma_power,
    robin_upper,
    pnt_nth_prime,
    zhang_constant,
    mertens_f,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> bound_from_string(std::string_view name);

// ln x (ln x - 2 ln ln x + c), x > e.
double wolf_G(double x);
// ln^2 x, x > 1.
double cramer_G(double x);
// ln x (ln x + ln ln ln x), x > e.
double heath_brown_G(double x);
// 2 e^-gamma ln^2 P, P > 1.
double granville_G(double P);
// 2 e^-gamma = 1.12292...
double granville_coefficient();
// P^0.535, P > 0.
double baker_harman_G(double P);
// sqrt(P) ln P, P > 1.
double cramer_rh_G(double P);
// ln^2 P - 2 ln P_next, P_next > P > 1. The "-2" of the entropy comparison
// is applied by the threshold layer.
double sinha_G(double P, double P_next);
// n ln n, n >= 2.
double pnt_nth(double n);
// 1.2^n.
double jaroma_pow(double n);

struct RobinValue {
    double value;
    // The upper bound is proven only from n = 7022 on.
    bool in_validity;
};

// n ln n + n (ln ln n - 0.9385), n > e.
RobinValue robin_upper(double n);

struct Rational {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Product over odd primes p | k of (p-1)/(p-2), reduced; k even, k >= 2.
Rational mertens_f(std::uint64_t k);

std::uint64_t zhang_bound();

struct BoundFunction {
    BoundId id;
    std::string formula;
    std::map<std::string, double> constants;
    // Inputs must exceed this (or, with domain_inclusive, reach it).
    double domain_lower;
    bool domain_inclusive;
    int arity;
    double implicit_constant = 1.0;
    std::string notes;
};

const std::vector<BoundFunction>& registry();
const BoundFunction& lookup(BoundId id);

struct BoundEvaluation {
    BoundId id;
    std::vector<double> inputs;
    std::optional<double> value;
    bool in_domain = false;
    std::string message;
};

// Never throws on domain violations; reports them via in_domain.
BoundEvaluation evaluate(BoundId id, const std::vector<double>& inputs);

nlohmann::json registry_to_json();

}  // namespace gapentropy::bounds
