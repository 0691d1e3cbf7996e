#include "gapentropy/bounds.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <nlohmann/json.hpp>

#include "gapentropy/entropy.hpp"
#include "gapentropy/error.hpp"

namespace gapentropy::bounds {

namespace {

constexpr double kE = std::numbers::e;

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

}  // namespace

std::string_view to_string(BoundId id) {
    switch (id) {
        case BoundId::wolf: return "wolf";
        case BoundId::cramer_log2: return "cramer_log2";
        case BoundId::heath_brown: return "heath_brown";
        case BoundId::granville: return "granville";
        case BoundId::baker_harman: return "baker_harman";
        case BoundId::cramer_rh: return "cramer_rh";
        case BoundId::sinha_firoozbakht: return "sinha_firoozbakht";
        case BoundId::jaroma_power: return "jaroma_power";
        case BoundId::robin_upper: return "robin_upper";
        case BoundId::pnt_nth_prime: return "pnt_nth_prime";
        case BoundId::zhang_constant: return "zhang_constant";
        case BoundId::mertens_f: return "mertens_f";
    }
    return "unknown";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
    for (const auto& b : registry()) {
        if (to_string(b.id) == name) return b.id;
    }
    // Operation-style aliases.
    static const std::map<std::string_view, BoundId> aliases = {
        {"wolf_G", BoundId::wolf},          {"cramer_G", BoundId::cramer_log2},
        {"heath_brown_G", BoundId::heath_brown}, {"granville_G", BoundId::granville},
        {"baker_harman_G", BoundId::baker_harman}, {"cramer_rh_G", BoundId::cramer_rh},
        {"sinha_G", BoundId::sinha_firoozbakht}, {"jaroma_pow", BoundId::jaroma_power},
        {"pnt_nth", BoundId::pnt_nth_prime},  {"zhang_bound", BoundId::zhang_constant},
    };
    if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
    return std::nullopt;
}

double wolf_G(double x) {
    require(x > kE, "wolf_G requires x > e");
    const double l = std::log(x);
    return l * (l - 2.0 * std::log(l) + kWolfC);
}

double cramer_G(double x) {
    require(x > 1.0, "cramer_G requires x > 1");
    const double l = std::log(x);
    return l * l;
}

double heath_brown_G(double x) {
    require(x > kE, "heath_brown_G requires x > e");
    const double l = std::log(x);
    return l * (l + std::log(std::log(l)));
}

double granville_coefficient() { return 2.0 * std::exp(-entropy::kEulerGamma); }

double granville_G(double P) {
    require(P > 1.0, "granville_G requires P > 1");
    const double l = std::log(P);
    return granville_coefficient() * l * l;
}

double baker_harman_G(double P) {
    require(P > 0.0, "baker_harman_G requires P > 0");
    return std::pow(P, kBakerHarmanExponent);
}

double cramer_rh_G(double P) {
    require(P > 1.0, "cramer_rh_G requires P > 1");
    return std::sqrt(P) * std::log(P);
}

double sinha_G(double P, double P_next) {
    require(P > 1.0, "sinha_G requires P > 1");
    require(P_next > P, "sinha_G requires P_next > P");
    const double l = std::log(P);
    return l * l - 2.0 * std::log(P_next);
}

double pnt_nth(double n) {
    require(n >= 2.0, "pnt_nth requires n >= 2");
    return n * std::log(n);
}

double jaroma_pow(double n) {
    require(std::isfinite(n), "jaroma_pow requires a finite exponent");
    return std::pow(kJaromaBase, n);
}

RobinValue robin_upper(double n) {
    require(n > kE, "robin_upper requires n > e");
    const double l = std::log(n);
    return {n * l + n * (std::log(l) - kRobinConstant), n >= kRobinValidFrom};
}

Rational mertens_f(std::uint64_t k) {
    require(k >= 2, "mertens_f requires k >= 2");
    require(k % 2 == 0, "mertens_f requires even k");
    Rational r;
    std::uint64_t m = k;
    while (m % 2 == 0) m /= 2;
    auto fold = [&](std::uint64_t p) {
        // (p-1)/(p-2) is already in lowest terms; cancel across factors.
        std::uint64_t num = p - 1;
        std::uint64_t den = p - 2;
        const std::uint64_t g1 = std::gcd(num, r.den);
        const std::uint64_t g2 = std::gcd(den, r.num);
        r.num = (r.num / g2) * (num / g1);
        r.den = (r.den / g1) * (den / g2);
    };
    for (std::uint64_t p = 3; p <= m / p; p += 2) {
        if (m % p != 0) continue;
        fold(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) fold(m);
    return r;
}

std::uint64_t zhang_bound() { return kZhangBound; }

const std::vector<BoundFunction>& registry() {
    static const std::vector<BoundFunction> functions = {
        {BoundId::wolf, "G(x) = ln x (ln x - 2 ln ln x + c)", {{"c", kWolfC}}, kE, false, 1, 1.0,
         "largest gap below x; c stored as printed"},
        {BoundId::cramer_log2, "G(x) = ln^2 x", {}, 1.0, false, 1, 1.0, "Cramer's conjecture G(x) ~ ln^2 x"},
        {BoundId::heath_brown, "G(x) = ln x (ln x + ln ln ln x)", {}, kE, false, 1, 1.0,
         "conditional on the Riemann Hypothesis"},
        {BoundId::granville, "G(P) = 2 e^-gamma ln^2 P", {{"gamma", entropy::kEulerGamma}}, 1.0, false, 1, 1.0,
         "holds for infinitely many consecutive prime pairs; 2e^-gamma = 1.12292"},
        {BoundId::baker_harman, "G(P) = P^0.535", {{"exponent", kBakerHarmanExponent}}, 0.0, false, 1, 1.0,
         "big-O bound taken with constant 1"},
        {BoundId::cramer_rh, "G(P) = sqrt(P) ln P", {}, 1.0, false, 1, 1.0,
         "Cramer under the Riemann Hypothesis, constant 1"},
        {BoundId::sinha_firoozbakht, "G(P, P') = ln^2 P - 2 ln P'", {}, 1.0, false, 2, 1.0,
         "requires P' > P; the comparison subtracts a further 2"},
        {BoundId::jaroma_power, "P_n < 1.2^n", {{"base", kJaromaBase}}, -HUGE_VAL, false, 1, 1.0,
         "index form of the Jaroma bracket"},
        {BoundId::robin_upper, "P_n <= n ln n + n (ln ln n - 0.9385)", {{"constant", kRobinConstant}}, kE, false, 1,
         1.0, "proven for n >= 7022"},
        {BoundId::pnt_nth_prime, "P_n ~ n ln n", {}, 2.0, true, 1, 1.0, "prime number theorem"},
        {BoundId::zhang_constant, "liminf (P_{n+1} - P_n) < 7e7", {{"bound", static_cast<double>(kZhangBound)}},
         -HUGE_VAL, false, 0, 1.0, "constant, takes no input"},
        {BoundId::mertens_f, "f(k) = prod_{p | k, p > 2} (p-1)/(p-2)", {}, 2.0, true, 1, 1.0,
         "k even; relative frequency of gap k; empty product is 1"},
    };
    return functions;
}

const BoundFunction& lookup(BoundId id) {
    for (const auto& b : registry()) {
        if (b.id == id) return b;
    }
    throw DomainError("unknown bound id");
}

BoundEvaluation evaluate(BoundId id, const std::vector<double>& inputs) {
    BoundEvaluation out{id, inputs, std::nullopt, false, {}};
    const auto& fn = lookup(id);
    if (static_cast<int>(inputs.size()) != fn.arity) {
        out.message = std::string(to_string(id)) + " takes " + std::to_string(fn.arity) + " input(s)";
        return out;
    }
    try {
        switch (id) {
            case BoundId::wolf: out.value = wolf_G(inputs[0]); break;
            case BoundId::cramer_log2: out.value = cramer_G(inputs[0]); break;
            case BoundId::heath_brown: out.value = heath_brown_G(inputs[0]); break;
            case BoundId::granville: out.value = granville_G(inputs[0]); break;
            case BoundId::baker_harman: out.value = baker_harman_G(inputs[0]); break;
            case BoundId::cramer_rh: out.value = cramer_rh_G(inputs[0]); break;
            case BoundId::sinha_firoozbakht: out.value = sinha_G(inputs[0], inputs[1]); break;
            case BoundId::jaroma_power: out.value = jaroma_pow(inputs[0]); break;
            case BoundId::robin_upper: {
                const auto r = robin_upper(inputs[0]);
                out.value = r.value;
                if (!r.in_validity) out.message = "outside proven range n >= 7022";
                break;
            }
            case BoundId::pnt_nth_prime: out.value = pnt_nth(inputs[0]); break;
            case BoundId::zhang_constant: out.value = static_cast<double>(zhang_bound()); break;
            case BoundId::mertens_f: {
                const double k = inputs[0];
                if (!(k >= 2.0) || k != std::floor(k) || k > 9.2e18) throw DomainError("mertens_f requires an integer k >= 2");
                out.value = mertens_f(static_cast<std::uint64_t>(k)).to_double();
                break;
            }
        }
        out.in_domain = true;
    } catch (const DomainError& e) {
        out.value.reset();
        out.message = e.what();
    }
    return out;
}

nlohmann::json registry_to_json() {
    auto arr = nlohmann::json::array();
    for (const auto& b : registry()) {
        nlohmann::json entry;
        entry["id"] = to_string(b.id);
        entry["formula"] = b.formula;
        entry["constants"] = b.constants;
        entry["domain_lower"] = std::isfinite(b.domain_lower) ? nlohmann::json(b.domain_lower) : nlohmann::json(nullptr);
        entry["domain_inclusive"] = b.domain_inclusive;
        entry["arity"] = b.arity;
        entry["implicit_constant"] = b.implicit_constant;
        entry["notes"] = b.notes;
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace gapentropy::bounds
