#include <doctest.h>

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "gapentropy/bounds.hpp"
#include "gapentropy/error.hpp"
#include "oracles.hpp"

using namespace gapentropy;
using namespace gapentropy::bounds;
using doctest::Approx;

namespace {
constexpr double e = std::numbers::e;
}

TEST_CASE("wolf_G") {
    CHECK_THROWS_AS(wolf_G(e), DomainError);
    CHECK(wolf_G(std::exp(e)) == Approx(e * (e - 2 + 0.2778769)).epsilon(1e-14));
    CHECK(wolf_G(std::exp(e)) == Approx(2.70784).epsilon(1e-5));
    const double root = oracle::bisect([](double x) { return wolf_G(x) - 2; }, e + 0.01, 20);
    CHECK(root == Approx(9.17162).epsilon(1e-6));
    CHECK(kWolfC == 0.2778769);
}

TEST_CASE("cramer_G") {
    CHECK(cramer_G(e) == Approx(1.0).epsilon(1e-15));
    CHECK(cramer_G(e * e) == Approx(4.0).epsilon(1e-15));
    CHECK(cramer_G(93.3545) == Approx(20.578962).epsilon(1e-6));
    CHECK_THROWS_AS(cramer_G(1.0), DomainError);
}

TEST_CASE("heath_brown_G") {
    CHECK(heath_brown_G(std::exp(e)) == Approx(e * e).epsilon(1e-14));
    const double root = oracle::bisect([](double x) { return heath_brown_G(x) - 2; }, 3, 8);
    CHECK(root == Approx(5.69781).epsilon(1e-6));
    CHECK(heath_brown_G(120.027) == Approx(25.0698).epsilon(1e-5));
    CHECK(heath_brown_G(120.027) == Approx(120.027 / std::log(120.027)).epsilon(1e-5));
    CHECK_THROWS_AS(heath_brown_G(2.0), DomainError);
}

TEST_CASE("granville_G") {
    CHECK(granville_G(e) == Approx(1.12292).epsilon(1e-5));
    CHECK(granville_coefficient() == Approx(1.1229189671337703).epsilon(1e-15));
    CHECK(granville_G(128.703) == Approx(26.495698).epsilon(1e-6));
    CHECK_THROWS_AS(granville_G(1.0), DomainError);
    for (double P = 1.5; P < 1e12; P *= 3.7) CHECK(granville_G(P) / cramer_G(P) == Approx(1.12291896713377).epsilon(1e-13));
}

TEST_CASE("baker_harman_G") {
    CHECK(baker_harman_G(1.0) == 1.0);
    CHECK(std::exp(std::log(2.0) / 0.535) == Approx(3.6532).epsilon(1e-4));
    CHECK(oracle::bisect([](double p) { return baker_harman_G(p) - 2; }, 1, 10) == Approx(3.653195).epsilon(1e-6));
    CHECK(baker_harman_G(32.0) == Approx(std::pow(2.0, 2.675)).epsilon(1e-14));
    CHECK(baker_harman_G(32.0) == Approx(6.386387).epsilon(1e-6));
    CHECK_THROWS_AS(baker_harman_G(0.0), DomainError);
}

TEST_CASE("cramer_rh_G") {
    CHECK(cramer_rh_G(e * e) == Approx(2 * e).epsilon(1e-14));
    CHECK(cramer_rh_G(5503.66) == Approx(638.98).epsilon(1e-4));
    CHECK(cramer_rh_G(4.0) == Approx(2.772589).epsilon(1e-6));
    CHECK_THROWS_AS(cramer_rh_G(1.0), DomainError);
}

TEST_CASE("sinha_G") {
    CHECK(sinha_G(17, 19) == Approx(std::pow(std::log(17.0), 2) - 2 * std::log(19.0)).epsilon(1e-14));
    CHECK(sinha_G(17, 19) == Approx(2.138220).epsilon(1e-6));
    CHECK(sinha_G(17, 19) - 2 > 0);
    CHECK(sinha_G(13, 17) == Approx(0.912539).epsilon(1e-6));
    CHECK(sinha_G(13, 17) - 2 < 0);
    CHECK_THROWS_AS(sinha_G(17, 17), DomainError);
    CHECK_THROWS_AS(sinha_G(19, 17), DomainError);
}

TEST_CASE("pnt_nth, jaroma_pow, robin_upper") {
    CHECK(pnt_nth(e) == Approx(e).epsilon(1e-15));
    CHECK(pnt_nth(2) == Approx(1.386294).epsilon(1e-6));
    CHECK(pnt_nth(1000) == Approx(6907.755279).epsilon(1e-9));
    CHECK(pnt_nth(1000) / 7919 == Approx(0.8723).epsilon(1e-4));
    CHECK_THROWS_AS(pnt_nth(1.5), DomainError);

    CHECK(jaroma_pow(0) == 1.0);
    CHECK(jaroma_pow(1) == Approx(1.2).epsilon(1e-15));
    CHECK(jaroma_pow(16) == Approx(18.488426).epsilon(1e-7));

    const auto r = robin_upper(7022);
    CHECK(r.value == Approx(70918.6136).epsilon(1e-8));
    CHECK(r.in_validity);
    CHECK(robin_upper(e * e).value == Approx(12.965186).epsilon(1e-6));
    CHECK_FALSE(robin_upper(16).in_validity);
    CHECK_FALSE(robin_upper(7021).in_validity);
    CHECK_THROWS_AS(robin_upper(e), DomainError);
}

TEST_CASE("mertens_f exact values") {
    CHECK(mertens_f(6) == Rational{2, 1});
    CHECK(mertens_f(8) == Rational{1, 1});
    CHECK(mertens_f(30) == Rational{8, 3});
    CHECK(mertens_f(2) == Rational{1, 1});
    CHECK(mertens_f(18) == Rational{2, 1});
    // 2*3*5*7: 2 * 4/3 * 6/5 = 16/5
    CHECK(mertens_f(210) == Rational{16, 5});
    CHECK_THROWS_AS(mertens_f(7), DomainError);
    CHECK_THROWS_AS(mertens_f(0), DomainError);
}

TEST_CASE("mertens_f properties") {
    double worst_ratio = 0.0;
    for (std::uint64_t k = 2; k <= 1000000; k += 2) {
        const auto f = mertens_f(k);
        const bool power_of_two = (k & (k - 1)) == 0;
        CHECK(f.num >= f.den);
        if (power_of_two) CHECK(f == Rational{1, 1});
        else if (f == Rational{1, 1}) FAIL("f(k) == 1 for non power of two k = " << k);
        if (k >= 4) worst_ratio = std::max(worst_ratio, f.to_double() / std::log(std::log(static_cast<double>(k))));
    }
    // Monitoring only: the O(ln ln k) constant over [4, 10^6] is finite.
    MESSAGE("max f(k)/ln ln k over [4, 1e6] = " << worst_ratio);
    CHECK(std::isfinite(worst_ratio));
}

TEST_CASE("zhang_bound") {
    CHECK(zhang_bound() == 70000000);
    CHECK(zhang_bound() % 2 == 0);
    CHECK(std::log(static_cast<double>(zhang_bound())) == Approx(18.0640058).epsilon(1e-8));
}

TEST_CASE("wolf below cramer from 100 on") {
    for (double x = 100; x < 1e300; x *= 1.9) CHECK(wolf_G(x) < cramer_G(x));
}

TEST_CASE("registry and evaluate") {
    CHECK(registry().size() == 12);
    for (const auto& b : registry()) {
        CHECK(b.implicit_constant == 1.0);
        CHECK(bound_from_string(to_string(b.id)) == b.id);
    }
    CHECK(bound_from_string("granville_G") == BoundId::granville);
    CHECK_FALSE(bound_from_string("nope").has_value());

    const auto ok = evaluate(BoundId::mertens_f, {6});
    CHECK(ok.in_domain);
    CHECK(*ok.value == 2.0);
    const auto bad = evaluate(BoundId::wolf, {2.0});
    CHECK_FALSE(bad.in_domain);
    CHECK_FALSE(bad.value.has_value());
    CHECK_FALSE(evaluate(BoundId::sinha_firoozbakht, {17}).in_domain);
    CHECK(*evaluate(BoundId::sinha_firoozbakht, {17, 19}).value == Approx(2.138220).epsilon(1e-6));
    CHECK(*evaluate(BoundId::zhang_constant, {}).value == 7e7);
    CHECK_FALSE(evaluate(BoundId::mertens_f, {6.5}).in_domain);

    const auto j = registry_to_json();
    CHECK(j.size() == 12);
    CHECK(j[0]["id"] == "wolf");
    CHECK(j[0]["constants"]["c"] == 0.2778769);
}
