#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "gapentropy/error.hpp"
#include "gapentropy/quadrature.hpp"

using namespace gapentropy;
using doctest::Approx;

TEST_CASE("polynomials are exact") {
    const auto r = quadrature::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
    CHECK(r.value == Approx(9.0 - 3.0 + 3.0).epsilon(1e-14));
    CHECK(r.converged);
    CHECK(r.intervals == 1);
}

TEST_CASE("smooth transcendental integrals") {
    CHECK(quadrature::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
          Approx(2.0).epsilon(1e-12));
    CHECK(quadrature::integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0).value ==
          Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularities with breakpoints") {
    // int_0^1 ln x dx = -1
    const std::array<double, 4> br{1e-300, 1e-100, 1e-10, 1.0};
    quadrature::Options opt;
    opt.rel_tol = 1e-10;
    CHECK(quadrature::integrate([](double x) { return std::log(x); }, br, opt).value == Approx(-1.0).epsilon(1e-9));
    // int_0^1 x^-1/2 dx = 2
    CHECK(quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, br, opt).value ==
          Approx(2.0).epsilon(1e-8));
}

TEST_CASE("non-convergence is reported, not hidden") {
    quadrature::Options opt;
    opt.rel_tol = 1e-14;
    opt.max_intervals = 3;
    const auto r = quadrature::integrate([](double x) { return std::sin(50 * x); }, 0.0, 10.0, opt);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals <= 3);
}

TEST_CASE("bad breakpoints") {
    const std::array<double, 1> one{1.0};
    CHECK_THROWS_AS(quadrature::integrate([](double x) { return x; }, one), DomainError);
    const std::array<double, 3> unordered{0.0, 2.0, 1.0};
    CHECK_THROWS_AS(quadrature::integrate([](double x) { return x; }, unordered), DomainError);
}
