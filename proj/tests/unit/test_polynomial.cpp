#include <doctest.h>

#include <algorithm>
#include <array>
#include <complex>

#include "shapesphere/errors.hpp"
#include "shapesphere/polynomial.hpp"

using namespace shapesphere;

TEST_CASE("real roots of a cubic") {
    // (Y - 1)(Y - 2)(Y + 3) = Y^3 - 7Y + 6
    const std::array<double, 4> c{6.0, -7.0, 0.0, 1.0};
    const auto r = polynomial_roots(c);
    REQUIRE(r.size() == 3);
    CHECK(r[0].real() == doctest::Approx(-3.0));
    CHECK(r[1].real() == doctest::Approx(1.0));
    CHECK(r[2].real() == doctest::Approx(2.0));
    for (const auto& y : r) CHECK(std::abs(y.imag()) < 1e-12);
}

TEST_CASE("complex pairs and evaluation") {
    // Y^2 + 1
    const std::array<double, 3> c{1.0, 0.0, 1.0};
    const auto r = polynomial_roots(c);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::complex<double>(0.0, -1.0)) < 1e-14);
    CHECK(std::abs(r[1] - std::complex<double>(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(evaluate_polynomial(c, {0.0, 1.0})) < 1e-15);
    CHECK(evaluate_polynomial(c, 2.0).real() == doctest::Approx(5.0));
}

TEST_CASE("negligible leading coefficients are trimmed") {
    const std::array<double, 5> c{-2.0, 1.0, 0.0, 1e-18, 0.0};
    CHECK(effective_degree(c) == 1);
    const auto r = polynomial_roots(c);
    REQUIRE(r.size() == 1);
    CHECK(r[0].real() == doctest::Approx(2.0));
    const std::array<double, 3> zero{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(effective_degree(zero), DegenerateInputError);
    CHECK_THROWS_AS(polynomial_roots(zero), DegenerateInputError);
    const std::array<double, 1> constant{3.0};
    CHECK(polynomial_roots(constant).empty());
}

TEST_CASE("clustered roots of a sextic") {
    // Roots 0.1, 0.11, ..., 0.15 and 1: polished values stay accurate.
    std::vector<double> c{1.0};
    for (double root : {0.1, 0.11, 0.12, 0.13, 0.14, 1.0}) {
        std::vector<double> n(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i] -= root * c[i];
            n[i + 1] += c[i];
        }
        c = n;
    }
    const auto r = polynomial_roots(c);
    REQUIRE(r.size() == 6);
    CHECK(r.back().real() == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& y : r) CHECK(std::abs(evaluate_polynomial(c, y)) < 1e-14);
}
