#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "degenstir/degenerate.hpp"

using namespace degenstir;

namespace {

MultiPoly random_poly(std::mt19937& rng, unsigned max_deg = 2, unsigned max_terms = 3) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 3);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    MultiPoly p;
    for (unsigned t = 0; t < max_terms; ++t)
        p += MultiPoly::monomial(deg(rng), deg(rng), Rational(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST_CASE("generalized falling factorial") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();
    CHECK(deg_falling(x, 0) == MultiPoly(1));
    CHECK(deg_falling(x, 1) == x);
    CHECK(deg_falling(x, 2) == x * x - l * x);
    CHECK(deg_falling(x, 3) == x * (x - l) * (x - l * Rational(2)));
    // at lambda=1 this is the classical falling factorial: (1)_2 = 0
    CHECK(deg_falling(MultiPoly(1), 2).specialize(std::nullopt, Rational(1)).is_zero());
    // at lambda=0 it degenerates to the plain power
    for (unsigned n = 0; n <= 10; ++n)
        for (const MultiPoly& a : {x, x * Rational(2) + MultiPoly(3), MultiPoly(Rational(5, 7))})
            CHECK(deg_falling(a, n).specialize(std::nullopt, Rational(0)) ==
                  a.specialize(std::nullopt, Rational(0)).pow(n));
}

TEST_CASE("generalized binomial coefficient") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();
    const MultiPoly one(Rational(1));
    CHECK(deg_binom(x, 0) == MultiPoly(1));
    CHECK(deg_binom(x, 2) == (x * x - l * x) / Rational(2));
    const MultiPoly b = deg_binom(one + x, 2);
    CHECK(b == ((one + x) * (one + x) - l * (one + x)) / Rational(2));
    // at lambda=1, x=0 this is C(1,2) = 0; at lambda=0, x=0 it is 1/2
    CHECK(b.specialize(Rational(0), Rational(1)).is_zero());
    CHECK(b.specialize(Rational(0), Rational(0)).constant_value() == Rational(1, 2));
}

TEST_CASE("binomial-product series of the generalized exponential") {
    const MultiPoly x = MultiPoly::var_x();
    const EgfSeries zero_base = build_deg_power(MultiPoly(), 5);
    CHECK(zero_base == EgfSeries::identity(5));

    // base a=1 at lambda:=1 is the binomial series of 1+t
    const EgfSeries unit = build_deg_power(MultiPoly(1), 5);
    for (unsigned n = 0; n <= 5; ++n) {
        const MultiPoly c = unit.coeff(n).specialize(std::nullopt, Rational(1));
        CHECK(c == (n <= 1 ? MultiPoly(1) : MultiPoly()));
    }

    // base a=x at lambda:=0 is e^{xt}
    const EgfSeries ex = build_deg_power(x, 5);
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(ex.coeff(n).specialize(std::nullopt, Rational(0)) == x.pow(n));

    // coefficients are exactly the generalized falling factorials
    for (unsigned n = 0; n <= 5; ++n) CHECK(ex.coeff(n) == deg_falling(x, n));
}

TEST_CASE("logarithmic construction agrees with the product construction") {
    const MultiPoly x = MultiPoly::var_x();
    for (const MultiPoly& a : {x, MultiPoly(1), x * Rational(2) + MultiPoly(3)})
        CHECK(build_deg_power_log(a, 16) == build_deg_power(a, 16));
}

TEST_CASE("exponent additivity of the generalized power series") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 6; ++trial) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(egf_mul(build_deg_power(a, 12), build_deg_power(b, 12)) ==
              build_deg_power(a + b, 12));
    }
}

TEST_CASE("vandermonde convolution for generalized binomials") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();

    auto both = chu_vandermonde_lambda(x, MultiPoly(), 3);
    CHECK(both.first == both.second);
    CHECK(both.second == deg_binom(x, 3));

    both = chu_vandermonde_lambda(x, x, 2);
    CHECK(both.first == both.second);
    CHECK(both.second == (x * x * Rational(4) - l * x * Rational(2)) / Rational(2));

    for (unsigned n = 0; n <= 10; ++n)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            const MultiPoly y(Rational(j, 2));
            const auto [lhs, rhs] = chu_vandermonde_lambda(x, y, n);
            CHECK(lhs == rhs);
        }

    const auto trivial = chu_vandermonde_lambda(x, x, 0);
    CHECK(trivial.first == MultiPoly(1));
    CHECK(trivial.second == MultiPoly(1));
}
