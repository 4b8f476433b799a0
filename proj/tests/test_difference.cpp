#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "degenstir/difference.hpp"
#include "degenstir/stirling.hpp"

using namespace degenstir;

namespace {

MultiPoly random_x_poly(std::mt19937& rng, unsigned max_deg) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    MultiPoly p;
    for (unsigned d = 0; d <= max_deg; ++d)
        p += MultiPoly::var_x().pow(d) * Rational(num(rng), den(rng));
    return p;
}

}  // namespace

TEST_CASE("shift_x translates the x variable") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();
    CHECK(shift_x(x * x, Rational(1)) == x * x + x * Rational(2) + MultiPoly(1));
    CHECK(shift_x(x * l, Rational(-2)) == x * l - l * Rational(2));
    CHECK(shift_x(MultiPoly(5), Rational(7)) == MultiPoly(5));
    // composition: shifting by a then b equals shifting by a+b
    std::mt19937 rng(11);
    const MultiPoly f = random_x_poly(rng, 5);
    CHECK(shift_x(shift_x(f, Rational(1, 2)), Rational(3, 2)) == shift_x(f, Rational(2)));
}

TEST_CASE("delta_power closed form matches repeated shift-subtract") {
    const MultiPoly x = MultiPoly::var_x();
    CHECK(delta_power(0, 0) == MultiPoly(1));
    CHECK(delta_power(0, 5) == x.pow(5));
    CHECK(delta_power(1, 2) == x * Rational(2) + MultiPoly(1));
    CHECK(delta_power(2, 3) == x * Rational(6) + MultiPoly(6));
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned m = 0; m <= 6; ++m) {
            MultiPoly f = x.pow(m);
            for (unsigned i = 0; i < k; ++i) f = delta_poly(f);
            CHECK(delta_power(k, m) == f);
        }
}

TEST_CASE("forward difference is linear") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = random_x_poly(rng, 6), g = random_x_poly(rng, 6);
        CHECK(delta_poly(f + g) == delta_poly(f) + delta_poly(g));
        CHECK(delta_poly(f * Rational(-7, 3)) == delta_poly(f) * Rational(-7, 3));
    }
}

TEST_CASE("difference at zero bridges to the partition triangle") {
    CHECK(delta_at_zero(2, 3) == Rational(6));
    CHECK(delta_at_zero(3, 2) == Rational(0));
    CHECK(delta_at_zero(0, 0) == Rational(1));
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(delta_at_zero(k, n) / Rational(factorial(k)) == stirling2(n, k));
}

TEST_CASE("delta_power_at evaluates at rational base points") {
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned n = 0; n <= 5; ++n)
            for (const Rational& base : {Rational(0), Rational(1, 2), Rational(-3, 4)})
                CHECK(delta_power_at(k, n, base) ==
                      delta_power(k, n).specialize(base, std::nullopt).constant_value());
}

TEST_CASE("pascal-style recursion for iterated differences of powers") {
    const MultiPoly x = MultiPoly::var_x();
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned k = 1; k <= m; ++k)
            CHECK(delta_power(k, m + 1) ==
                  x * delta_power(k, m) +
                      (delta_power(k, m) + delta_power(k - 1, m)) *
                          Rational(static_cast<long long>(k)));
}

TEST_CASE("newton expansion in the falling-factorial basis") {
    const MultiPoly x = MultiPoly::var_x();
    CHECK(newton_expand(MultiPoly(1)).diffs == std::vector<Rational>{Rational(1)});
    CHECK(newton_expand(x * x).diffs ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
    CHECK(newton_expand(x.pow(3)).diffs ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(6), Rational(6)});
    CHECK(newton_expand(MultiPoly()).diffs == std::vector<Rational>{Rational(0)});

    std::mt19937 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = random_x_poly(rng, 10);
        CHECK(newton_reconstruct(newton_expand(f)) == f);
    }

    CHECK_THROWS_AS(newton_expand(MultiPoly::var_lambda()), std::invalid_argument);
}
