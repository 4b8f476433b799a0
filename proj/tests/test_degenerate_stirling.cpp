#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degenstir/degenerate_stirling.hpp"
#include "degenstir/stirling.hpp"

using namespace degenstir;

TEST_CASE("closed-form spot values") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();
    CHECK(deg_stirling2(0, 0) == MultiPoly(1));
    CHECK(deg_stirling2(1, 2).is_zero());
    CHECK(deg_stirling2(2, 1) == x * Rational(2) + MultiPoly(1) - l);
    CHECK(deg_stirling2(2, 1).specialize(Rational(0), std::nullopt).str() == "1 - l");
    CHECK(deg_stirling2(3, 3) == MultiPoly(1));
}

TEST_CASE("x=0, lambda=0 recovers the partition triangle") {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(deg_stirling2(n, k).specialize(Rational(0), Rational(0)).constant_value() ==
                  stirling2(n, k));
}

TEST_CASE("lambda=0 collapses to the non-central polynomial") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(deg_stirling2(n, k).specialize(std::nullopt, Rational(0)) ==
                  stirling2_poly(n, k));
}

TEST_CASE("three independent routes agree symbolically") {
    for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const MultiPoly closed = deg_stirling2(n, k);
            CHECK(closed == deg_stirling2_via_s1(n, k));
            const auto col = deg_stirling2_gf(n, k);
            REQUIRE(col.size() == n - k + 1);
            CHECK(closed == col.back());
        }
    }
}

TEST_CASE("triangular recurrence with lambda correction") {
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly l = MultiPoly::var_lambda();
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 1; k <= n + 1; ++k)
            CHECK(deg_stirling2(n + 1, k) ==
                  (x + MultiPoly(Rational(static_cast<long long>(k))) -
                   l * Rational(static_cast<long long>(n))) *
                          deg_stirling2(n, k) +
                      deg_stirling2(n, k - 1));
}

TEST_CASE("boundary columns") {
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(deg_stirling2(n, 0) == deg_falling(MultiPoly::var_x(), n));
        CHECK(deg_stirling2(n, n) == MultiPoly(1));
    }
}

TEST_CASE("series route column shape") {
    CHECK(deg_stirling2_gf(2, 5).empty());
    const auto col = deg_stirling2_gf(6, 2);
    REQUIRE(col.size() == 5);  // coefficients for n = 2..6
    for (unsigned n = 2; n <= 6; ++n) CHECK(col[n - 2] == deg_stirling2(n, 2));
    // k = 0 column carries the generalized falling factorials
    const auto base = deg_stirling2_gf(5, 0);
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(base[n] == deg_falling(MultiPoly::var_x(), n));
}

TEST_CASE("first-kind route spot values") {
    const MultiPoly l = MultiPoly::var_lambda();
    CHECK(deg_stirling2_via_s1(2, 1).specialize(Rational(0), std::nullopt) ==
          MultiPoly(1) - l);
    CHECK(deg_stirling2_via_s1(3, 3) == MultiPoly(1));
    CHECK(deg_stirling2_via_s1(1, 2).is_zero());
}
