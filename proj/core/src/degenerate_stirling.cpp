#include "degenstir/degenerate_stirling.hpp"

#include "degenstir/difference.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

MultiPoly deg_stirling2(unsigned n, unsigned k) {
    // The alternating sum is the k-th difference in l of a degree-n
    // polynomial, so it vanishes identically when n < k.
    const MultiPoly x = MultiPoly::var_x();
    MultiPoly acc;
    for (unsigned l = 0; l <= k; ++l) {
        const int sgn = ((k - l) % 2 == 0) ? 1 : -1;
        acc += deg_binom(x + MultiPoly(Rational(static_cast<long long>(l))), n) *
               (Rational(binomial(k, l)) * Rational(sgn));
    }
    return acc * (Rational(factorial(n)) / Rational(factorial(k)));
}

MultiPoly deg_stirling2_via_s1(unsigned n, unsigned k) {
    MultiPoly acc;
    for (unsigned m = 0; m <= n; ++m) {
        const Rational s1 = stirling1(n, m);
        if (s1.is_zero()) continue;
        acc += delta_power(k, m) * MultiPoly::monomial(0, n - m, s1);
    }
    return acc / Rational(factorial(k));
}

std::vector<MultiPoly> deg_stirling2_gf(unsigned n_max, unsigned k) {
    if (k > n_max) return {};
    const unsigned N = n_max;
    const EgfSeries base = build_deg_power(MultiPoly::var_x(), N);
    const EgfSeries bracket = build_deg_power(MultiPoly(Rational(1)), N) - EgfSeries::identity(N);
    const EgfSeries series =
        egf_mul(base, egf_pow(bracket, k)).scaled(Rational(1) / Rational(factorial(k)));
    std::vector<MultiPoly> out;
    out.reserve(n_max - k + 1);
    for (unsigned n = k; n <= n_max; ++n) out.push_back(series.coeff(n));
    return out;
}

}  // namespace degenstir
