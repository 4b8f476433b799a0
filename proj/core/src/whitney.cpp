#include "degenstir/whitney.hpp"

#include <stdexcept>

#include "degenstir/difference.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

namespace {
void check_params(const WhitneyParams& p) {
    if (p.m == 0) throw std::invalid_argument("whitney: m must be >= 1");
}
}  // namespace

Rational whitney(unsigned n, unsigned k, const WhitneyParams& p) {
    check_params(p);
    Rational acc(0);
    for (unsigned i = k; i <= n; ++i)
        acc += Rational(binomial(n, i)) * Rational(ipow(Integer(p.r), n - i)) * stirling2(i, k) *
               Rational(ipow(Integer(p.m), i - k));
    return acc;
}

Rational whitney_via_difference(unsigned n, unsigned k, const WhitneyParams& p) {
    check_params(p);
    if (n < k) return Rational(0);
    const Rational base(static_cast<long long>(p.r), static_cast<long long>(p.m));
    return Rational(ipow(Integer(p.m), n - k)) / Rational(factorial(k)) *
           delta_power_at(k, n, base);
}

std::pair<MultiPoly, MultiPoly> whitney_basis_identity(unsigned n, const WhitneyParams& p) {
    check_params(p);
    const MultiPoly x = MultiPoly::var_x();
    const MultiPoly lhs =
        (x * Rational(static_cast<long long>(p.m)) + MultiPoly(Rational(static_cast<long long>(p.r))))
            .pow(n);
    MultiPoly rhs;
    for (unsigned k = 0; k <= n; ++k)
        rhs += falling_factorial(x, k) * (Rational(ipow(Integer(p.m), k)) * whitney(n, k, p));
    return {lhs, rhs};
}

MultiPoly deg_whitney(unsigned n, unsigned k, const WhitneyParams& p) {
    check_params(p);
    MultiPoly acc;
    for (unsigned l = 0; l <= k; ++l) {
        const int sgn = ((k - l) % 2 == 0) ? 1 : -1;
        const long long base = static_cast<long long>(p.m) * l + p.r;
        acc += deg_binom(MultiPoly(Rational(base)), n) * (Rational(binomial(k, l)) * Rational(sgn));
    }
    return acc * (Rational(factorial(n)) / (Rational(ipow(Integer(p.m), k)) * Rational(factorial(k))));
}

MultiPoly deg_whitney_via_s1(unsigned n, unsigned k, const WhitneyParams& p) {
    check_params(p);
    const Rational base(static_cast<long long>(p.r), static_cast<long long>(p.m));
    MultiPoly acc;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational s1 = stirling1(n, j);
        if (s1.is_zero()) continue;
        const Rational cell = s1 * Rational(ipow(Integer(p.m), j)) * delta_power_at(k, j, base);
        acc += MultiPoly::monomial(0, n - j, cell);
    }
    return acc / (Rational(factorial(k)) * Rational(ipow(Integer(p.m), k)));
}

std::vector<MultiPoly> deg_whitney_gf(unsigned n_max, unsigned k, const WhitneyParams& p) {
    check_params(p);
    const unsigned N = n_max;
    const EgfSeries base = build_deg_power(MultiPoly(Rational(static_cast<long long>(p.r))), N);
    const EgfSeries bracket =
        build_deg_power(MultiPoly(Rational(static_cast<long long>(p.m))), N) - EgfSeries::identity(N);
    const EgfSeries series =
        egf_mul(base, egf_pow(bracket, k))
            .scaled(Rational(1) / (Rational(ipow(Integer(p.m), k)) * Rational(factorial(k))));
    std::vector<MultiPoly> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(series.coeff(n));
    return out;
}

}  // namespace degenstir
