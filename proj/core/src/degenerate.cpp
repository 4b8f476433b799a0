#include "degenstir/degenerate.hpp"

namespace degenstir {

MultiPoly deg_falling(const MultiPoly& a, unsigned n) {
    MultiPoly result(Rational(1));
    const MultiPoly lambda = MultiPoly::var_lambda();
    for (unsigned i = 0; i < n; ++i)
        result *= a - lambda * Rational(static_cast<long long>(i));
    return result;
}

MultiPoly deg_binom(const MultiPoly& a, unsigned n) {
    return deg_falling(a, n) / Rational(factorial(n));
}

EgfSeries build_deg_power(const MultiPoly& a, unsigned order) {
    const MultiPoly lambda = MultiPoly::var_lambda();
    std::vector<MultiPoly> c;
    c.reserve(order + 1);
    c.emplace_back(Rational(1));
    for (unsigned l = 1; l <= order; ++l)
        c.push_back(c.back() * (a - lambda * Rational(static_cast<long long>(l - 1))));
    return EgfSeries(std::move(c));
}

EgfSeries build_deg_power_log(const MultiPoly& a, unsigned order) {
    std::vector<MultiPoly> c(order + 1);
    for (unsigned n = 1; n <= order; ++n) {
        const int sgn = (n % 2 == 1) ? 1 : -1;
        c[n] = a * MultiPoly::monomial(0, n - 1, Rational(sgn) * Rational(factorial(n - 1)));
    }
    return egf_exp(EgfSeries(std::move(c)));
}

std::pair<MultiPoly, MultiPoly> chu_vandermonde_lambda(const MultiPoly& xv, const MultiPoly& yv,
                                                       unsigned n) {
    MultiPoly sum;
    for (unsigned m = 0; m <= n; ++m) sum += deg_binom(yv, m) * deg_binom(xv, n - m);
    return {sum, deg_binom(xv + yv, n)};
}

}  // namespace degenstir
