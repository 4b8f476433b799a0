#include "degenstir/difference.hpp"

#include <stdexcept>

namespace degenstir {

MultiPoly shift_x(const MultiPoly& f, const Rational& c) {
    // (x+c)^d expanded per term via the binomial theorem.
    MultiPoly out;
    for (const auto& [m, v] : f.terms()) {
        const MultiPoly lam_part = MultiPoly::monomial(0, m.deg_lambda, v);
        MultiPoly shifted;
        for (unsigned j = 0; j <= m.deg_x; ++j)
            shifted += MultiPoly::monomial(j, 0, Rational(binomial(m.deg_x, j)) * rpow(c, m.deg_x - j));
        out += lam_part * shifted;
    }
    return out;
}

MultiPoly delta_poly(const MultiPoly& f) { return shift_x(f, Rational(1)) - f; }

MultiPoly delta_power(unsigned k, unsigned m) {
    MultiPoly out;
    const MultiPoly xm = MultiPoly::var_x().pow(m);
    for (unsigned l = 0; l <= k; ++l) {
        const int sgn = ((k - l) % 2 == 0) ? 1 : -1;
        out += shift_x(xm, Rational(static_cast<long long>(l))) * (Rational(binomial(k, l)) * Rational(sgn));
    }
    return out;
}

Rational delta_at_zero(unsigned k, unsigned n) { return delta_power_at(k, n, Rational(0)); }

Rational delta_power_at(unsigned k, unsigned n, const Rational& base) {
    Rational acc(0);
    for (unsigned l = 0; l <= k; ++l) {
        const int sgn = ((k - l) % 2 == 0) ? 1 : -1;
        acc += Rational(binomial(k, l)) * Rational(sgn) * rpow(base + Rational(static_cast<long long>(l)), n);
    }
    return acc;
}

NewtonExpansion newton_expand(const MultiPoly& f) {
    if (f.has_lambda()) throw std::invalid_argument("newton_expand: polynomial must be in x only");
    NewtonExpansion e;
    MultiPoly g = f;
    const unsigned deg = f.degree_x();
    for (unsigned k = 0; k <= deg; ++k) {
        e.diffs.push_back(g.specialize(Rational(0), std::nullopt).constant_value());
        g = delta_poly(g);
    }
    return e;
}

MultiPoly newton_reconstruct(const NewtonExpansion& e) {
    MultiPoly out;
    const MultiPoly x = MultiPoly::var_x();
    for (size_t k = 0; k < e.diffs.size(); ++k)
        out += falling_factorial(x, static_cast<unsigned>(k)) *
               (e.diffs[k] / Rational(factorial(static_cast<unsigned>(k))));
    return out;
}

}  // namespace degenstir
