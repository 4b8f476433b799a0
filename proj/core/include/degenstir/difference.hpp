#pragma once

#include <vector>

#include "degenstir/multipoly.hpp"

namespace degenstir {

/// Substitutes x -> x + c.
MultiPoly shift_x(const MultiPoly& f, const Rational& c);

/// Forward difference: f(x+1) - f(x).
MultiPoly delta_poly(const MultiPoly& f);

/// Delta^k x^m = sum_{l=0}^{k} C(k,l)(-1)^{k-l}(x+l)^m, a polynomial in x.
MultiPoly delta_power(unsigned k, unsigned m);

/// Delta^k 0^n = sum_{l=0}^{k} C(k,l)(-1)^{k-l} l^n, with 0^0 = 1.
Rational delta_at_zero(unsigned k, unsigned n);

/// Delta^k x^n evaluated at x = base.
Rational delta_power_at(unsigned k, unsigned n, const Rational& base);

/// Forward differences of a polynomial at 0: diffs[k] = Delta^k f(0) for
/// k = 0..deg(f).
struct NewtonExpansion {
    std::vector<Rational> diffs;
};

/// Requires f free of lambda; throws std::invalid_argument otherwise.
NewtonExpansion newton_expand(const MultiPoly& f);

/// sum_k diffs[k] * x(x-1)...(x-k+1) / k!, the exact Newton forward form.
MultiPoly newton_reconstruct(const NewtonExpansion& e);

}  // namespace degenstir
