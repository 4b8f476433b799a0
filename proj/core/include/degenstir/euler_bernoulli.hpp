#pragma once

#include <vector>

#include "degenstir/degenerate.hpp"

namespace degenstir {

/// Bernoulli polynomial B_n(x): nth EGF coefficient of t/(e^t-1) * e^(xt),
/// with the denominator supplied in its cancelled form c_n = 1/(n+1).
MultiPoly bernoulli_poly(unsigned n);

/// Euler polynomial E_n(x): nth EGF coefficient of 2/(e^t+1) * e^(xt).
MultiPoly euler_poly(unsigned n);

/// Euler number E_n = E_n(0) through Stirling numbers of the second kind:
/// sum_{l=0}^{n} S2(n,l) * 2^(-l) * l! * (-1)^l.
Rational euler_number_from_s2(unsigned n);

/// Carlitz degenerate Bernoulli polynomial beta_{n,lambda}(x): nth
/// coefficient of t/((1+lambda*t)^(1/lambda)-1) * (1+lambda*t)^(x/lambda),
/// the denominator in cancelled form c_n = (1)_{n+1,lambda}/(n+1).
/// Specializes to bernoulli_poly(n) at lambda = 0.
MultiPoly deg_bernoulli(unsigned n);

/// Higher-order degenerate Euler polynomial: nth coefficient of
/// (2/((1+lambda*t)^(1/lambda)+1))^r * (1+lambda*t)^(x/lambda).
/// r = 1 is the Carlitz degenerate Euler polynomial. Requires r >= 1.
MultiPoly deg_euler_higher(unsigned n, unsigned r);

/// The same polynomial as a finite sum over degenerate Stirling polynomials:
/// sum_{l=0}^{n} C(r+l-1,l) * 2^(-l) * (-1)^l * l! * S2_lambda(n,l|x).
/// Requires r >= 1.
MultiPoly deg_euler_closed(unsigned n, unsigned r);

enum class PolyFamily { bernoulli, euler, deg_bernoulli, deg_euler_r };

/// A family's polynomials for n = 0..n_max, read off one shared truncated
/// series build. values[0] is always 1.
struct PolySequence {
    PolyFamily family;
    unsigned order_r;
    std::vector<MultiPoly> values;
};

/// order_r applies to deg_euler_r only (must be >= 1); ignored otherwise.
PolySequence build_poly_sequence(PolyFamily family, unsigned n_max, unsigned order_r = 1);

}  // namespace degenstir
