#pragma once

#include <utility>

#include "degenstir/egf.hpp"

namespace degenstir {

/// Lambda-falling factorial (a)_{n,lambda} = a(a-lambda)...(a-(n-1)lambda);
/// empty product is 1. At lambda = 0 this collapses to a^n.
MultiPoly deg_falling(const MultiPoly& a, unsigned n);

/// Lambda-binomial coefficient (a)_{n,lambda} / n!.
MultiPoly deg_binom(const MultiPoly& a, unsigned n);

/// The degenerate exponential (1+lambda*t)^(a/lambda) as a truncated EGF:
/// c_l = (a)_{l,lambda}. Multiplicative in a.
EgfSeries build_deg_power(const MultiPoly& a, unsigned order);

/// Same series built through the logarithm: exp((a/lambda)*log(1+lambda*t)),
/// where the inner series has c_n = (-1)^(n-1) * a * lambda^(n-1) * (n-1)!
/// for n >= 1 (the 1/lambda cancels, so coefficients stay polynomial).
EgfSeries build_deg_power_log(const MultiPoly& a, unsigned order);

/// Lambda-Vandermonde convolution: returns
/// (sum_{m=0}^{n} deg_binom(yv,m) * deg_binom(xv,n-m), deg_binom(xv+yv,n)).
/// The two components are equal as polynomials.
std::pair<MultiPoly, MultiPoly> chu_vandermonde_lambda(const MultiPoly& xv, const MultiPoly& yv,
                                                       unsigned n);

}  // namespace degenstir
