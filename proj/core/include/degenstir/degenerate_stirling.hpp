#pragma once

#include <vector>

#include "degenstir/degenerate.hpp"

namespace degenstir {

/// Degenerate Stirling polynomial of the second kind, closed form:
/// S2_lambda(n,k|x) = (n!/k!) * sum_{l=0}^{k} C(k,l)(-1)^(k-l) deg_binom(l+x, n).
/// Zero polynomial when n < k; reduces to stirling2_poly(n,k) at lambda = 0
/// and to stirling2(n,k) at x = 0, lambda = 0.
MultiPoly deg_stirling2(unsigned n, unsigned k);

/// Same polynomial assembled through signed Stirling numbers of the first
/// kind: sum_{m=0}^{n} (1/k!) * Delta^k x^m * lambda^(n-m) * S1(n,m).
MultiPoly deg_stirling2_via_s1(unsigned n, unsigned k);

/// Generating-function route: coefficients c_k..c_{n_max} of
/// (1/k!) * (1+lambda*t)^(x/lambda) * ((1+lambda*t)^(1/lambda) - 1)^k.
/// Empty when k > n_max.
std::vector<MultiPoly> deg_stirling2_gf(unsigned n_max, unsigned k);

}  // namespace degenstir
