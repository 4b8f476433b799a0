#pragma once

#include <utility>
#include <vector>

#include "degenstir/degenerate.hpp"

namespace degenstir {

/// Parameters of the r-Whitney family: block weight m >= 1 and shift r >= 0.
struct WhitneyParams {
    unsigned m = 1;
    unsigned r = 0;
};

/// r-Whitney number W_{m,r}(n,k) = sum_{i=k}^{n} C(n,i) r^(n-i) S2(i,k) m^(i-k);
/// zero when n < k. W_{1,0} is S2, W_{1,r}(n,k) is stirling2_poly(n,k) at x=r.
Rational whitney(unsigned n, unsigned k, const WhitneyParams& p);

/// The same number through the forward difference route:
/// m^(n-k) * (1/k!) * Delta^k y^n at y = r/m.
Rational whitney_via_difference(unsigned n, unsigned k, const WhitneyParams& p);

/// Returns ((mx+r)^n expanded, sum_{k=0}^{n} m^k W_{m,r}(n,k) x(x-1)...(x-k+1));
/// the two components are equal as polynomials in x.
std::pair<MultiPoly, MultiPoly> whitney_basis_identity(unsigned n, const WhitneyParams& p);

/// Degenerate r-Whitney number, a polynomial in lambda:
/// (n!/(m^k k!)) * sum_{l=0}^{k} C(k,l)(-1)^(k-l) deg_binom(ml+r, n).
/// Zero when n < k; specializes to whitney(n,k,p) at lambda = 0.
MultiPoly deg_whitney(unsigned n, unsigned k, const WhitneyParams& p);

/// The same polynomial through signed Stirling numbers of the first kind:
/// (1/(k! m^k)) * sum_{j=0}^{n} lambda^(n-j) S1(n,j) m^j Delta^k y^j at y = r/m.
MultiPoly deg_whitney_via_s1(unsigned n, unsigned k, const WhitneyParams& p);

/// Generating-function route: coefficients c_0..c_{n_max} of
/// (1/(m^k k!)) * (1+lambda*t)^(r/lambda) * ((1+lambda*t)^(m/lambda) - 1)^k.
std::vector<MultiPoly> deg_whitney_gf(unsigned n_max, unsigned k, const WhitneyParams& p);

}  // namespace degenstir
