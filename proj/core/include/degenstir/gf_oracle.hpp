#pragma once

#include <vector>

#include "degenstir/degenerate.hpp"

namespace degenstir::gf {

/// The generating functions the library exposes, one tag per closed series.
enum class SeriesTag {
    stirling1_gf,       // (1/k!) (log(1+t))^k
    stirling2_gf,       // (1/k!) (e^t - 1)^k
    stirling2_poly_gf,  // e^(xt) (1/k!) (e^t - 1)^k
    deg_stirling2_gf,   // (1/k!) (1+lt)^(x/l) ((1+lt)^(1/l) - 1)^k
    bernoulli_gf,       // t/(e^t - 1) e^(xt)
    euler_gf,           // 2/(e^t + 1) e^(xt)
    deg_bernoulli_gf,   // t/((1+lt)^(1/l) - 1) (1+lt)^(x/l)
    deg_euler_r_gf,     // (2/((1+lt)^(1/l) + 1))^r (1+lt)^(x/l)
    whitney_gf,         // (1/(m^k k!)) e^(rt) (e^(mt) - 1)^k
    deg_whitney_gf,     // (1/(m^k k!)) (1+lt)^(r/l) ((1+lt)^(m/l) - 1)^k
};

/// A tag plus its parameters; fields not used by the tag are ignored.
struct SeriesFamily {
    SeriesTag tag;
    unsigned k = 0;        // column index for the ^k families
    unsigned m = 1;        // Whitney block weight, must be >= 1
    unsigned r = 0;        // Whitney shift / e^(rt) exponent
    unsigned order_r = 1;  // order of the deg_euler_r family, must be >= 1
};

/// Builds the family's series truncated at the given order. Every recipe is
/// assembled from the series primitives alone, independently of the
/// closed-form modules it arbitrates. Invalid parameters (m = 0 where a
/// Whitney family needs m >= 1, order_r = 0) throw std::invalid_argument.
EgfSeries build(const SeriesFamily& family, unsigned order);

/// The coefficients c_0..c_N of build(family, N).
std::vector<MultiPoly> coefficients(const SeriesFamily& family, unsigned order);

}  // namespace degenstir::gf
