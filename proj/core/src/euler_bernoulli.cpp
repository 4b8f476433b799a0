#include "degenstir/euler_bernoulli.hpp"

#include <stdexcept>

#include "degenstir/degenerate_stirling.hpp"
#include "degenstir/stirling.hpp"

namespace degenstir {

namespace {

// e^(xt): c_n = x^n.
EgfSeries series_exp_x(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) { return MultiPoly::var_x().pow(n); });
}

// (e^t - 1)/t: c_n = 1/(n+1).
EgfSeries series_bernoulli_denom(unsigned N) {
    return EgfSeries::build(
        N, [](unsigned n) { return MultiPoly(Rational(1, static_cast<long long>(n) + 1)); });
}

// (e^t + 1)/2: c_0 = 1, c_n = 1/2.
EgfSeries series_euler_denom(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) {
        return n == 0 ? MultiPoly(Rational(1)) : MultiPoly(Rational(1, 2));
    });
}

// ((1+lambda*t)^(1/lambda) - 1)/t in cancelled form: c_n = (1)_{n+1,lambda}/(n+1).
EgfSeries series_deg_bernoulli_denom(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) {
        return deg_falling(MultiPoly(Rational(1)), n + 1) / Rational(static_cast<long long>(n) + 1);
    });
}

// ((1+lambda*t)^(1/lambda) + 1)/2: c_0 = 1, c_n = (1)_{n,lambda}/2.
EgfSeries series_deg_euler_denom(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) {
        return n == 0 ? MultiPoly(Rational(1))
                      : deg_falling(MultiPoly(Rational(1)), n) / Rational(2);
    });
}

EgfSeries family_series(PolyFamily family, unsigned N, unsigned order_r) {
    switch (family) {
        case PolyFamily::bernoulli:
            return egf_mul(egf_inverse(series_bernoulli_denom(N)), series_exp_x(N));
        case PolyFamily::euler:
            return egf_mul(egf_inverse(series_euler_denom(N)), series_exp_x(N));
        case PolyFamily::deg_bernoulli:
            return egf_mul(egf_inverse(series_deg_bernoulli_denom(N)),
                           build_deg_power(MultiPoly::var_x(), N));
        case PolyFamily::deg_euler_r:
            if (order_r < 1) throw std::invalid_argument("deg_euler_r: order must be >= 1");
            return egf_mul(egf_pow(egf_inverse(series_deg_euler_denom(N)), order_r),
                           build_deg_power(MultiPoly::var_x(), N));
    }
    throw std::invalid_argument("unknown polynomial family");
}

}  // namespace

MultiPoly bernoulli_poly(unsigned n) { return family_series(PolyFamily::bernoulli, n, 1).coeff(n); }

MultiPoly euler_poly(unsigned n) { return family_series(PolyFamily::euler, n, 1).coeff(n); }

Rational euler_number_from_s2(unsigned n) {
    Rational acc(0);
    for (unsigned l = 0; l <= n; ++l) {
        const int sgn = (l % 2 == 0) ? 1 : -1;
        acc += stirling2(n, l) * rpow(Rational(1, 2), l) * Rational(factorial(l)) * Rational(sgn);
    }
    return acc;
}

MultiPoly deg_bernoulli(unsigned n) {
    return family_series(PolyFamily::deg_bernoulli, n, 1).coeff(n);
}

MultiPoly deg_euler_higher(unsigned n, unsigned r) {
    if (r < 1) throw std::invalid_argument("deg_euler_higher: order must be >= 1");
    return family_series(PolyFamily::deg_euler_r, n, r).coeff(n);
}

MultiPoly deg_euler_closed(unsigned n, unsigned r) {
    if (r < 1) throw std::invalid_argument("deg_euler_closed: order must be >= 1");
    MultiPoly acc;
    for (unsigned l = 0; l <= n; ++l) {
        const int sgn = (l % 2 == 0) ? 1 : -1;
        const Rational weight =
            Rational(binomial(r + l - 1, l)) * rpow(Rational(1, 2), l) * Rational(factorial(l)) * Rational(sgn);
        acc += deg_stirling2(n, l) * weight;
    }
    return acc;
}

PolySequence build_poly_sequence(PolyFamily family, unsigned n_max, unsigned order_r) {
    const EgfSeries series = family_series(family, n_max + 1, order_r);
    PolySequence seq;
    seq.family = family;
    seq.order_r = (family == PolyFamily::deg_euler_r) ? order_r : 1;
    seq.values.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) seq.values.push_back(series.coeff(n));
    return seq;
}

}  // namespace degenstir
