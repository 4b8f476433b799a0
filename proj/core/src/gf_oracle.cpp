#include "degenstir/gf_oracle.hpp"

#include <stdexcept>

namespace degenstir::gf {

namespace {

// e^(at) for a constant a: c_n = a^n.
EgfSeries series_exp_const(long long a, unsigned N) {
    return EgfSeries::build(
        N, [&](unsigned n) { return MultiPoly(Rational(ipow(Integer(a), n))); });
}

// e^(xt): c_n = x^n.
EgfSeries series_exp_x(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) { return MultiPoly::var_x().pow(n); });
}

// log(1+t): c_0 = 0, c_n = (-1)^(n-1) (n-1)!.
EgfSeries series_log1p(unsigned N) {
    return EgfSeries::build(N, [](unsigned n) {
        if (n == 0) return MultiPoly();
        const int sgn = (n % 2 == 1) ? 1 : -1;
        return MultiPoly(Rational(sgn) * Rational(factorial(n - 1)));
    });
}

// e^t - 1 with unit weight m: c_0 = 0, c_n = m^n.
EgfSeries series_exp_minus_one(long long m, unsigned N) {
    return EgfSeries::build(N, [&](unsigned n) {
        return n == 0 ? MultiPoly() : MultiPoly(Rational(ipow(Integer(m), n)));
    });
}

// ((1+lt)^(a/l) - 1) for constant a.
EgfSeries series_deg_exp_minus_one(long long a, unsigned N) {
    return build_deg_power(MultiPoly(Rational(a)), N) - EgfSeries::identity(N);
}

// scale by 1/(m^k k!)
EgfSeries column_scale(EgfSeries s, unsigned k, unsigned m) {
    return s.scaled(Rational(1) / (Rational(ipow(Integer(m), k)) * Rational(factorial(k))));
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

EgfSeries build(const SeriesFamily& f, unsigned N) {
    switch (f.tag) {
        case SeriesTag::stirling1_gf:
            return egf_pow(series_log1p(N), f.k).scaled(Rational(1) / Rational(factorial(f.k)));
        case SeriesTag::stirling2_gf:
            return egf_pow(series_exp_minus_one(1, N), f.k)
                .scaled(Rational(1) / Rational(factorial(f.k)));
        case SeriesTag::stirling2_poly_gf:
            return egf_mul(series_exp_x(N), egf_pow(series_exp_minus_one(1, N), f.k))
                .scaled(Rational(1) / Rational(factorial(f.k)));
        case SeriesTag::deg_stirling2_gf:
            return egf_mul(build_deg_power(MultiPoly::var_x(), N),
                           egf_pow(series_deg_exp_minus_one(1, N), f.k))
                .scaled(Rational(1) / Rational(factorial(f.k)));
        case SeriesTag::bernoulli_gf:
            return egf_mul(egf_inverse(EgfSeries::build(N,
                                                        [](unsigned n) {
                                                            return MultiPoly(Rational(
                                                                1, static_cast<long long>(n) + 1));
                                                        })),
                           series_exp_x(N));
        case SeriesTag::euler_gf:
            return egf_mul(egf_inverse(EgfSeries::build(N,
                                                        [](unsigned n) {
                                                            return n == 0
                                                                       ? MultiPoly(Rational(1))
                                                                       : MultiPoly(Rational(1, 2));
                                                        })),
                           series_exp_x(N));
        case SeriesTag::deg_bernoulli_gf:
            return egf_mul(
                egf_inverse(EgfSeries::build(N,
                                             [](unsigned n) {
                                                 return deg_falling(MultiPoly(Rational(1)), n + 1) /
                                                        Rational(static_cast<long long>(n) + 1);
                                             })),
                build_deg_power(MultiPoly::var_x(), N));
        case SeriesTag::deg_euler_r_gf: {
            require(f.order_r >= 1, "deg_euler_r_gf: order_r must be >= 1");
            const EgfSeries denom = EgfSeries::build(N, [](unsigned n) {
                return n == 0 ? MultiPoly(Rational(1))
                              : deg_falling(MultiPoly(Rational(1)), n) / Rational(2);
            });
            return egf_mul(egf_pow(egf_inverse(denom), f.order_r),
                           build_deg_power(MultiPoly::var_x(), N));
        }
        case SeriesTag::whitney_gf:
            require(f.m >= 1, "whitney_gf: m must be >= 1");
            return column_scale(egf_mul(series_exp_const(f.r, N),
                                        egf_pow(series_exp_minus_one(f.m, N), f.k)),
                                f.k, f.m);
        case SeriesTag::deg_whitney_gf:
            require(f.m >= 1, "deg_whitney_gf: m must be >= 1");
            return column_scale(
                egf_mul(build_deg_power(MultiPoly(Rational(static_cast<long long>(f.r))), N),
                        egf_pow(series_deg_exp_minus_one(f.m, N), f.k)),
                f.k, f.m);
    }
    throw std::invalid_argument("unknown series family");
}

std::vector<MultiPoly> coefficients(const SeriesFamily& f, unsigned N) {
    return build(f, N).coeffs();
}

}  // namespace degenstir::gf
