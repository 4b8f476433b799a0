#pragma once

#include <vector>

#include "degenstir/multipoly.hpp"

namespace degenstir {

/// Truncated exponential generating function sum_{n=0}^{N} c_n t^n / n! with
/// MultiPoly coefficients. The truncation order N is fixed at construction;
/// binary operations require both operands to share it.
class EgfSeries {
public:
    /// Zero series of the given truncation order.
    explicit EgfSeries(unsigned order) : coeffs_(order + 1) {}

    /// Takes the coefficients c_0..c_N; order becomes size-1.
    explicit EgfSeries(std::vector<MultiPoly> coeffs);

    /// Multiplicative identity: c_0 = 1, all higher coefficients zero.
    static EgfSeries identity(unsigned order);

    /// Builds from a coefficient rule n -> c_n.
    template <typename Fn>
    static EgfSeries build(unsigned order, Fn&& fn) {
        std::vector<MultiPoly> c;
        c.reserve(order + 1);
        for (unsigned n = 0; n <= order; ++n) c.push_back(fn(n));
        return EgfSeries(std::move(c));
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    /// c_n; throws std::out_of_range beyond the truncation order.
    const MultiPoly& coeff(unsigned n) const;

    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    EgfSeries operator+(const EgfSeries& o) const;
    EgfSeries operator-(const EgfSeries& o) const;
    EgfSeries scaled(const Rational& c) const;
    EgfSeries scaled(const MultiPoly& c) const;

    bool operator==(const EgfSeries&) const = default;

private:
    std::vector<MultiPoly> coeffs_;
    void check_order(const EgfSeries& o) const;
};

/// Cauchy product in EGF form: (a*b)_n = sum_i C(n,i) a_i b_{n-i}.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);

/// Multiplicative inverse; requires c_0 to be a nonzero constant.
EgfSeries egf_inverse(const EgfSeries& a);

/// exp of a series with zero constant term, via Horner on the nilpotent part.
EgfSeries egf_exp(const EgfSeries& a);

/// a^e by repeated multiplication; a^0 is the constant-1 series.
EgfSeries egf_pow(const EgfSeries& a, unsigned e);

inline const MultiPoly& egf_coeff(const EgfSeries& s, unsigned n) { return s.coeff(n); }

}  // namespace degenstir
