#include "degenstir/egf.hpp"

#include <stdexcept>

namespace degenstir {

EgfSeries::EgfSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("EgfSeries: need at least c_0");
}

EgfSeries EgfSeries::identity(unsigned order) {
    EgfSeries s(order);
    s.coeffs_[0] = MultiPoly(Rational(1));
    return s;
}

const MultiPoly& EgfSeries::coeff(unsigned n) const {
    if (n >= coeffs_.size()) throw std::out_of_range("EgfSeries: coefficient beyond truncation order");
    return coeffs_[n];
}

void EgfSeries::check_order(const EgfSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("EgfSeries: truncation orders differ");
}

EgfSeries EgfSeries::operator+(const EgfSeries& o) const {
    check_order(o);
    EgfSeries out = *this;
    for (size_t n = 0; n < coeffs_.size(); ++n) out.coeffs_[n] += o.coeffs_[n];
    return out;
}

EgfSeries EgfSeries::operator-(const EgfSeries& o) const {
    check_order(o);
    EgfSeries out = *this;
    for (size_t n = 0; n < coeffs_.size(); ++n) out.coeffs_[n] -= o.coeffs_[n];
    return out;
}

EgfSeries EgfSeries::scaled(const Rational& c) const {
    EgfSeries out = *this;
    for (auto& p : out.coeffs_) p *= c;
    return out;
}

EgfSeries EgfSeries::scaled(const MultiPoly& c) const {
    EgfSeries out = *this;
    for (auto& p : out.coeffs_) p *= c;
    return out;
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("egf_mul: truncation orders differ");
    const unsigned N = a.order();
    EgfSeries out(N);
    std::vector<MultiPoly> c(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        MultiPoly acc;
        for (unsigned i = 0; i <= n; ++i)
            acc += a.coeff(i) * b.coeff(n - i) * Rational(binomial(n, i));
        c[n] = std::move(acc);
    }
    return EgfSeries(std::move(c));
}

EgfSeries egf_inverse(const EgfSeries& a) {
    if (!a.coeff(0).is_constant() || a.coeff(0).is_zero())
        throw std::domain_error("egf_inverse: constant term must be a nonzero constant");
    const Rational u = a.coeff(0).constant_value();
    const unsigned N = a.order();
    std::vector<MultiPoly> b(N + 1);
    b[0] = MultiPoly(Rational(1) / u);
    for (unsigned n = 1; n <= N; ++n) {
        MultiPoly acc;
        for (unsigned i = 1; i <= n; ++i)
            acc += a.coeff(i) * b[n - i] * Rational(binomial(n, i));
        b[n] = -(acc / u);
    }
    return EgfSeries(std::move(b));
}

EgfSeries egf_exp(const EgfSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("egf_exp: constant term must be zero");
    const unsigned N = a.order();
    // Horner form of 1 + a/1*(1 + a/2*(1 + ... )): exact because a is
    // nilpotent at this truncation order.
    EgfSeries r = EgfSeries::identity(N);
    for (unsigned j = N; j >= 1; --j)
        r = EgfSeries::identity(N) + egf_mul(a, r).scaled(Rational(1, static_cast<long long>(j)));
    return r;
}

EgfSeries egf_pow(const EgfSeries& a, unsigned e) {
    EgfSeries out = EgfSeries::identity(a.order());
    for (unsigned i = 0; i < e; ++i) out = egf_mul(out, a);
    return out;
}

}  // namespace degenstir
