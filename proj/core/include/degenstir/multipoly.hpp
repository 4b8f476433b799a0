#pragma once

#include <map>
#include <optional>
#include <string>

#include "degenstir/rational.hpp"

namespace degenstir {

/// Exponent pair of one term: x^deg_x * lambda^deg_lambda.
struct Monomial {
    unsigned deg_x = 0;
    unsigned deg_lambda = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial in the formal variables x and lambda over
/// Rational. The term map never stores a zero coefficient, so structural
/// equality is mathematical equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) { add_term({0, 0}, c); }
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}

    static MultiPoly var_x() { return monomial(1, 0, 1); }
    static MultiPoly var_lambda() { return monomial(0, 1, 1); }
    static MultiPoly monomial(unsigned deg_x, unsigned deg_lambda, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool has_x() const;
    bool has_lambda() const;
    unsigned degree_x() const;
    unsigned degree_lambda() const;

    Rational coeff(unsigned deg_x, unsigned deg_lambda) const;

    /// The value of a constant polynomial; throws std::domain_error otherwise.
    Rational constant_value() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
    MultiPoly operator-() const;

    bool operator==(const MultiPoly&) const = default;

    MultiPoly pow(unsigned e) const;

    /// Substitutes the provided values; absent values leave the variable
    /// formal. Full substitution yields a constant polynomial.
    MultiPoly specialize(const std::optional<Rational>& x_val,
                         const std::optional<Rational>& lambda_val) const;

    /// Canonical text form: terms sorted by deg_x descending then deg_lambda
    /// ascending, lambda rendered "l" (or the Unicode letter when requested),
    /// e.g. "x^2 - l*x", "-1/2 + 1/2*l".
    std::string str(bool unicode_lambda = false) const;

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
};

/// Classical falling factorial base*(base-1)*...*(base-n+1); empty product is 1.
MultiPoly falling_factorial(const MultiPoly& base, unsigned n);

inline MultiPoly poly_specialize(const MultiPoly& p, const std::optional<Rational>& x_val,
                                 const std::optional<Rational>& lambda_val) {
    return p.specialize(x_val, lambda_val);
}

}  // namespace degenstir
