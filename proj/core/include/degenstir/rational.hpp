#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace degenstir {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers. Always canonical:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        // cpp_rational's component constructor requires a positive denominator
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(Integer(-num), Integer(-den));
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical text form: "p/q", the "/q" omitted when q = 1 (e.g. "-1/30", "3").
    std::string str() const;

    /// Parses the canonical text form; accepts "p" and "p/q".
    static Rational parse(std::string_view s);

private:
    boost::multiprecision::cpp_rational v_;
};

Integer factorial(unsigned n);

/// C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// base^e over the integers, with 0^0 = 1.
Integer ipow(const Integer& base, unsigned e);

/// base^e over the rationals, with 0^0 = 1.
Rational rpow(const Rational& base, unsigned e);

}  // namespace degenstir
