#include "degenstir/rational.hpp"

namespace degenstir {

std::string Rational::str() const {
    std::string s = numerator().str();
    Integer den = denominator();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

Integer ipow(const Integer& base, unsigned e) {
    Integer r = 1;
    Integer b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return r;
}

Rational rpow(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return r;
}

}  // namespace degenstir
