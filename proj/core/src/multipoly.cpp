#include "degenstir/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace degenstir {

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::monomial(unsigned deg_x, unsigned deg_lambda, const Rational& c) {
    MultiPoly p;
    p.add_term({deg_x, deg_lambda}, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool MultiPoly::has_x() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.deg_x > 0; });
}

bool MultiPoly::has_lambda() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.deg_lambda > 0; });
}

unsigned MultiPoly::degree_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg_x);
    return d;
}

unsigned MultiPoly::degree_lambda() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg_lambda);
    return d;
}

Rational MultiPoly::coeff(unsigned deg_x, unsigned deg_lambda) const {
    auto it = terms_.find({deg_x, deg_lambda});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    for (auto& [m, v] : terms_) v /= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.deg_x + mb.deg_x, ma.deg_lambda + mb.deg_lambda}, ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

MultiPoly MultiPoly::specialize(const std::optional<Rational>& x_val,
                                const std::optional<Rational>& lambda_val) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        Monomial rest;
        if (x_val)
            value *= rpow(*x_val, m.deg_x);
        else
            rest.deg_x = m.deg_x;
        if (lambda_val)
            value *= rpow(*lambda_val, m.deg_lambda);
        else
            rest.deg_lambda = m.deg_lambda;
        out.add_term(rest, value);
    }
    return out;
}

std::string MultiPoly::str(bool unicode_lambda) const {
    if (terms_.empty()) return "0";

    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.deg_x != b.first.deg_x) return a.first.deg_x > b.first.deg_x;
        return a.first.deg_lambda < b.first.deg_lambda;
    });

    const char* lambda_name = unicode_lambda ? "λ" : "l";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }

        std::string factors;
        if (m.deg_lambda > 0) {
            factors += lambda_name;
            if (m.deg_lambda > 1) factors += "^" + std::to_string(m.deg_lambda);
        }
        if (m.deg_x > 0) {
            if (!factors.empty()) factors += "*";
            factors += "x";
            if (m.deg_x > 1) factors += "^" + std::to_string(m.deg_x);
        }

        const Rational magnitude = negative ? -c : c;
        if (factors.empty()) {
            out += magnitude.str();
        } else if (magnitude == Rational(1)) {
            out += factors;
        } else {
            out += magnitude.str() + "*" + factors;
        }
    }
    return out;
}

MultiPoly falling_factorial(const MultiPoly& base, unsigned n) {
    MultiPoly result(Rational(1));
    for (unsigned i = 0; i < n; ++i) result *= base - MultiPoly(Rational(static_cast<long long>(i)));
    return result;
}

}  // namespace degenstir
