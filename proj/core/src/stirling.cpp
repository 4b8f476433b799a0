#include "degenstir/stirling.hpp"

namespace degenstir {

void StirlingTable::grow(unsigned n) const {
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= n) {
        const unsigned prev_n = static_cast<unsigned>(rows_.size()) - 1;
        const auto& prev = rows_[prev_n];
        std::vector<Integer> row(prev_n + 2);
        for (unsigned k = 0; k <= prev_n + 1; ++k) {
            const Integer lower = (k >= 1) ? prev[k - 1] : Integer(0);
            const Integer same = (k <= prev_n) ? prev[k] : Integer(0);
            row[k] = (kind_ == StirlingKind::first) ? lower - Integer(prev_n) * same
                                                    : lower + Integer(k) * same;
        }
        rows_.push_back(std::move(row));
    }
}

Rational StirlingTable::at(unsigned n, unsigned k) const {
    if (k > n) return Rational(0);
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return Rational(rows_[n][k]);
}

Rational stirling1(unsigned n, unsigned k) {
    static const StirlingTable table(StirlingKind::first);
    return table.at(n, k);
}

Rational stirling2(unsigned n, unsigned k) {
    static const StirlingTable table(StirlingKind::second);
    return table.at(n, k);
}

MultiPoly stirling2_poly(unsigned n, unsigned k) {
    MultiPoly out;
    for (unsigned l = k; l <= n; ++l)
        out += MultiPoly::monomial(n - l, 0, Rational(binomial(n, l)) * stirling2(l, k));
    return out;
}

}  // namespace degenstir
