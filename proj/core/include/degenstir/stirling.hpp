#pragma once

#include <mutex>
#include <vector>

#include "degenstir/multipoly.hpp"

namespace degenstir {

enum class StirlingKind { first, second };

/// Memoized triangle of Stirling numbers, grown on demand. The cache is
/// append-only and all access goes through one mutex, so any number of
/// threads may call at() concurrently.
class StirlingTable {
public:
    explicit StirlingTable(StirlingKind kind) : kind_(kind) {}

    /// S(n,k); zero for k > n. First kind is the signed variant.
    Rational at(unsigned n, unsigned k) const;

private:
    StirlingKind kind_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Integer>> rows_;
    void grow(unsigned n) const;
};

/// Signed Stirling number of the first kind: coefficient of x^k in
/// x(x-1)...(x-n+1).
Rational stirling1(unsigned n, unsigned k);

/// Stirling number of the second kind: partitions of an n-set into k blocks.
Rational stirling2(unsigned n, unsigned k);

/// Stirling polynomial of the second kind:
/// S2(n,k|x) = sum_{l=k}^{n} C(n,l) S2(l,k) x^{n-l}; zero when n < k.
MultiPoly stirling2_poly(unsigned n, unsigned k);

}  // namespace degenstir
