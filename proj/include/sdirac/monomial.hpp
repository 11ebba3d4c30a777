#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sdirac/space.hpp"

namespace sdirac {

/// Monomial in the graded polynomial algebra: bosonic exponents x_1..x_m and
/// a bitmask of fermionic exponents (each 0 or 1) for the 2n odd variables.
struct PolyMonomial {
    std::vector<int> bos;   // size m
    std::uint32_t fer = 0;  // bit i-1 set  <=>  odd variable i present

    static PolyMonomial one(const SpaceConfig& cfg) { return {std::vector<int>(cfg.m, 0), 0}; }

    int fermion_count() const { return std::popcount(fer); }
    int degree() const { return std::accumulate(bos.begin(), bos.end(), 0) + fermion_count(); }
    int parity() const { return fermion_count() & 1; }
    bool has_fermion(int i) const { return (fer >> (i - 1)) & 1u; }  // i in 1..2n

    // Graded lexicographic: degree first, then bosonic exponents, then the
    // fermionic bitmask.  Keeps all enumerations and pivots deterministic.
    friend std::strong_ordering operator<=>(const PolyMonomial& x, const PolyMonomial& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        if (auto c = x.bos <=> y.bos; c != 0) return c;
        return x.fer <=> y.fer;
    }
    friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;

    std::string str(const SpaceConfig& cfg) const;
};

/// Monomial in the spinor algebra: theta bitmask (d anticommuting generators
/// of parity 0) and t exponents (n commuting generators of parity 1).
struct SpinorMonomial {
    std::uint32_t theta = 0;  // bit j-1 set <=> theta_j present
    std::vector<int> t;       // size n

    static SpinorMonomial one(const SpaceConfig& cfg) { return {0, std::vector<int>(cfg.n, 0)}; }

    int theta_count() const { return std::popcount(theta); }
    int t_degree() const { return std::accumulate(t.begin(), t.end(), 0); }
    int lambda_degree() const { return theta_count() + t_degree(); }
    // Superalgebra parity: only t generators are odd.
    int parity() const { return t_degree() & 1; }
    // The +/- split of spinor space is by total generator count.
    int chirality() const { return lambda_degree() & 1; }
    bool has_theta(int j) const { return (theta >> (j - 1)) & 1u; }

    friend std::strong_ordering operator<=>(const SpinorMonomial& x, const SpinorMonomial& y) {
        if (auto c = x.lambda_degree() <=> y.lambda_degree(); c != 0) return c;
        if (auto c = x.theta <=> y.theta; c != 0) return c;
        return x.t <=> y.t;
    }
    friend bool operator==(const SpinorMonomial&, const SpinorMonomial&) = default;

    std::string str(const SpaceConfig& cfg) const;
};

/// Basis label of the function space: polynomial part tensor spinor part.
struct TermKey {
    PolyMonomial p;
    SpinorMonomial s;

    int parity() const { return (p.parity() + s.parity()) & 1; }

    friend std::strong_ordering operator<=>(const TermKey&, const TermKey&) = default;

    std::string str(const SpaceConfig& cfg) const;
};

}  // namespace sdirac
