#pragma once

#include <functional>
#include <map>
#include <vector>

#include "sdirac/element.hpp"

namespace sdirac {

/// Word in the abstract Clifford generators, stored as a factor sequence.
/// In normal form the indices are ascending, strictly so at bosonic indices;
/// repeated fermionic indices are legitimate (Weyl-type generators square
/// to something nonzero).
using CliffordWord = std::vector<int>;

/// Finitely supported combination of Clifford words.
class CliffordCombination {
  public:
    using Terms = std::map<CliffordWord, Scalar>;

    CliffordCombination() = default;
    static CliffordCombination scalar(Scalar c) {
        CliffordCombination r;
        r.add({}, std::move(c));
        return r;
    }
    static CliffordCombination generator(int j, Scalar c = 1) {
        CliffordCombination r;
        r.add({j}, std::move(c));
        return r;
    }

    void add(CliffordWord w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    CliffordCombination& operator+=(const CliffordCombination& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    CliffordCombination operator*(const Scalar& c) const {
        CliffordCombination r;
        if (c.is_zero()) return r;
        for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
        return r;
    }
    friend bool operator==(const CliffordCombination&, const CliffordCombination&) = default;

  private:
    Terms terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Rewrites every word to normal form with the relation
/// E_k E_l = -(-1)^{[k][l]} E_l E_k - 2 g_{lk}.  The strategy only selects
/// which out-of-order pair is attacked first; the result is independent of it.
CliffordCombination cl_normal_form(const SpaceConfig& cfg, const CliffordCombination& in,
                                   RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Concatenation product followed by normal form.
CliffordCombination cl_multiply(const SpaceConfig& cfg, const CliffordCombination& a,
                                const CliffordCombination& b);

/// The algebra morphism generated by hat(E_i) = sum_j E_j g_{ji}.
CliffordCombination hat(const SpaceConfig& cfg, const CliffordCombination& in);
CliffordCombination hat_generator(const SpaceConfig& cfg, int k);

/// Bivector B_ij = -1/2 (g_{ji} + hat(E_i) hat(E_j)), in normal form.
CliffordCombination bivector(const SpaceConfig& cfg, int i, int j);

/// Exact linear endomorphism of the spinor space, with its grading data:
/// parity in the operator superalgebra and bounds on the t-degree shift.
struct SpinorOperator {
    std::function<SpinorElement(const SpinorMonomial&)> map;
    int parity = 0;   // grading that makes the vector variable odd
    int t_lo = 0, t_hi = 0;
    std::string label;

    SpinorElement operator()(const SpinorMonomial& s) const { return map(s); }
    SpinorElement operator()(const SpinorElement& e) const {
        SpinorElement r;
        for (const auto& [s, c] : e.terms()) r += map(s) * c;
        return r;
    }
};

/// Action of theta_j, d/dtheta_j, t_i, d/dt_i and the degree involution G on
/// a spinor monomial.  These are the building blocks of the realization.
SpinorElement apply_theta(const SpaceConfig& cfg, int j, const SpinorMonomial& s);
SpinorElement apply_dtheta(const SpaceConfig& cfg, int j, const SpinorMonomial& s);
SpinorElement apply_t(const SpaceConfig& cfg, int i, const SpinorMonomial& s);
SpinorElement apply_dt(const SpaceConfig& cfg, int i, const SpinorMonomial& s);
/// G = (-1)^{generator count}, realized diagonally.
SpinorElement apply_grading(const SpaceConfig& cfg, const SpinorMonomial& s);

/// The realization of the generator E_j on spinor space:
///   E_j       -> theta_j - d/dtheta_j          (j = 1..d)
///   E_{d+j}   -> i (theta_j + d/dtheta_j)      (j = 1..d)
///   E_m       -> i G                           (m odd)
///   E_{m+i}   -> sqrt2 t_i                     (i = 1..n)
///   E_{m+n+i} -> -sqrt2 d/dt_i                 (i = 1..n)
SpinorOperator kappa_generator(const SpaceConfig& cfg, int j);

/// kappa extended multiplicatively to an arbitrary combination of words.
SpinorOperator kappa(const SpaceConfig& cfg, const CliffordCombination& comb,
                     std::string label = "kappa");

/// E-perp contraction on one slot: maps E_k tensor v to kappa(hat(E_k)) v.
SpinorElement e_perp(const SpaceConfig& cfg, int k, const SpinorElement& v);

/// Action of the standard osp generator on the defining representation:
/// K_ij . E_k = g_{kj} E_i - (-1)^{[i][j]} g_{ki} E_j, returned as the
/// coefficient list over the basis E_1..E_{m+2n}.
std::vector<Scalar> nat_action(const SpaceConfig& cfg, int i, int j, int k);

}  // namespace sdirac
