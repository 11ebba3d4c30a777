#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdirac/clifford.hpp"
#include "sdirac/element.hpp"

namespace sdirac {

/// Composable exact linear map on Elements.  parity is the grading in which
/// the Dirac operator and the vector variable are odd; -1 means undeclared.
/// The shift bounds are hard guarantees used to size block codomains, never
/// to truncate outputs.
struct Operator {
    std::string label;
    int parity = -1;
    int poly_lo = 0, poly_hi = 0;  // polynomial degree shift bounds
    int t_lo = 0, t_hi = 0;        // spinor t-degree shift bounds
    std::function<Element(const Element&)> fn;

    Element operator()(const Element& e) const { return fn(e); }
    bool parity_declared() const { return parity == 0 || parity == 1; }
};

Operator compose(const Operator& a, const Operator& b);  // a after b
Operator add(const Operator& a, const Operator& b);
Operator sub(const Operator& a, const Operator& b);
Operator scale(const Scalar& c, const Operator& a);
Operator power(const Operator& a, int k);

/// Graded commutator [a, b] = a b - (-1)^{|a||b|} b a.
/// Throws UndeclaredParity unless both parities are declared.
Operator bracket(const Operator& a, const Operator& b);

namespace ops {

Operator identity(const SpaceConfig& cfg);
Operator zero(const SpaceConfig& cfg);
Operator mul_x(const SpaceConfig& cfg, int j);
Operator partial_op(const SpaceConfig& cfg, int j);
Operator partial_up_op(const SpaceConfig& cfg, int j);
Operator euler(const SpaceConfig& cfg);
Operator r2(const SpaceConfig& cfg);
Operator laplace(const SpaceConfig& cfg);

/// Clifford generator acting on the spinor factor with the Koszul sign
/// against the polynomial parity: E_k . (h ox v) = (-1)^{[k]|h|} h ox E_k.v.
Operator clifford_act(const SpaceConfig& cfg, int k);
/// Same rule extended to an arbitrary Clifford combination.
Operator clifford_comb_act(const SpaceConfig& cfg, const CliffordCombination& comb,
                           std::string label);

/// Dirac operator as sum_k kappa(hat(E_k)) partial_k.
Operator dirac(const SpaceConfig& cfg);
/// Dirac operator as the compression of the gradient (the construction by
/// invariant projection); must agree with dirac() everywhere.
Operator dirac_stein_weiss(const SpaceConfig& cfg);

/// The vector variable sum_j X_j E_j acting on spinor-valued polynomials.
Operator vector_x(const SpaceConfig& cfg);

Operator L_op(const SpaceConfig& cfg, int i, int j);
Operator B_op(const SpaceConfig& cfg, int i, int j);
/// K_ij = L_ij + B_ij, the symmetries commuting with the Dirac operator.
Operator K_op(const SpaceConfig& cfg, int i, int j);

/// Generalized symmetry Pi_j = x hat(E_j) + X_j (M + 2 E) - R^2 partial_up(j).
Operator Pi_op(const SpaceConfig& cfg, int j);

/// Conformal generator for indices in {-1, 0, 1..m+2n}:
///   K_{-1,0}  = E + (M-1)/2
///   K_{-1,j}  = (Pi_j - partial_up(j)) / 2
///   K_{0,j}   = (Pi_j + partial_up(j)) / 2
///   K_{i,j}   = K_op(i, j)                      (i, j > 0)
/// extended to arbitrary index order by graded antisymmetry.
Operator Kconf(const SpaceConfig& cfg, int a, int b);

/// x . dirac, the quadratic invariant up to an additive constant.
Operator casimir(const SpaceConfig& cfg);

/// (-1)^E, the polynomial degree involution.
Operator parity_inv(const SpaceConfig& cfg);

enum class HoweFamily { XX, XD, DD, BV, XE, ED };
/// Generators of the closing algebra: quadratic expressions dressed with
/// (-1)^{([i]+[j]) E}; XD carries the additive constant g_{ji}.
Operator howe_gen(const SpaceConfig& cfg, HoweFamily family, int i, int j);
std::vector<Operator> howe_generators(const SpaceConfig& cfg);

}  // namespace ops

/// Gradient as the list of coefficients of the middle tensor slot:
/// grad(h ox v)_j = (-1)^{[j](1+|h|)} (partial_j h) ox v.
std::vector<Element> gradient(const SpaceConfig& cfg, const Element& f);

/// Contraction of a C^{m|2n}-indexed family back into the function space by
/// the invariant projection: component j maps through kappa(hat(E_j)).
Element e_perp_contract(const SpaceConfig& cfg, const std::vector<Element>& components);

struct EqualOnResult {
    bool equal = true;
    std::optional<TermKey> witness;  // first differing basis vector
    Element lhs_value, rhs_value;
};

/// Applies both operators to every basis element of P_{<=k_max} ox S^{<=Q_max}
/// (exact outputs, no projection) and compares.
EqualOnResult equal_on(const SpaceConfig& cfg, const Operator& a, const Operator& b, int k_max,
                       int q_max);

/// True when a annihilates the whole block.
EqualOnResult zero_on(const SpaceConfig& cfg, const Operator& a, int k_max, int q_max);

}  // namespace sdirac
