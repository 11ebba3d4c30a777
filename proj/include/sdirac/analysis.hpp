#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdirac/exactla.hpp"

namespace sdirac {

/// Weight in (eps; delta) coordinates; entries are integers or half-integers
/// for everything arising here.
struct Weight {
    std::vector<Rational> eps;    // size d
    std::vector<Rational> delta;  // size n

    friend bool operator==(const Weight&, const Weight&) = default;
    std::string str() const;
};

/// k eps_1 + omega_d - 1/2 nu_n, the highest weight of the degree-k
/// monogenics for m odd.
Weight monogenic_weight_odd(const SpaceConfig& cfg, int k);

/// Coefficient vectors c with sum_i c_i columns[i] = 0 (deterministic).
std::vector<SparseVec> relation_kernel(const std::vector<SparseVec>& columns);

// --- harmonics and monogenics ---------------------------------------------

struct HarmonicsResult {
    std::vector<Element> basis;  // kernel of the Laplacian on P_k
    // The reducibility window: when M is in -2N and 2 - M/2 <= k <= 2 - M,
    // the submodule R^{2k+M-2} H_{2-M-k} must embed.
    bool window_applies = false;
    bool window_pass = true;
    int window_submodule_dim = 0;
};
HarmonicsResult harmonics(const SpaceConfig& cfg, int k);

/// Kernel of the Dirac operator on P_k ox S^{<=Q}; chirality (0 even / 1 odd
/// generator count) is only meaningful for m even.
std::vector<Element> monogenics(const SpaceConfig& cfg, int k, int q,
                                std::optional<int> chirality = std::nullopt);

// --- structural checks ------------------------------------------------------

struct FischerResult {
    bool pass = false;
    int dim_block = 0;      // H_k ox S^{<=Q}
    int dim_mk = 0;         // monogenics at truncation
    int dim_x_mk1 = 0;      // x . monogenics of degree k-1
    int dim_intersection = 0;
    bool refined_checked = false;  // the +/- refinement for m even
    bool refined_pass = true;
    std::string failure;
};
/// Verifies the explicit monogenic projection on every basis vector of
/// H_k ox S^{<=Q} and the exact disjointness of the two pieces.
/// Throws FischerSingular when 2k - 2 + M = 0.
FischerResult fischer_check(const SpaceConfig& cfg, int k, int q);

struct CasimirResult {
    bool nilpotent_case = false;  // 2k - 2 + M = 0
    bool pass = false;
    Rational second_eigenvalue;   // -(2k-2+M) in the diagonalizable case
    bool c_nonzero = false;
    bool factor_nonzero = false;  // C + (2k-2+M) as an operator
    std::string failure;
};
/// Quadratic relation of x Dx on H_k ox S^{<=Q}: C (C + 2k-2+M) = 0 with both
/// factors nonzero, or C != 0 with C^2 = 0 in the degenerate case.
CasimirResult casimir_test(const SpaceConfig& cfg, int k, int q);

struct SubmoduleResult {
    bool pass = false;
    int power = 0;        // 2d - 2n + 2k - 1
    int source_degree = 0;  // 2n - 2d - k + 1
    int dim_m_plus = 0, dim_m_minus = 0;
    int dim_sub_plus = 0, dim_sub_minus = 0;  // embedded x^p M^{-/+}
    bool stable_q = true;  // dimensions reproduce at Q+1
    std::string failure;
};
/// The unique-submodule window for m = 2d, d <= n, 1+n-d <= k <= 1+2n-2d:
/// x^{2d-2n+2k-1} M^{-/+}_{2n-2d-k+1} inside M_k^{+/-}, and the intersection
/// with x . (P ox S) is exactly that submodule.  Throws WindowViolation
/// outside the window.
SubmoduleResult submodule_check(const SpaceConfig& cfg, int k, int q);

// --- root system and singular vectors --------------------------------------

struct RootSpace {
    std::vector<Rational> root;  // (eps_1..eps_d, delta_1..delta_n)
    Operator op;
    bool positive = false;
};

struct RootSystem {
    std::vector<Operator> cartan;  // H^eps_1..d then H^delta_1..n
    std::vector<RootSpace> roots;
    int rank() const { return static_cast<int>(cartan.size()); }
    std::vector<Operator> positive_ops() const;
};

/// Cartan operators and the full root decomposition of span{K_ij}, computed
/// by exact simultaneous diagonalization of the adjoint action.  Positivity
/// is lexicographic on (eps_1..eps_d, delta_1..delta_n).
/// Throws NoCartanConfig when d = n = 0.
RootSystem build_root_system(const SpaceConfig& cfg);

struct SingularVector {
    Element vector;
    Weight weight;
};
/// All vectors in span(space) annihilated by every positive root operator,
/// decomposed into weight lines of the Cartan action.
std::vector<SingularVector> singular_vectors(const SpaceConfig& cfg,
                                             const std::vector<Element>& space);

// --- iterated symmetry powers ----------------------------------------------

struct PiPowerResult {
    std::vector<bool> nonzero;  // index k = 1..k_max: Pi_1^k (1 ox 1) != 0
    bool pass = false;
    std::string detail;
};
/// Iterates Pi_1 on the constant.  For M > 0 or M odd all powers up to k_max
/// must be nonzero; for M = -2p the powers survive exactly up to 2p+1.
PiPowerResult pi_power_test(const SpaceConfig& cfg, int k_max);

// --- closing algebra ---------------------------------------------------------

struct HoweClosureResult {
    int rank = 0;
    int expected = 0;
    bool rank_ok = false;
    bool stable = false;      // rank unchanged at D_cut + 1
    bool brackets_ok = false;
    int bracket_pairs = 0;
    std::string failure;
};
/// dim of the orthosymplectic algebra on a + 2b graded dimensions.
int osp_dimension(int a, int b2);
/// Expected dim for the closing algebra at (m, n).
int howe_expected_dim(const SpaceConfig& cfg);
/// Rank of the generator span on P_{<=D} ox S^{<=Q} stacked exactly, rank
/// stability under D -> D+1, and membership of every pairwise bracket.
HoweClosureResult howe_closure_check(const SpaceConfig& cfg, int d_cut, int q_cut,
                                     bool check_brackets = true);

}  // namespace sdirac
