#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sdirac/element.hpp"

namespace sdirac {

/// Ordered basis of the polynomials of homogeneous degree k.
std::vector<PolyMonomial> poly_basis(const SpaceConfig& cfg, int k);

/// Ordered basis of polynomials of degree klo..khi.
std::vector<PolyMonomial> poly_basis_range(const SpaceConfig& cfg, int klo, int khi);

/// Ordered basis of the spinor space with total t-degree at most Q
/// (the theta part is finite and never truncated).
std::vector<SpinorMonomial> spinor_basis(const SpaceConfig& cfg, int Q);

/// Basis of the block P_k tensor S^{<=Q}; chirality (0 = even generator
/// count, 1 = odd) filters the spinor factor when set.
std::vector<TermKey> block_basis(const SpaceConfig& cfg, int k, int Q,
                                 std::optional<int> chirality = std::nullopt);
std::vector<TermKey> block_basis_range(const SpaceConfig& cfg, int klo, int khi, int Q,
                                       std::optional<int> chirality = std::nullopt);

/// dim P_k = sum_j C(2n,j) C(k-j+m-1, m-1).
std::uint64_t poly_dim(const SpaceConfig& cfg, int k);
/// dim S^{<=Q} = 2^d C(Q+n, n).
std::uint64_t spinor_dim(const SpaceConfig& cfg, int Q);

std::uint64_t binomial(int n, int k);

/// One row per monomial, columns are exponents (bosonic, then fermionic).
void dump_poly_basis_csv(const SpaceConfig& cfg, const std::vector<PolyMonomial>& basis,
                         std::ostream& os);
/// One row per monomial, columns are exponents (theta, then t).
void dump_spinor_basis_csv(const SpaceConfig& cfg, const std::vector<SpinorMonomial>& basis,
                           std::ostream& os);

}  // namespace sdirac
