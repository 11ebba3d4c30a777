#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "sdirac/enumerate.hpp"
#include "sdirac/operators.hpp"

namespace sdirac {

/// Sparse exact vector keyed by coordinate index.
using SparseVec = std::map<long, Scalar>;

void sparse_axpy(SparseVec& target, const Scalar& c, const SparseVec& src);
SparseVec sparse_scale(const SparseVec& a, const Scalar& c);

/// Row echelon accumulator with the deterministic leftmost-pivot rule: every
/// stored row has leading coefficient one and distinct leading index, and the
/// rows are mutually reduced.
class Echelon {
  public:
    /// Fully reduces v against the rows; returns the canonical remainder.
    SparseVec reduce(SparseVec v) const;
    /// Inserts the reduced remainder of v as a new row; true if rank grew.
    bool add(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<long, SparseVec>& rows() const { return rows_; }

  private:
    std::map<long, SparseVec> rows_;  // leading index -> row
};

/// Exact matrix of an operator on an enumerated graded block.  Columns are
/// images of the domain basis in coordinates of the codomain basis; the
/// codomain is sized from the operator's shift bounds and building the
/// matrix fails loudly if an image term ever falls outside it.
struct BlockMatrix {
    std::vector<TermKey> domain;
    std::vector<TermKey> codomain;
    std::map<TermKey, long> codomain_index;
    std::vector<SparseVec> columns;

    long rows() const { return static_cast<long>(codomain.size()); }
    long cols() const { return static_cast<long>(columns.size()); }

    /// Cells are the four field coordinates joined with ';'.
    void to_csv(std::ostream& os, const SpaceConfig& cfg) const;
};

/// Matrix of A on the domain P_k ox S^{<=Q} (optionally one chirality).
BlockMatrix block_matrix(const SpaceConfig& cfg, const Operator& a, int k, int q,
                         std::optional<int> chirality = std::nullopt);
/// Same with an explicit domain basis living in degrees k_lo..k_hi.
BlockMatrix block_matrix(const SpaceConfig& cfg, const Operator& a, std::vector<TermKey> domain,
                         int k_lo, int k_hi, int q);

/// Kernel basis as coefficient vectors over the domain basis, via exact
/// elimination with deterministic pivoting.
std::vector<SparseVec> kernel_basis(const BlockMatrix& b);
/// Kernel as Elements of the function space.
std::vector<Element> kernel_elements(const BlockMatrix& b);

long rank(const BlockMatrix& b);
/// Echelon basis of the image span, as Elements over the codomain basis.
std::vector<Element> image_elements(const BlockMatrix& b);

/// Exact span of Elements with no ambient block needed: coordinates are
/// assigned from the terms actually present, in term order, so every result
/// is reproducible.
class ElementSpan {
  public:
    ElementSpan() = default;
    explicit ElementSpan(const std::vector<Element>& vectors);

    int dim() const { return ech_.rank(); }
    bool contains(const Element& v) const;
    bool contains_all(const std::vector<Element>& vs) const;
    /// Echelonized representatives.
    std::vector<Element> basis() const;

    friend ElementSpan intersect(const ElementSpan& a, const ElementSpan& b);

  private:
    SparseVec coords(const Element& e, bool* ok) const;

    std::vector<TermKey> keys_;
    std::map<TermKey, long> index_;
    Echelon ech_;
};

ElementSpan intersect(const ElementSpan& a, const ElementSpan& b);

}  // namespace sdirac
