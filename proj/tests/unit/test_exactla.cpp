#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdirac/exactla.hpp"

using namespace sdirac;

namespace {

// Independent dense Gaussian elimination with a column permutation, used as
// the oracle for kernel dimensions.  Deliberately unrelated to the sparse
// echelon in the library.
long dense_rank_permuted(const BlockMatrix& b, const std::vector<long>& perm) {
    std::vector<std::vector<Scalar>> m(b.rows(), std::vector<Scalar>(b.cols(), Scalar(0)));
    for (long j = 0; j < b.cols(); ++j)
        for (const auto& [i, c] : b.columns[perm[j]]) m[i][j] = c;
    long rank = 0;
    for (long col = 0; col < b.cols() && rank < b.rows(); ++col) {
        long pivot = -1;
        for (long r = rank; r < b.rows(); ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        Scalar inv = m[rank][col].inverse();
        for (long c2 = col; c2 < b.cols(); ++c2) m[rank][c2] = m[rank][c2] * inv;
        for (long r = 0; r < b.rows(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (long c2 = col; c2 < b.cols(); ++c2) m[r][c2] = m[r][c2] - f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

std::vector<long> identity_perm(long n) {
    std::vector<long> p(n);
    for (long i = 0; i < n; ++i) p[i] = i;
    return p;
}

}  // namespace

TEST_CASE("echelon basics") {
    Echelon e;
    CHECK(e.add({{0, Scalar(1)}, {2, Scalar(3)}}));
    CHECK(e.add({{1, Scalar(2)}}));
    CHECK_FALSE(e.add({{0, Scalar(2)}, {1, Scalar(2)}, {2, Scalar(6)}}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({{0, Scalar(-1)}, {2, Scalar(-3)}}));
    CHECK_FALSE(e.contains({{2, Scalar(1)}}));
}

TEST_CASE("classical harmonic kernel dimension") {
    // kernel of the Laplacian on degree-2 polynomials in 3 variables,
    // spinor factor trivial
    SpaceConfig cfg(3, 0);
    std::vector<TermKey> domain;
    for (const auto& p : poly_basis(cfg, 2)) domain.push_back({p, SpinorMonomial::one(cfg)});
    BlockMatrix b = block_matrix(cfg, ops::laplace(cfg), std::move(domain), 2, 2, 0);
    auto kernel = kernel_elements(b);
    CHECK(kernel.size() == 5);
    // every kernel vector really is annihilated
    for (const auto& v : kernel) CHECK(ops::laplace(cfg)(v).is_zero());
}

TEST_CASE("rank plus nullity is the domain dimension on random operator blocks") {
    SpaceConfig cfg(3, 1);
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> pick(1, cfg.dims());
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> which(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Operator op = [&]() -> Operator {
            switch (which(rng)) {
                case 0: return ops::partial_op(cfg, pick(rng));
                case 1: return compose(ops::mul_x(cfg, pick(rng)), ops::partial_op(cfg, pick(rng)));
                default: return ops::dirac(cfg);
            }
        }();
        int k = deg(rng);
        BlockMatrix b = block_matrix(cfg, op, k, 2);
        CHECK(rank(b) + static_cast<long>(kernel_basis(b).size()) == b.cols());
    }
}

TEST_CASE("kernel agrees with the permuted dense oracle") {
    SpaceConfig cfg(3, 1);
    BlockMatrix b = block_matrix(cfg, ops::dirac(cfg), 2, 2);
    std::mt19937 rng(77);
    auto perm = identity_perm(b.cols());
    std::shuffle(perm.begin(), perm.end(), rng);
    long nullity_oracle = b.cols() - dense_rank_permuted(b, perm);
    CHECK(static_cast<long>(kernel_basis(b).size()) == nullity_oracle);
    CHECK(rank(b) == dense_rank_permuted(b, identity_perm(b.cols())));
}

TEST_CASE("kernel subspace is invariant under column permutation round trips") {
    SpaceConfig cfg(2, 1);
    BlockMatrix b = block_matrix(cfg, ops::laplace(cfg), 2, 1);
    auto kernel = kernel_elements(b);
    // permute the domain basis, solve, map back; the spans must agree
    std::mt19937 rng(3);
    std::vector<long> perm = identity_perm(b.cols());
    std::shuffle(perm.begin(), perm.end(), rng);
    BlockMatrix pb = b;
    for (long j = 0; j < b.cols(); ++j) {
        pb.columns[j] = b.columns[perm[j]];
        pb.domain[j] = b.domain[perm[j]];
    }
    auto pkernel = kernel_elements(pb);
    ElementSpan s1(kernel), s2(pkernel);
    CHECK(s1.dim() == s2.dim());
    CHECK(s1.contains_all(pkernel));
    CHECK(s2.contains_all(kernel));
}

TEST_CASE("span membership matches kernel membership") {
    SpaceConfig cfg(3, 1);
    BlockMatrix b = block_matrix(cfg, ops::dirac(cfg), 1, 1);
    auto kernel = kernel_elements(b);
    ElementSpan span(kernel);
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Element v;
        for (const auto& kv : kernel) v += kv * Scalar(coeff(rng));
        CHECK(span.contains(v));
        CHECK(ops::dirac(cfg)(v).is_zero());
    }
    // a vector that the operator does not kill is outside
    Element probe = Element::variable(cfg, 1);
    if (!ops::dirac(cfg)(probe).is_zero()) CHECK_FALSE(span.contains(probe));
}

TEST_CASE("span intersection") {
    SpaceConfig cfg(2, 1);
    Element e1 = Element::variable(cfg, 1);
    Element e2 = Element::variable(cfg, 2);
    Element e3 = Element::variable(cfg, 3);
    ElementSpan a({e1, e2});
    ElementSpan b({e2, e3});
    ElementSpan c = intersect(a, b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(e2));
    CHECK_FALSE(c.contains(e1));
    // disjoint spans meet trivially
    CHECK(intersect(ElementSpan({e1}), ElementSpan({e3})).dim() == 0);
}

TEST_CASE("image span reproduces rank") {
    SpaceConfig cfg(3, 1);
    BlockMatrix b = block_matrix(cfg, ops::dirac(cfg), 2, 1);
    CHECK(static_cast<long>(image_elements(b).size()) == rank(b));
}

TEST_CASE("csv export shape") {
    SpaceConfig cfg(2, 0);
    BlockMatrix b = block_matrix(cfg, ops::partial_op(cfg, 1), 1, 0);
    std::ostringstream os;
    b.to_csv(os, cfg);
    std::string text = os.str();
    // header plus one line per codomain vector
    CHECK(std::count(text.begin(), text.end(), '\n') == b.rows() + 1);
    CHECK(text.find("1/1") != std::string::npos);
}
