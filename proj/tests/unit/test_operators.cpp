#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdirac/exactla.hpp"
#include "sdirac/operators.hpp"

using namespace sdirac;

namespace {

Element unit(const SpaceConfig& cfg) { return Element::unit(cfg); }

Element theta_unit(const SpaceConfig& cfg, Scalar c = 1) {
    SpinorMonomial s{1u, std::vector<int>(cfg.n, 0)};
    return Element::monomial({PolyMonomial::one(cfg), s}, c);
}

}  // namespace

TEST_CASE("clifford action carries the Koszul sign of the polynomial part") {
    SpaceConfig cfg(3, 1);
    Element one = unit(cfg);
    Element xf1 = Element::variable(cfg, 4);
    SpinorMonomial t1{0u, {1}};
    // E4 . (1 ox 1) = sqrt2 t1, no sign
    CHECK(ops::clifford_act(cfg, 4)(one) ==
          Element::monomial({PolyMonomial::one(cfg), t1}, Scalar::sqrt2()));
    // E4 . (xf1 ox 1): both odd, sign flips
    Element expect;
    for (const auto& [k, c] : xf1.terms())
        expect.add({k.p, t1}, -Scalar::sqrt2());
    CHECK(ops::clifford_act(cfg, 4)(xf1) == expect);
    // bosonic generator: no sign against odd polynomial
    Element e1_on_xf1 = ops::clifford_act(cfg, 1)(xf1);
    Element expect2;
    for (const auto& [k, c] : xf1.terms()) expect2.add({k.p, SpinorMonomial{1u, {0}}}, Scalar(1));
    CHECK(e1_on_xf1 == expect2);
}

TEST_CASE("dirac on first-degree monomials") {
    SpaceConfig cfg(3, 1);
    Element x1 = Element::variable(cfg, 1);
    CHECK(ops::dirac(cfg)(x1) == theta_unit(cfg));
    // dirac . vector on constants gives -M
    Element dv = ops::dirac(cfg)(ops::vector_x(cfg)(unit(cfg)));
    CHECK(dv == unit(cfg) * Scalar(-cfg.superdim()));
}

TEST_CASE("both dirac constructions agree") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {2, 1}, {1, 1}, {5, 0}}) {
        SpaceConfig cfg(m, n);
        auto res = equal_on(cfg, ops::dirac(cfg), ops::dirac_stein_weiss(cfg), 3, 2);
        CHECK_MESSAGE(res.equal, "failed at (", m, ",", n, ")");
    }
}

TEST_CASE("vector squares to minus the norm") {
    SpaceConfig cfg(3, 1);
    Operator x = ops::vector_x(cfg);
    auto res = equal_on(cfg, compose(x, x), scale(Scalar(-1), ops::r2(cfg)), 3, 3);
    CHECK(res.equal);
}

TEST_CASE("dirac squares to minus the laplacian") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}) {
        SpaceConfig cfg(m, n);
        Operator dx = ops::dirac(cfg);
        auto res = equal_on(cfg, compose(dx, dx), scale(Scalar(-1), ops::laplace(cfg)), 3, 2);
        CHECK(res.equal);
    }
}

TEST_CASE("the odd bracket closes on the Euler operator") {
    SpaceConfig cfg(3, 1);
    Operator anti = bracket(ops::dirac(cfg), ops::vector_x(cfg));
    Operator expect = add(scale(Scalar(-2), ops::euler(cfg)),
                          scale(Scalar(-cfg.superdim()), ops::identity(cfg)));
    CHECK(equal_on(cfg, anti, expect, 3, 2).equal);
}

TEST_CASE("sl2 relation on constants") {
    SpaceConfig cfg(4, 2);
    Element v = ops::laplace(cfg)(ops::r2(cfg)(unit(cfg)));
    CHECK(v == unit(cfg) * Scalar(2 * cfg.superdim()));
}

TEST_CASE("mixed osp(1|2) brackets on a small block") {
    SpaceConfig cfg(3, 1);
    Operator dx = ops::dirac(cfg);
    Operator x = ops::vector_x(cfg);
    Operator lap = ops::laplace(cfg);
    Operator rsq = ops::r2(cfg);
    Operator h = add(ops::euler(cfg),
                     scale(Scalar(Rational(cfg.superdim(), 2)), ops::identity(cfg)));
    Operator xsq = compose(x, x);
    auto zero = [&](const Operator& op) { return zero_on(cfg, op, 2, 2).equal; };
    CHECK(zero(bracket(x, xsq)));
    CHECK(zero(add(bracket(dx, xsq), scale(Scalar(2), x))));
    CHECK(zero(add(bracket(x, lap), scale(Scalar(2), dx))));
    CHECK(zero(bracket(dx, lap)));
    CHECK(zero(add(bracket(x, h), x)));
    CHECK(zero(sub(bracket(dx, h), dx)));
    CHECK(zero(add(bracket(lap, rsq),
                   scale(Scalar(-1), add(scale(Scalar(4), ops::euler(cfg)),
                                         scale(Scalar(2 * cfg.superdim()), ops::identity(cfg)))))));
}

TEST_CASE("symmetries commute with dirac") {
    SpaceConfig cfg(3, 1);
    Operator dx = ops::dirac(cfg);
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = i; j <= cfg.dims(); ++j) {
            if (i == j && cfg.grade(i) == 0) continue;
            Operator k = ops::K_op(cfg, i, j);
            // the invariance statement: dx K = K dx as compositions
            CHECK(equal_on(cfg, compose(dx, k), compose(k, dx), 2, 2).equal);
            // graded form: the degree-dressed generator supercommutes
            Operator dressed = (cfg.grade(i) ^ cfg.grade(j))
                                   ? compose(k, ops::parity_inv(cfg))
                                   : k;
            dressed.parity = cfg.grade(i) ^ cfg.grade(j);
            CHECK(zero_on(cfg, bracket(dx, dressed), 2, 2).equal);
        }
}

TEST_CASE("generalized symmetry relation for Pi") {
    SpaceConfig cfg(3, 1);
    Operator dx = ops::dirac(cfg);
    for (int j = 1; j <= cfg.dims(); ++j) {
        Operator pij = ops::Pi_op(cfg, j);
        Operator lhs = compose(dx, pij);
        Operator rhs = compose(add(pij, scale(Scalar(2), ops::mul_x(cfg, j))), dx);
        CHECK(equal_on(cfg, lhs, rhs, 2, 2).equal);
    }
}

TEST_CASE("conformal generators satisfy the extended metric relations") {
    SpaceConfig cfg(3, 1);
    // sample of index pairs including the dilation and both translations
    std::vector<std::pair<int, int>> idx = {{-1, 0}, {-1, 1}, {0, 1}, {-1, 4}, {0, 5},
                                            {1, 2},  {4, 5},  {1, 4}, {2, 2}};
    for (auto [a, b] : idx)
        for (auto [c, d] : idx) {
            Operator lhs = bracket(ops::Kconf(cfg, a, b), ops::Kconf(cfg, c, d));
            auto ch = [&](int u) { return conformal_grade(cfg, u); };
            auto h = [&](int u, int v) { return conformal_metric(cfg, u, v); };
            int s2 = (ch(a) & (ch(b) ^ ch(c))) ? -1 : 1;
            int s3 = (ch(c) & ch(d)) ? -1 : 1;
            int s4 = (ch(a) & ch(b)) ? -1 : 1;
            Operator rhs = ops::zero(cfg);
            auto addterm = [&](int coeff, int u, int v) {
                if (coeff) rhs = add(rhs, scale(Scalar(coeff), ops::Kconf(cfg, u, v)));
            };
            addterm(h(c, b), a, d);
            addterm(s2 * h(d, a), b, c);
            addterm(-s3 * h(d, b), a, c);
            addterm(-s4 * h(c, a), b, d);
            CHECK_MESSAGE(equal_on(cfg, lhs, rhs, 2, 1).equal, "pairs (", a, ",", b, "),(", c, ",",
                          d, ")");
        }
}

TEST_CASE("block matrices respect declared shifts and detect violations") {
    SpaceConfig cfg(3, 1);
    BlockMatrix b = block_matrix(cfg, ops::partial_op(cfg, 1), 1, 0);
    // five variables times the two theta layers of the spinor factor
    CHECK(b.cols() == 10);
    CHECK(b.rows() == 2);
    long nonzero = 0;
    for (const auto& col : b.columns) nonzero += col.size();
    CHECK(nonzero == 2);  // one per theta layer, at the x1 column
    Operator lying = ops::mul_x(cfg, 1);
    lying.poly_hi = 0;  // claim no degree raise
    lying.poly_lo = 0;
    CHECK_THROWS_AS(block_matrix(cfg, lying, 1, 0), UnboundedShift);
}

TEST_CASE("bracket requires declared parity") {
    SpaceConfig cfg(3, 1);
    Operator anon = ops::dirac(cfg);
    anon.parity = -1;
    CHECK_THROWS_AS(bracket(anon, ops::vector_x(cfg)), UndeclaredParity);
}

TEST_CASE("equal_on returns the first counterexample") {
    SpaceConfig cfg(3, 1);
    auto res = equal_on(cfg, ops::dirac(cfg), ops::vector_x(cfg), 1, 1);
    CHECK_FALSE(res.equal);
    CHECK(res.witness.has_value());
    // the very first basis vector (the constant) already separates them
    CHECK(res.witness->p.degree() == 0);
}

TEST_CASE("howe generators have consistent metadata") {
    SpaceConfig cfg(3, 1);
    auto gens = ops::howe_generators(cfg);
    CHECK(gens.size() == 6u * 25u);
    for (const auto& g : gens) CHECK(g.parity_declared());
    Operator xd = ops::howe_gen(cfg, ops::HoweFamily::XD, 4, 4);
    CHECK(xd.parity == 0);
}
