#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdirac/analysis.hpp"

using namespace sdirac;

TEST_CASE("classical harmonic dimensions at n = 0") {
    SpaceConfig cfg(3, 0);
    for (int k = 0; k <= 5; ++k) {
        auto h = harmonics(cfg, k);
        CHECK(h.basis.size() == static_cast<std::size_t>(k == 0 ? 1 : 2 * k + 1));
        CHECK_FALSE(h.window_applies);
    }
}

TEST_CASE("degree-one polynomials are always harmonic") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {2, 2}}) {
        SpaceConfig cfg(m, n);
        CHECK(harmonics(cfg, 1).basis.size() == poly_dim(cfg, 1));
    }
}

TEST_CASE("reducibility window at superdimension zero") {
    SpaceConfig cfg(4, 2);  // M = 0, window is exactly k = 2
    auto h1 = harmonics(cfg, 1);
    CHECK_FALSE(h1.window_applies);
    auto h2 = harmonics(cfg, 2);
    CHECK(h2.window_applies);
    CHECK(h2.window_pass);
    CHECK(h2.window_submodule_dim == 1);  // R^2 H_0
}

TEST_CASE("monogenics of degree zero fill the spinor space") {
    SpaceConfig cfg(3, 1);
    for (int q = 0; q <= 3; ++q)
        CHECK(monogenics(cfg, 0, q).size() == spinor_dim(cfg, q));
}

TEST_CASE("classical monogenic dimensions at (3,0)") {
    SpaceConfig cfg(3, 0);
    for (int k = 0; k <= 5; ++k)
        CHECK(monogenics(cfg, k, 0).size() == static_cast<std::size_t>(2 * (k + 1)));
}

TEST_CASE("kernel vectors are genuinely annihilated, not truncated") {
    SpaceConfig cfg(3, 1);
    Operator dx = ops::dirac(cfg);
    for (int k = 1; k <= 3; ++k)
        for (const auto& v : monogenics(cfg, k, k + 2)) CHECK(dx(v).is_zero());
}

TEST_CASE("monogenic dimension matches an independent elimination") {
    // dense row reduction with a fixed nontrivial column order
    SpaceConfig cfg(3, 1);
    BlockMatrix b = block_matrix(cfg, ops::dirac(cfg), 1, 2);
    std::vector<std::vector<Scalar>> m(b.rows(), std::vector<Scalar>(b.cols(), Scalar(0)));
    for (long j = 0; j < b.cols(); ++j)
        for (const auto& [i, c] : b.columns[j]) m[i][(j * 7 + 3) % b.cols()] = c;
    long rank = 0;
    for (long col = 0; col < b.cols(); ++col) {
        long piv = -1;
        for (long r = rank; r < b.rows(); ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (long r = 0; r < b.rows(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Scalar f = m[r][col] * m[rank][col].inverse();
            for (long c2 = 0; c2 < b.cols(); ++c2) m[r][c2] = m[r][c2] - f * m[rank][c2];
        }
        ++rank;
    }
    CHECK(monogenics(cfg, 1, 2).size() == static_cast<std::size_t>(b.cols() - rank));
}

TEST_CASE("powers of the vector variable act as the bracket predicts") {
    // Dx x^{2l} M_k = -2l x^{2l-1} M_k and
    // Dx x^{2l+1} M_k = -(2k + 2l + M) x^{2l} M_k
    SpaceConfig cfg(3, 1);
    Operator dx = ops::dirac(cfg);
    Operator x = ops::vector_x(cfg);
    for (int k = 0; k <= 2; ++k) {
        auto mk = monogenics(cfg, k, k + 1);
        REQUIRE(!mk.empty());
        for (const auto& v : mk) {
            Element cur = v;  // x^{2l} v for growing l
            for (int l = 0; l <= 2; ++l) {
                Element odd = x(cur);  // x^{2l+1} v
                int coeff_odd = -(2 * k + 2 * l + cfg.superdim());
                CHECK(dx(odd) == cur * Scalar(coeff_odd));
                Element even = x(odd);  // x^{2l+2} v
                int coeff_even = -2 * (l + 1);
                CHECK(dx(even) == odd * Scalar(coeff_even));
                cur = even;
            }
        }
    }
}

TEST_CASE("fischer projection at (3,1)") {
    SpaceConfig cfg(3, 1);
    for (int k = 1; k <= 3; ++k) {
        auto res = fischer_check(cfg, k, k + 2);
        CHECK_MESSAGE(res.pass, res.failure);
        CHECK(res.dim_intersection == 0);
    }
}

TEST_CASE("fischer projection in the classical limit (5,0)") {
    SpaceConfig cfg(5, 0);
    for (int k = 1; k <= 2; ++k) {
        auto res = fischer_check(cfg, k, 2);
        CHECK_MESSAGE(res.pass, res.failure);
    }
}

TEST_CASE("fischer singularity at the excluded degree") {
    SpaceConfig cfg(4, 2);  // M = 0, k = 1 excluded
    CHECK_THROWS_AS(fischer_check(cfg, 1, 3), FischerSingular);
    auto ok = fischer_check(cfg, 2, 3);  // one degree up the projection exists
    CHECK_MESSAGE(ok.pass, ok.failure);
}

TEST_CASE("casimir quadratic relation and nilpotent degeneration") {
    SpaceConfig a(3, 1);  // M = 1: C(C+1) = 0 with both factors nonzero
    auto r1 = casimir_test(a, 1, 2);
    CHECK_MESSAGE(r1.pass, r1.failure);
    CHECK_FALSE(r1.nilpotent_case);
    CHECK(r1.second_eigenvalue == Rational(-1));

    SpaceConfig b(4, 2);  // M = 0, k = 1: C != 0 and C^2 = 0
    auto r2 = casimir_test(b, 1, 3);
    CHECK_MESSAGE(r2.pass, r2.failure);
    CHECK(r2.nilpotent_case);

    SpaceConfig c(5, 0);  // classical: C(C+5) = 0 at degree one
    auto r3 = casimir_test(c, 1, 0);
    CHECK_MESSAGE(r3.pass, r3.failure);
    CHECK(r3.second_eigenvalue == Rational(-5));

    SpaceConfig d(3, 0);  // classical M = 3: C(C+3) = 0
    auto r4 = casimir_test(d, 1, 0);
    CHECK_MESSAGE(r4.pass, r4.failure);
    CHECK(r4.second_eigenvalue == Rational(-3));
}

TEST_CASE("unique submodule window at (4,2)") {
    SpaceConfig cfg(4, 2);
    CHECK_THROWS_AS(submodule_check(cfg, 0, 3), WindowViolation);
    CHECK_THROWS_AS(submodule_check(SpaceConfig(3, 1), 1, 3), WindowViolation);
    auto res = submodule_check(cfg, 1, 3);
    CHECK_MESSAGE(res.pass, res.failure);
    CHECK(res.power == 1);
    CHECK(res.source_degree == 0);
    CHECK(res.dim_sub_plus > 0);
    CHECK(res.stable_q);
}

TEST_CASE("root system of the symmetry algebra") {
    SpaceConfig cfg(3, 1);  // rank 2, dim 12, 10 roots, 5 positive
    auto rs = build_root_system(cfg);
    CHECK(rs.rank() == 2);
    CHECK(rs.roots.size() == 10);
    int positive = 0;
    for (const auto& r : rs.roots) positive += r.positive;
    CHECK(positive == 5);
    // roots come in opposite pairs
    for (const auto& r : rs.roots) {
        bool found = false;
        for (const auto& s : rs.roots) {
            bool neg = true;
            for (std::size_t i = 0; i < r.root.size(); ++i)
                if (s.root[i] != -r.root[i]) neg = false;
            if (neg) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("singular vectors of the monogenic modules at (3,1)") {
    SpaceConfig cfg(3, 1);
    for (int k = 0; k <= 2; ++k) {
        auto sv = singular_vectors(cfg, monogenics(cfg, k, k + 2));
        REQUIRE(sv.size() == 1);
        Weight expect = monogenic_weight_odd(cfg, k);
        CHECK(sv[0].weight == expect);
        CHECK_FALSE(sv[0].vector.is_zero());
    }
}

TEST_CASE("singular weight in the classical limit (5,0)") {
    SpaceConfig cfg(5, 0);
    auto sv = singular_vectors(cfg, monogenics(cfg, 1, 3));
    REQUIRE(sv.size() == 1);
    Weight expect;
    expect.eps = {Rational(3, 2), Rational(1, 2)};
    CHECK(sv[0].weight == expect);
}

TEST_CASE("iterated symmetry powers of the constant") {
    auto r31 = pi_power_test(SpaceConfig(3, 1), 6);
    CHECK_MESSAGE(r31.pass, r31.detail);

    auto r43 = pi_power_test(SpaceConfig(4, 3), 5);  // M = -2: survives to 3, dies at 4
    CHECK_MESSAGE(r43.pass, r43.detail);
    CHECK(r43.nonzero[2]);
    CHECK_FALSE(r43.nonzero[3]);

    auto r50 = pi_power_test(SpaceConfig(5, 0), 3);
    CHECK_MESSAGE(r50.pass, r50.detail);

    auto r42 = pi_power_test(SpaceConfig(4, 2), 3);  // M = 0: only the first survives
    CHECK_MESSAGE(r42.pass, r42.detail);
    CHECK(r42.nonzero[0]);
    CHECK_FALSE(r42.nonzero[1]);
}

TEST_CASE("first symmetry power has polynomial degree one") {
    SpaceConfig cfg(5, 0);
    Element v = ops::Pi_op(cfg, 1)(Element::unit(cfg));
    CHECK(v.uniform_degree() == 1);
}

TEST_CASE("closing algebra dimension formulas") {
    CHECK(osp_dimension(7, 8) == 113);
    CHECK(osp_dimension(5, 10) == 115);
    CHECK(howe_expected_dim(SpaceConfig(3, 1)) == 113);
    CHECK(howe_expected_dim(SpaceConfig(5, 0)) == 115);
}

TEST_CASE("closing algebra rank without brackets") {
    SpaceConfig cfg(3, 1);
    auto res = howe_closure_check(cfg, 2, 2, /*check_brackets=*/false);
    CHECK_MESSAGE(res.rank_ok, res.failure);
    CHECK(res.stable);
}
