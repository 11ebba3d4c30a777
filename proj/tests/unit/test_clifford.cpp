#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdirac/clifford.hpp"
#include "sdirac/enumerate.hpp"

using namespace sdirac;

namespace {

CliffordCombination word(std::initializer_list<int> idx, Scalar c = 1) {
    CliffordCombination r;
    r.add(CliffordWord(idx), c);
    return r;
}

SpinorElement spinor_unit(const SpaceConfig& cfg) {
    return SpinorElement::monomial(SpinorMonomial::one(cfg));
}

}  // namespace

TEST_CASE("normal form of generator squares and swaps") {
    SpaceConfig cfg(3, 1);  // g_{44}=0, g_{45}=1, g_{54}=-1
    // bosonic square: E1 E1 -> -1
    CHECK(cl_normal_form(cfg, word({1, 1})) == CliffordCombination::scalar(Scalar(-1)));
    // fermionic pair: E4 E5 - E5 E4 -> 2 (the -2 g_{54} contraction)
    CliffordCombination comm = word({4, 5});
    comm += word({5, 4}, Scalar(-1));
    CHECK(cl_normal_form(cfg, comm) == CliffordCombination::scalar(Scalar(2)));
    // mixed indices anticommute: E1 E4 + E4 E1 -> 0
    CliffordCombination anti = word({1, 4});
    anti += word({4, 1});
    CHECK(cl_normal_form(cfg, anti).is_zero());
    // fermionic squares survive in normal form
    CHECK(cl_normal_form(cfg, word({4, 4})) == word({4, 4}));
}

TEST_CASE("normal form is idempotent and strategy independent") {
    SpaceConfig cfg(3, 2);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> pick(1, cfg.dims());
    for (int trial = 0; trial < 500; ++trial) {
        CliffordWord w;
        int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(pick(rng));
        CliffordCombination c;
        c.add(w, Scalar(1));
        auto left = cl_normal_form(cfg, c, RewriteStrategy::Leftmost);
        auto right = cl_normal_form(cfg, c, RewriteStrategy::Rightmost);
        CHECK(left == right);
        CHECK(cl_normal_form(cfg, left) == left);
    }
}

TEST_CASE("hat morphism flips the fermionic pairing") {
    SpaceConfig cfg(3, 1);
    CHECK(hat_generator(cfg, 1) == word({1}));
    CHECK(hat_generator(cfg, 4) == word({5}, Scalar(-1)));
    CHECK(hat_generator(cfg, 5) == word({4}));
    // hat is an involution on bosonic and minus the identity on fermionic
    for (int k = 1; k <= cfg.dims(); ++k) {
        CliffordCombination twice = hat(cfg, hat_generator(cfg, k));
        CliffordCombination expect = word({k}, Scalar(cfg.grade(k) ? -1 : 1));
        CHECK(twice == expect);
    }
    // hat preserves the defining relation (morphism well-defined)
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(1, cfg.dims());
    for (int trial = 0; trial < 100; ++trial) {
        int k = pick(rng), l = pick(rng);
        CliffordCombination lhs =
            cl_multiply(cfg, hat_generator(cfg, k), hat_generator(cfg, l));
        CliffordCombination rhs =
            cl_multiply(cfg, hat_generator(cfg, l), hat_generator(cfg, k));
        if (!(cfg.grade(k) && cfg.grade(l))) {
            lhs += rhs;
        } else {
            lhs += rhs * Scalar(-1);
        }
        CHECK(lhs == CliffordCombination::scalar(Scalar(-2 * cfg.metric(l, k))));
    }
}

TEST_CASE("bivectors") {
    SpaceConfig cfg(3, 1);
    CHECK(bivector(cfg, 1, 2) == word({1, 2}, Scalar::fraction(-1, 2)));
    // bosonic diagonal vanishes
    CHECK(bivector(cfg, 1, 1).is_zero());
    CHECK(bivector(cfg, 3, 3).is_zero());
    // fermionic diagonal does not
    CHECK_FALSE(bivector(cfg, 4, 4).is_zero());
}

TEST_CASE("kappa generator table") {
    SpaceConfig cfg(3, 1);  // d = 1
    auto u = SpinorMonomial::one(cfg);
    // E1 -> theta_1 - dtheta_1 on the vacuum
    SpinorMonomial th{1u, {0}};
    CHECK(kappa_generator(cfg, 1)(u) == SpinorElement::monomial(th));
    // E2 -> i (theta_1 + dtheta_1)
    CHECK(kappa_generator(cfg, 2)(u) == SpinorElement::monomial(th, Scalar::i()));
    // E3 -> i G with eigenvalues by generator count
    CHECK(kappa_generator(cfg, 3)(u) == SpinorElement::monomial(u, Scalar::i()));
    CHECK(kappa_generator(cfg, 3)(th) == SpinorElement::monomial(th, -Scalar::i()));
    // E4 -> sqrt2 t_1
    SpinorMonomial t1{0u, {1}};
    CHECK(kappa_generator(cfg, 4)(u) == SpinorElement::monomial(t1, Scalar::sqrt2()));
    // E5 -> -sqrt2 d/dt_1 kills the vacuum
    CHECK(kappa_generator(cfg, 5)(u).is_zero());
    CHECK(kappa_generator(cfg, 5)(t1) == SpinorElement::monomial(u, -Scalar::sqrt2()));
}

TEST_CASE("kappa respects the Clifford relation up to generator count 4") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {2, 2}}) {
        SpaceConfig cfg(m, n);
        auto basis = spinor_basis(cfg, 4);
        for (int k = 1; k <= cfg.dims(); ++k) {
            auto ek = kappa_generator(cfg, k);
            for (int l = 1; l <= cfg.dims(); ++l) {
                auto el = kappa_generator(cfg, l);
                int sign = (cfg.grade(k) && cfg.grade(l)) ? -1 : 1;
                Scalar expect(-2 * cfg.metric(l, k));
                for (const auto& s : basis) {
                    if (s.lambda_degree() > 4) continue;
                    SpinorElement lhs = ek(el(SpinorElement::monomial(s)));
                    lhs += el(ek(SpinorElement::monomial(s))) * Scalar(sign);
                    CHECK(lhs == SpinorElement::monomial(s) * expect);
                }
            }
        }
    }
}

TEST_CASE("kappa of bivectors satisfies the symmetry bracket relations") {
    SpaceConfig cfg(3, 1);
    auto basis = spinor_basis(cfg, 4);
    auto pi_s = [&](int i, int j) { return kappa(cfg, bivector(cfg, i, j)); };
    auto apply = [&](const SpinorOperator& op, const SpinorElement& e) { return op(e); };
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = 1; j <= cfg.dims(); ++j)
            for (int k = 1; k <= cfg.dims(); ++k)
                for (int l = 1; l <= cfg.dims(); ++l) {
                    auto bij = pi_s(i, j);
                    auto bkl = pi_s(k, l);
                    int pij = cfg.grade(i) ^ cfg.grade(j);
                    int pkl = cfg.grade(k) ^ cfg.grade(l);
                    // [B_ij, B_kl] with the graded sign
                    int braid = (pij && pkl) ? 1 : -1;
                    // right side of the structure relation
                    auto term = [&](int g, int a, int b, int sgn) {
                        SpinorOperator op = pi_s(a, b);
                        return std::pair<int, SpinorOperator>(g * sgn, std::move(op));
                    };
                    int s1 = 1;
                    int s2 = (cfg.grade(i) & (cfg.grade(j) ^ cfg.grade(k))) ? -1 : 1;
                    int s3 = (cfg.grade(k) & cfg.grade(l)) ? -1 : 1;
                    int s4 = (cfg.grade(i) & cfg.grade(j)) ? -1 : 1;
                    auto t1 = term(cfg.metric(k, j), i, l, s1);
                    auto t2 = term(cfg.metric(l, i), j, k, s2);
                    auto t3 = term(cfg.metric(l, j), i, k, -s3);
                    auto t4 = term(cfg.metric(k, i), j, l, -s4);
                    for (const auto& s : basis) {
                        if (s.lambda_degree() > 3) continue;
                        SpinorElement v = SpinorElement::monomial(s);
                        SpinorElement lhs = apply(bij, apply(bkl, v));
                        lhs += apply(bkl, apply(bij, v)) * Scalar(braid);
                        SpinorElement rhs;
                        for (const auto& [coeff, op] : {t1, t2, t3, t4})
                            if (coeff != 0) rhs += apply(op, v) * Scalar(coeff);
                        CHECK(lhs == rhs);
                    }
                }
}

TEST_CASE("contraction slot map") {
    SpaceConfig cfg(3, 1);
    auto u = spinor_unit(cfg);
    SpinorMonomial th{1u, {0}};
    CHECK(e_perp(cfg, 1, u) == SpinorElement::monomial(th));
    // hat(E4) = -E5 kills the vacuum
    CHECK(e_perp(cfg, 4, u).is_zero());
}

TEST_CASE("contraction is equivariant for the spinor symmetry action") {
    SpaceConfig cfg(3, 1);
    auto basis = spinor_basis(cfg, 3);
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = 1; j <= cfg.dims(); ++j) {
            auto action = kappa(cfg, bivector(cfg, i, j));
            int pij = cfg.grade(i) ^ cfg.grade(j);
            for (int k = 1; k <= cfg.dims(); ++k) {
                auto nat = nat_action(cfg, i, j, k);
                for (const auto& s : basis) {
                    if (s.lambda_degree() > 3) continue;
                    SpinorElement v = SpinorElement::monomial(s);
                    // lhs: act after contracting
                    SpinorElement lhs = action(e_perp(cfg, k, v));
                    // rhs: act on the tensor slot, then contract
                    SpinorElement rhs;
                    for (int l = 1; l <= cfg.dims(); ++l)
                        if (!nat[l - 1].is_zero()) rhs += e_perp(cfg, l, v) * nat[l - 1];
                    int koszul = (pij && cfg.grade(k)) ? -1 : 1;
                    rhs += e_perp(cfg, k, action(v)) * Scalar(koszul);
                    CHECK(lhs == rhs);
                }
            }
        }
}
