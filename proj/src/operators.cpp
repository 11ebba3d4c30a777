#include "sdirac/operators.hpp"

#include <algorithm>

#include "sdirac/enumerate.hpp"

namespace sdirac {

namespace {

SpinorElement kappa_word_apply(const SpaceConfig& cfg, const CliffordWord& w,
                               const SpinorMonomial& s) {
    SpinorElement cur = SpinorElement::monomial(s);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        SpinorElement next;
        for (const auto& [sm, sc] : cur.terms()) {
            auto gen = kappa_generator(cfg, *it);
            next += gen(sm) * sc;
        }
        cur = std::move(next);
        if (cur.is_zero()) break;
    }
    return cur;
}

int word_cl_grade(const SpaceConfig& cfg, const CliffordWord& w) {
    int g = 0;
    for (int j : w) g ^= cfg.grade(j);
    return g;
}

int word_g_parity(const SpaceConfig& cfg, const CliffordWord& w) {
    int g = 0;
    for (int j : w) g ^= 1 ^ cfg.grade(j);
    return g;
}

}  // namespace

Operator compose(const Operator& a, const Operator& b) {
    Operator r;
    r.label = a.label + "*" + b.label;
    r.parity = (a.parity_declared() && b.parity_declared()) ? (a.parity ^ b.parity) : -1;
    r.poly_lo = a.poly_lo + b.poly_lo;
    r.poly_hi = a.poly_hi + b.poly_hi;
    r.t_lo = a.t_lo + b.t_lo;
    r.t_hi = a.t_hi + b.t_hi;
    auto fa = a.fn, fb = b.fn;
    r.fn = [fa, fb](const Element& e) { return fa(fb(e)); };
    return r;
}

Operator add(const Operator& a, const Operator& b) {
    Operator r;
    r.label = a.label + " + " + b.label;
    r.parity = (a.parity == b.parity) ? a.parity : -1;
    r.poly_lo = std::min(a.poly_lo, b.poly_lo);
    r.poly_hi = std::max(a.poly_hi, b.poly_hi);
    r.t_lo = std::min(a.t_lo, b.t_lo);
    r.t_hi = std::max(a.t_hi, b.t_hi);
    auto fa = a.fn, fb = b.fn;
    r.fn = [fa, fb](const Element& e) { return fa(e) + fb(e); };
    return r;
}

Operator sub(const Operator& a, const Operator& b) { return add(a, scale(Scalar(-1), b)); }

Operator scale(const Scalar& c, const Operator& a) {
    Operator r = a;
    r.label = "(" + c.str() + ")*" + a.label;
    auto fa = a.fn;
    r.fn = [fa, c](const Element& e) { return fa(e) * c; };
    return r;
}

Operator power(const Operator& a, int k) {
    if (k < 0) throw IndexOutOfRange("operator power must be nonnegative");
    Operator r;
    r.label = a.label + "^" + std::to_string(k);
    r.parity = a.parity_declared() ? (a.parity * k) & 1 : (k == 0 ? 0 : -1);
    r.poly_lo = a.poly_lo * k;
    r.poly_hi = a.poly_hi * k;
    r.t_lo = a.t_lo * k;
    r.t_hi = a.t_hi * k;
    auto fa = a.fn;
    r.fn = [fa, k](const Element& e) {
        Element cur = e;
        for (int i = 0; i < k; ++i) cur = fa(cur);
        return cur;
    };
    return r;
}

Operator bracket(const Operator& a, const Operator& b) {
    if (!a.parity_declared() || !b.parity_declared())
        throw UndeclaredParity("bracket requires declared parities: [" + a.label + ", " + b.label +
                               "]");
    int sign = (a.parity & b.parity) ? 1 : -1;  // anticommutator for odd pair
    Operator ab = compose(a, b);
    Operator ba = compose(b, a);
    Operator r = (sign > 0) ? add(ab, ba) : sub(ab, ba);
    r.label = "[" + a.label + ", " + b.label + "]";
    r.parity = a.parity ^ b.parity;
    return r;
}

namespace ops {

Operator identity(const SpaceConfig& cfg) {
    Operator r;
    r.label = "1";
    r.parity = 0;
    r.fn = [](const Element& e) { return e; };
    return r;
}

Operator zero(const SpaceConfig& cfg) {
    Operator r;
    r.label = "0";
    r.parity = 0;
    r.fn = [](const Element&) { return Element::zero(); };
    return r;
}

Operator mul_x(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    Operator r;
    r.label = "X(" + std::to_string(j) + ")";
    r.parity = cfg.grade(j);
    r.poly_lo = r.poly_hi = 1;
    Element var = Element::variable(cfg, j);
    r.fn = [cfg, var](const Element& e) { return multiply(cfg, var, e); };
    return r;
}

Operator partial_op(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    Operator r;
    r.label = "D(" + std::to_string(j) + ")";
    r.parity = cfg.grade(j);
    r.poly_lo = r.poly_hi = -1;
    r.fn = [cfg, j](const Element& e) { return partial(cfg, j, e); };
    return r;
}

Operator partial_up_op(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    Operator r;
    r.label = "Dup(" + std::to_string(j) + ")";
    r.parity = cfg.grade(j);
    r.poly_lo = r.poly_hi = -1;
    r.fn = [cfg, j](const Element& e) { return partial_up(cfg, j, e); };
    return r;
}

Operator euler(const SpaceConfig& cfg) {
    Operator r;
    r.label = "E";
    r.parity = 0;
    r.fn = [cfg](const Element& e) {
        Element out;
        for (const auto& [k, c] : e.terms()) out.add(k, c * Scalar(k.p.degree()));
        return out;
    };
    return r;
}

Operator r2(const SpaceConfig& cfg) {
    Operator r;
    r.label = "R2";
    r.parity = 0;
    r.poly_lo = r.poly_hi = 2;
    Element rsq;
    for (int j = 1; j <= cfg.m; ++j)
        rsq += multiply(cfg, Element::variable(cfg, j), Element::variable(cfg, j));
    for (int i = 1; i <= cfg.n; ++i)
        rsq += multiply(cfg, Element::variable(cfg, cfg.m + i),
                        Element::variable(cfg, cfg.m + cfg.n + i)) *
               Scalar(2);
    r.fn = [cfg, rsq](const Element& e) { return multiply(cfg, rsq, e); };
    return r;
}

Operator laplace(const SpaceConfig& cfg) {
    Operator r;
    r.label = "Lap";
    r.parity = 0;
    r.poly_lo = r.poly_hi = -2;
    r.fn = [cfg](const Element& e) {
        Element out;
        for (int j = 1; j <= cfg.m; ++j) out += partial(cfg, j, partial(cfg, j, e));
        for (int i = 1; i <= cfg.n; ++i) {
            Element fwd = partial(cfg, cfg.m + i, partial(cfg, cfg.m + cfg.n + i, e));
            out += fwd + fwd;
        }
        return out;
    };
    return r;
}

Operator clifford_act(const SpaceConfig& cfg, int k) {
    cfg.check_index(k);
    Operator r;
    r.label = "E(" + std::to_string(k) + ")";
    r.parity = 1 ^ cfg.grade(k);
    auto gen = kappa_generator(cfg, k);
    r.t_lo = gen.t_lo;
    r.t_hi = gen.t_hi;
    int grade = cfg.grade(k);
    r.fn = [cfg, k, grade](const Element& e) {
        Element out;
        for (const auto& [key, c] : e.terms()) {
            Scalar cc = (grade && key.p.parity()) ? -c : c;
            SpinorElement img = kappa_generator(cfg, k)(key.s);
            for (const auto& [sm, sc] : img.terms()) out.add({key.p, sm}, sc * cc);
        }
        return out;
    };
    return r;
}

Operator clifford_comb_act(const SpaceConfig& cfg, const CliffordCombination& comb,
                           std::string label) {
    Operator r;
    r.label = std::move(label);
    int par = -2;
    int t_lo = 0, t_hi = 0;
    bool first = true;
    for (const auto& [w, c] : comb.terms()) {
        int lo = 0, hi = 0;
        for (int j : w) {
            auto gen = kappa_generator(cfg, j);
            lo += gen.t_lo;
            hi += gen.t_hi;
        }
        int p = word_g_parity(cfg, w);
        if (first) {
            par = p;
            t_lo = lo;
            t_hi = hi;
            first = false;
        } else {
            par = (par == p) ? par : -1;
            t_lo = std::min(t_lo, lo);
            t_hi = std::max(t_hi, hi);
        }
    }
    r.parity = first ? 0 : par;
    r.t_lo = t_lo;
    r.t_hi = t_hi;
    auto terms = comb.terms();
    r.fn = [cfg, terms](const Element& e) {
        Element out;
        for (const auto& [key, c] : e.terms()) {
            for (const auto& [w, wc] : terms) {
                Scalar cc = c * wc;
                if (word_cl_grade(cfg, w) && key.p.parity()) cc = -cc;
                SpinorElement img = kappa_word_apply(cfg, w, key.s);
                for (const auto& [sm, sc] : img.terms()) out.add({key.p, sm}, sc * cc);
            }
        }
        return out;
    };
    return r;
}

Operator dirac(const SpaceConfig& cfg) {
    Operator r;
    r.label = "Dx";
    r.parity = 1;
    r.poly_lo = r.poly_hi = -1;
    r.t_lo = -1;
    r.t_hi = 1;
    r.fn = [cfg](const Element& e) {
        Element out;
        for (int k = 1; k <= cfg.dims(); ++k) {
            Element de = partial(cfg, k, e);
            if (de.is_zero()) continue;
            int p = cfg.metric_partner(k);
            int gpk = cfg.metric(p, k);
            int grade = cfg.grade(k);
            for (const auto& [key, c] : de.terms()) {
                Scalar cc = (grade && key.p.parity()) ? -c : c;
                if (gpk < 0) cc = -cc;
                SpinorElement img = kappa_generator(cfg, p)(key.s);
                for (const auto& [sm, sc] : img.terms()) out.add({key.p, sm}, sc * cc);
            }
        }
        return out;
    };
    return r;
}

Operator dirac_stein_weiss(const SpaceConfig& cfg) {
    Operator r;
    r.label = "Dx_sw";
    r.parity = 1;
    r.poly_lo = r.poly_hi = -1;
    r.t_lo = -1;
    r.t_hi = 1;
    r.fn = [cfg](const Element& e) { return e_perp_contract(cfg, gradient(cfg, e)); };
    return r;
}

Operator vector_x(const SpaceConfig& cfg) {
    Operator r;
    r.label = "x";
    r.parity = 1;
    r.poly_lo = r.poly_hi = 1;
    r.t_lo = -1;
    r.t_hi = 1;
    r.fn = [cfg](const Element& e) {
        Element out;
        for (int j = 1; j <= cfg.dims(); ++j) {
            Element var = Element::variable(cfg, j);
            int grade = cfg.grade(j);
            Element staged;
            for (const auto& [key, c] : e.terms()) {
                Scalar cc = (grade && key.p.parity()) ? -c : c;
                SpinorElement img = kappa_generator(cfg, j)(key.s);
                for (const auto& [sm, sc] : img.terms()) staged.add({key.p, sm}, sc * cc);
            }
            out += multiply(cfg, var, staged);
        }
        return out;
    };
    return r;
}

Operator L_op(const SpaceConfig& cfg, int i, int j) {
    cfg.check_index(i);
    cfg.check_index(j);
    Operator r;
    r.label = "L(" + std::to_string(i) + "," + std::to_string(j) + ")";
    r.parity = cfg.grade(i) ^ cfg.grade(j);
    int sign = (cfg.grade(i) && cfg.grade(j)) ? -1 : 1;
    r.fn = [cfg, i, j, sign](const Element& e) {
        Element out = multiply(cfg, Element::variable(cfg, i), partial_up(cfg, j, e));
        Element second = multiply(cfg, Element::variable(cfg, j), partial_up(cfg, i, e));
        return sign > 0 ? out - second : out + second;
    };
    return r;
}

Operator B_op(const SpaceConfig& cfg, int i, int j) {
    return clifford_comb_act(cfg, bivector(cfg, i, j),
                             "B(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

Operator K_op(const SpaceConfig& cfg, int i, int j) {
    Operator r = add(L_op(cfg, i, j), B_op(cfg, i, j));
    r.label = "K(" + std::to_string(i) + "," + std::to_string(j) + ")";
    r.parity = cfg.grade(i) ^ cfg.grade(j);
    return r;
}

Operator Pi_op(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    Operator hat_j = clifford_comb_act(cfg, hat_generator(cfg, j), "hatE(" + std::to_string(j) + ")");
    Operator t1 = compose(vector_x(cfg), hat_j);
    Operator m2e = add(scale(Scalar(cfg.superdim()), identity(cfg)), scale(Scalar(2), euler(cfg)));
    Operator t2 = compose(mul_x(cfg, j), m2e);
    Operator t3 = compose(r2(cfg), partial_up_op(cfg, j));
    Operator r = sub(add(t1, t2), t3);
    r.label = "Pi(" + std::to_string(j) + ")";
    r.parity = cfg.grade(j);
    return r;
}

Operator Kconf(const SpaceConfig& cfg, int a, int b) {
    if (a < -1 || b < -1 || a > cfg.dims() || b > cfg.dims())
        throw IndexOutOfRange("conformal index outside -1..m+2n");
    std::string lbl = "Kc(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a > b) {
        int sign = (conformal_grade(cfg, a) && conformal_grade(cfg, b)) ? 1 : -1;
        Operator r = scale(Scalar(sign), Kconf(cfg, b, a));
        r.label = lbl;
        return r;
    }
    Operator r = [&]() {
        if (a == -1 && b == -1) return zero(cfg);
        if (a == 0 && b == 0) return zero(cfg);
        if (a == -1 && b == 0) {
            return add(euler(cfg),
                       scale(Scalar(Rational(cfg.superdim() - 1, 2)), identity(cfg)));
        }
        if (a == -1) {
            return scale(Scalar::fraction(1, 2), sub(Pi_op(cfg, b), partial_up_op(cfg, b)));
        }
        if (a == 0) {
            return scale(Scalar::fraction(1, 2), add(Pi_op(cfg, b), partial_up_op(cfg, b)));
        }
        return K_op(cfg, a, b);
    }();
    r.label = lbl;
    r.parity = conformal_grade(cfg, a) ^ conformal_grade(cfg, b);
    return r;
}

Operator casimir(const SpaceConfig& cfg) {
    Operator r = compose(vector_x(cfg), dirac(cfg));
    r.label = "xDx";
    r.parity = 0;
    return r;
}

Operator parity_inv(const SpaceConfig& cfg) {
    Operator r;
    r.label = "(-1)^E";
    r.parity = 0;
    r.fn = [](const Element& e) {
        Element out;
        for (const auto& [k, c] : e.terms()) out.add(k, k.p.degree() & 1 ? -c : c);
        return out;
    };
    return r;
}

Operator howe_gen(const SpaceConfig& cfg, HoweFamily family, int i, int j) {
    cfg.check_index(i);
    cfg.check_index(j);
    int gsum = cfg.grade(i) ^ cfg.grade(j);
    Operator dress = gsum ? parity_inv(cfg) : identity(cfg);
    auto tag = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    Operator r = [&]() {
        switch (family) {
            case HoweFamily::XX:
                return compose(mul_x(cfg, i), compose(mul_x(cfg, j), dress));
            case HoweFamily::XD: {
                Operator core =
                    scale(Scalar(2), compose(mul_x(cfg, i), compose(partial_up_op(cfg, j), dress)));
                int gji = cfg.metric(j, i);
                return gji ? add(core, scale(Scalar(gji), identity(cfg))) : core;
            }
            case HoweFamily::DD:
                return compose(partial_up_op(cfg, i), compose(partial_up_op(cfg, j), dress));
            case HoweFamily::BV:
                return compose(B_op(cfg, i, j), dress);
            case HoweFamily::XE:
                return compose(mul_x(cfg, i), compose(clifford_act(cfg, j), dress));
            case HoweFamily::ED:
                return compose(clifford_act(cfg, j), compose(partial_up_op(cfg, i), dress));
        }
        throw std::logic_error("unreachable");
    }();
    switch (family) {
        case HoweFamily::XX: r.label = tag("hXX"); r.parity = gsum; break;
        case HoweFamily::XD: r.label = tag("hXD"); r.parity = gsum; break;
        case HoweFamily::DD: r.label = tag("hDD"); r.parity = gsum; break;
        case HoweFamily::BV: r.label = tag("hB"); r.parity = gsum; break;
        case HoweFamily::XE: r.label = tag("hXE"); r.parity = gsum ^ 1; break;
        case HoweFamily::ED: r.label = tag("hED"); r.parity = gsum ^ 1; break;
    }
    return r;
}

std::vector<Operator> howe_generators(const SpaceConfig& cfg) {
    std::vector<Operator> out;
    for (auto family : {HoweFamily::XX, HoweFamily::XD, HoweFamily::DD, HoweFamily::BV,
                        HoweFamily::XE, HoweFamily::ED})
        for (int i = 1; i <= cfg.dims(); ++i)
            for (int j = 1; j <= cfg.dims(); ++j) out.push_back(howe_gen(cfg, family, i, j));
    return out;
}

}  // namespace ops

std::vector<Element> gradient(const SpaceConfig& cfg, const Element& f) {
    std::vector<Element> out(cfg.dims());
    for (int j = 1; j <= cfg.dims(); ++j) {
        if (cfg.grade(j) == 0) {
            out[j - 1] = partial(cfg, j, f);
            continue;
        }
        // odd slot: the sign (-1)^{[j](1+|h|)} depends on the parity of the
        // polynomial factor of each term
        Element comp;
        for (const auto& [key, c] : f.terms()) {
            Element single = partial(cfg, j, Element::monomial(key, c));
            int sign = key.p.parity() ? 1 : -1;  // 1 + |h| mod 2
            comp += sign < 0 ? -single : single;
        }
        out[j - 1] = std::move(comp);
    }
    return out;
}

Element e_perp_contract(const SpaceConfig& cfg, const std::vector<Element>& components) {
    if (static_cast<int>(components.size()) != cfg.dims())
        throw DimensionMismatch("e_perp_contract: wrong number of components");
    Element out;
    for (int j = 1; j <= cfg.dims(); ++j) {
        const Element& comp = components[j - 1];
        if (comp.is_zero()) continue;
        int p = cfg.metric_partner(j);
        int gpj = cfg.metric(p, j);
        for (const auto& [key, c] : comp.terms()) {
            SpinorElement img = kappa_generator(cfg, p)(key.s);
            Scalar cc = gpj < 0 ? -c : c;
            for (const auto& [sm, sc] : img.terms()) out.add({key.p, sm}, sc * cc);
        }
    }
    return out;
}

EqualOnResult equal_on(const SpaceConfig& cfg, const Operator& a, const Operator& b, int k_max,
                       int q_max) {
    EqualOnResult res;
    for (const auto& key : block_basis_range(cfg, 0, k_max, q_max)) {
        Element basis = Element::monomial(key);
        Element va = a(basis);
        Element vb = b(basis);
        if (va != vb) {
            res.equal = false;
            res.witness = key;
            res.lhs_value = std::move(va);
            res.rhs_value = std::move(vb);
            return res;
        }
    }
    return res;
}

EqualOnResult zero_on(const SpaceConfig& cfg, const Operator& a, int k_max, int q_max) {
    return equal_on(cfg, a, ops::zero(cfg), k_max, q_max);
}

}  // namespace sdirac
