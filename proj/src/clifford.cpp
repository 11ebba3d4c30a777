#include "sdirac/clifford.hpp"

#include <algorithm>

namespace sdirac {

namespace {

// Position of the first/last adjacent pair violating normal order, or -1.
// A pair (a, b) is out of order when a > b, or a == b with a bosonic.
int find_violation(const SpaceConfig& cfg, const CliffordWord& w, RewriteStrategy strat) {
    int found = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        bool bad = w[i] > w[i + 1] || (w[i] == w[i + 1] && cfg.grade(w[i]) == 0);
        if (!bad) continue;
        if (strat == RewriteStrategy::Leftmost) return i;
        found = i;
    }
    return found;
}

}  // namespace

CliffordCombination cl_normal_form(const SpaceConfig& cfg, const CliffordCombination& in,
                                   RewriteStrategy strategy) {
    CliffordCombination done;
    // worklist of terms not yet known to be normal
    std::map<CliffordWord, Scalar> pending(in.terms().begin(), in.terms().end());
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        CliffordWord w = std::move(node.key());
        Scalar c = std::move(node.mapped());
        if (c.is_zero()) continue;
        int pos = find_violation(cfg, w, strategy);
        if (pos < 0) {
            done.add(std::move(w), c);
            continue;
        }
        int a = w[pos], b = w[pos + 1];
        auto push = [&pending](CliffordWord nw, const Scalar& nc) {
            if (nc.is_zero()) return;
            auto [it, inserted] = pending.try_emplace(std::move(nw), nc);
            if (!inserted) {
                it->second += nc;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        if (a == b) {
            // bosonic square: E_a E_a = -g_{aa}
            CliffordWord nw = w;
            nw.erase(nw.begin() + pos, nw.begin() + pos + 2);
            push(std::move(nw), c * Scalar(-cfg.metric(a, a)));
            continue;
        }
        // E_a E_b = -(-1)^{[a][b]} E_b E_a - 2 g_{ba}
        CliffordWord swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        int sign = cfg.grade(a) && cfg.grade(b) ? 1 : -1;
        push(std::move(swapped), sign < 0 ? -c : c);
        int g = cfg.metric(b, a);
        if (g != 0) {
            CliffordWord contracted = w;
            contracted.erase(contracted.begin() + pos, contracted.begin() + pos + 2);
            push(std::move(contracted), c * Scalar(-2 * g));
        }
    }
    return done;
}

CliffordCombination cl_multiply(const SpaceConfig& cfg, const CliffordCombination& a,
                                const CliffordCombination& b) {
    CliffordCombination r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            CliffordWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(std::move(w), ca * cb);
        }
    return cl_normal_form(cfg, r);
}

CliffordCombination hat_generator(const SpaceConfig& cfg, int k) {
    cfg.check_index(k);
    int p = cfg.metric_partner(k);
    return CliffordCombination::generator(p, Scalar(cfg.metric(p, k)));
}

CliffordCombination hat(const SpaceConfig& cfg, const CliffordCombination& in) {
    CliffordCombination r;
    for (const auto& [w, c] : in.terms()) {
        CliffordCombination prod = CliffordCombination::scalar(c);
        for (int j : w) prod = cl_multiply(cfg, prod, hat_generator(cfg, j));
        r += prod;
    }
    return cl_normal_form(cfg, r);
}

CliffordCombination bivector(const SpaceConfig& cfg, int i, int j) {
    CliffordCombination r = cl_multiply(cfg, hat_generator(cfg, i), hat_generator(cfg, j));
    r.add({}, Scalar(cfg.metric(j, i)));
    return cl_normal_form(cfg, r * Scalar::fraction(-1, 2));
}

SpinorElement apply_theta(const SpaceConfig& cfg, int j, const SpinorMonomial& s) {
    if (s.has_theta(j)) return {};
    std::uint32_t below = (1u << (j - 1)) - 1;
    int sign = std::popcount(s.theta & below) & 1 ? -1 : 1;
    SpinorMonomial ns = s;
    ns.theta |= 1u << (j - 1);
    return SpinorElement::monomial(std::move(ns), Scalar(sign));
}

SpinorElement apply_dtheta(const SpaceConfig& cfg, int j, const SpinorMonomial& s) {
    if (!s.has_theta(j)) return {};
    std::uint32_t below = (1u << (j - 1)) - 1;
    int sign = std::popcount(s.theta & below) & 1 ? -1 : 1;
    SpinorMonomial ns = s;
    ns.theta &= ~(1u << (j - 1));
    return SpinorElement::monomial(std::move(ns), Scalar(sign));
}

SpinorElement apply_t(const SpaceConfig& cfg, int i, const SpinorMonomial& s) {
    // t_i anticommutes with every theta
    int sign = s.theta_count() & 1 ? -1 : 1;
    SpinorMonomial ns = s;
    ns.t[i - 1] += 1;
    return SpinorElement::monomial(std::move(ns), Scalar(sign));
}

SpinorElement apply_dt(const SpaceConfig& cfg, int i, const SpinorMonomial& s) {
    int e = s.t[i - 1];
    if (e == 0) return {};
    int sign = s.theta_count() & 1 ? -1 : 1;
    SpinorMonomial ns = s;
    ns.t[i - 1] = e - 1;
    return SpinorElement::monomial(std::move(ns), Scalar(sign * e));
}

SpinorElement apply_grading(const SpaceConfig& cfg, const SpinorMonomial& s) {
    return SpinorElement::monomial(s, Scalar(s.lambda_degree() & 1 ? -1 : 1));
}

SpinorOperator kappa_generator(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    const int d = cfg.d();
    SpinorOperator op;
    op.t_lo = 0;
    op.t_hi = 0;
    op.label = "kappa(E_" + std::to_string(j) + ")";
    if (j <= d) {
        op.parity = 1;
        op.map = [cfg, j](const SpinorMonomial& s) {
            SpinorElement r = apply_theta(cfg, j, s);
            r += apply_dtheta(cfg, j, s) * Scalar(-1);
            return r;
        };
    } else if (j <= 2 * d) {
        op.parity = 1;
        int jj = j - d;
        op.map = [cfg, jj](const SpinorMonomial& s) {
            SpinorElement r = apply_theta(cfg, jj, s);
            r += apply_dtheta(cfg, jj, s);
            return r * Scalar::i();
        };
    } else if (j == cfg.m) {
        // m odd: the extra generator acts through the degree involution
        op.parity = 1;
        op.map = [cfg](const SpinorMonomial& s) { return apply_grading(cfg, s) * Scalar::i(); };
    } else if (j <= cfg.m + cfg.n) {
        op.parity = 0;
        op.t_lo = op.t_hi = 1;
        int i = j - cfg.m;
        op.map = [cfg, i](const SpinorMonomial& s) { return apply_t(cfg, i, s) * Scalar::sqrt2(); };
    } else {
        op.parity = 0;
        op.t_lo = op.t_hi = -1;
        int i = j - cfg.m - cfg.n;
        op.map = [cfg, i](const SpinorMonomial& s) {
            return apply_dt(cfg, i, s) * (-Scalar::sqrt2());
        };
    }
    return op;
}

SpinorOperator kappa(const SpaceConfig& cfg, const CliffordCombination& comb, std::string label) {
    SpinorOperator op;
    op.label = std::move(label);
    int t_lo = 0, t_hi = 0, parity = 0;
    bool parity_known = false, first = true;
    for (const auto& [w, c] : comb.terms()) {
        int lo = 0, hi = 0, par = 0;
        for (int j : w) {
            auto gen = kappa_generator(cfg, j);
            lo += gen.t_lo;
            hi += gen.t_hi;
            par ^= gen.parity;
        }
        if (first) {
            t_lo = lo;
            t_hi = hi;
            parity = par;
            parity_known = true;
            first = false;
        } else {
            t_lo = std::min(t_lo, lo);
            t_hi = std::max(t_hi, hi);
            if (par != parity) parity_known = false;
        }
    }
    op.t_lo = t_lo;
    op.t_hi = t_hi;
    op.parity = parity_known ? parity : -1;
    auto terms = comb.terms();
    op.map = [cfg, terms](const SpinorMonomial& s) {
        SpinorElement out;
        for (const auto& [w, c] : terms) {
            SpinorElement cur = SpinorElement::monomial(s);
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                SpinorElement next;
                auto gen = kappa_generator(cfg, *it);
                for (const auto& [sm, sc] : cur.terms()) next += gen(sm) * sc;
                cur = std::move(next);
                if (cur.is_zero()) break;
            }
            out += cur * c;
        }
        return out;
    };
    return op;
}

SpinorElement e_perp(const SpaceConfig& cfg, int k, const SpinorElement& v) {
    return kappa(cfg, hat_generator(cfg, k))(v);
}

std::vector<Scalar> nat_action(const SpaceConfig& cfg, int i, int j, int k) {
    std::vector<Scalar> out(cfg.dims(), Scalar(0));
    int gkj = cfg.metric(k, j);
    if (gkj != 0) out[i - 1] += Scalar(gkj);
    int sign = cfg.grade(i) && cfg.grade(j) ? -1 : 1;
    int gki = cfg.metric(k, i);
    if (gki != 0) out[j - 1] += Scalar(-sign * gki);
    return out;
}

}  // namespace sdirac
