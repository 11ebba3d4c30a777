#include "sdirac/element.hpp"

#include <bit>
#include <sstream>

namespace sdirac {

namespace {

// Sign for merging two ascending odd-variable words: (-1)^{#inversions}.
// Zero overlap must be checked by the caller.
int merge_sign(std::uint32_t left, std::uint32_t right) {
    int inv = 0;
    while (right) {
        std::uint32_t low = right & -right;
        // factors of `left` strictly above this bit must be jumped over
        inv += std::popcount(left & ~(low - 1) & ~low);
        right ^= low;
    }
    return inv & 1 ? -1 : 1;
}

}  // namespace

Element Element::variable(const SpaceConfig& cfg, int j) {
    cfg.check_index(j);
    PolyMonomial p = PolyMonomial::one(cfg);
    if (j <= cfg.m)
        p.bos[j - 1] = 1;
    else
        p.fer = 1u << (j - cfg.m - 1);
    return monomial({std::move(p), SpinorMonomial::one(cfg)});
}

std::optional<int> Element::uniform_parity() const {
    std::optional<int> par;
    for (const auto& [k, c] : terms_) {
        int p = k.parity();
        if (par && *par != p) return std::nullopt;
        par = p;
    }
    return par;
}

std::optional<int> Element::uniform_degree() const {
    std::optional<int> deg;
    for (const auto& [k, c] : terms_) {
        int d = k.p.degree();
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

bool Element::spinor_trivial() const {
    for (const auto& [k, c] : terms_)
        if (k.s.theta != 0 || k.s.t_degree() != 0) return false;
    return true;
}

Element multiply(const SpaceConfig& cfg, const Element& f, const Element& g) {
    Element r;
    for (const auto& [fk, fc] : f.terms()) {
        if (fk.s.theta != 0 || fk.s.t_degree() != 0)
            throw DimensionMismatch("multiply: left factor must have trivial spinor part");
        for (const auto& [gk, gc] : g.terms()) {
            if (fk.p.fer & gk.p.fer) continue;  // odd variable squared
            PolyMonomial p = fk.p;
            for (int i = 0; i < cfg.m; ++i) p.bos[i] += gk.p.bos[i];
            int sign = merge_sign(fk.p.fer, gk.p.fer);
            p.fer |= gk.p.fer;
            Scalar c = fc * gc;
            if (sign < 0) c = -c;
            r.add({std::move(p), gk.s}, c);
        }
    }
    return r;
}

Element partial(const SpaceConfig& cfg, int j, const Element& f) {
    cfg.check_index(j);
    Element r;
    if (j <= cfg.m) {
        for (const auto& [k, c] : f.terms()) {
            int e = k.p.bos[j - 1];
            if (e == 0) continue;
            TermKey nk = k;
            nk.p.bos[j - 1] = e - 1;
            r.add(std::move(nk), c * Scalar(e));
        }
        return r;
    }
    int bit = j - cfg.m - 1;
    std::uint32_t mask = 1u << bit;
    std::uint32_t below = mask - 1;
    for (const auto& [k, c] : f.terms()) {
        if (!(k.p.fer & mask)) continue;
        TermKey nk = k;
        nk.p.fer &= ~mask;
        // jump the derivative over the earlier odd factors
        int sign = std::popcount(k.p.fer & below) & 1 ? -1 : 1;
        r.add(std::move(nk), sign < 0 ? -c : c);
    }
    return r;
}

Element partial_up(const SpaceConfig& cfg, int j, const Element& f) {
    cfg.check_index(j);
    if (j <= cfg.m) return partial(cfg, j, f);
    int k = cfg.metric_partner(j);
    Element r = partial(cfg, k, f);
    // g_{kj} = -1 exactly when j is in the first fermionic block
    return j <= cfg.m + cfg.n ? -r : r;
}

std::string PolyMonomial::str(const SpaceConfig& cfg) const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < cfg.m; ++i) {
        if (!bos[i]) continue;
        if (any) os << '*';
        os << 'x' << i + 1;
        if (bos[i] > 1) os << '^' << bos[i];
        any = true;
    }
    for (int i = 1; i <= 2 * cfg.n; ++i) {
        if (!has_fermion(i)) continue;
        if (any) os << '*';
        os << "x`" << i;
        any = true;
    }
    return any ? os.str() : "1";
}

std::string SpinorMonomial::str(const SpaceConfig& cfg) const {
    std::ostringstream os;
    bool any = false;
    for (int j = 1; j <= cfg.d(); ++j) {
        if (!has_theta(j)) continue;
        if (any) os << '*';
        os << "th" << j;
        any = true;
    }
    for (int i = 0; i < cfg.n; ++i) {
        if (!t[i]) continue;
        if (any) os << '*';
        os << 't' << i + 1;
        if (t[i] > 1) os << '^' << t[i];
        any = true;
    }
    return any ? os.str() : "1";
}

std::string TermKey::str(const SpaceConfig& cfg) const {
    std::string ps = p.str(cfg), ss = s.str(cfg);
    if (ss == "1") return ps;
    if (ps == "1") return ss;
    return ps + "*" + ss;
}

std::string Element::str(const SpaceConfig& cfg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        std::string ks = k.str(cfg);
        if (ks == "1") {
            os << cs;
        } else if (cs == "1") {
            os << ks;
        } else {
            bool simple = cs.find(' ') == std::string::npos;
            os << (simple ? cs : "(" + cs + ")") << '*' << ks;
        }
    }
    return os.str();
}

}  // namespace sdirac
