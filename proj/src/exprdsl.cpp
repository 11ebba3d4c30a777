#include "sdirac/exprdsl.hpp"

#include <cctype>
#include <sstream>

namespace sdirac {

MPoly& MPoly::operator+=(const MPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar MPoly::substitute(const Scalar& m_value) const {
    Scalar acc(0), pw(1);
    for (const auto& c : coeffs_) {
        acc += c * pw;
        pw = pw * m_value;
    }
    return acc;
}

std::string MPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].str() << ")";
        if (i == 1) os << "*M";
        if (i > 1) os << "*M^" << i;
    }
    return os.str();
}

// --- parsing -------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip();
        return pos >= text.size();
    }
    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }
    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw SyntaxError("expected identifier", pos);
        return text.substr(start, pos - start);
    }
    long integer() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw SyntaxError("expected integer", pos);
        return std::stol(text.substr(start, pos - start));
    }
};

ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprPtr parse_sum(Lexer& lx);

std::vector<int> parse_indices(Lexer& lx, int count) {
    lx.expect('(');
    std::vector<int> idx;
    for (int i = 0; i < count; ++i) {
        if (i) lx.expect(',');
        idx.push_back(static_cast<int>(lx.integer()));
    }
    lx.expect(')');
    return idx;
}

ExprPtr parse_primary(Lexer& lx) {
    lx.skip();
    if (lx.pos >= lx.text.size()) throw SyntaxError("unexpected end of input", lx.pos);
    char c = lx.peek();
    if (c == '(') {
        lx.expect('(');
        ExprPtr e = parse_sum(lx);
        lx.expect(')');
        return e;
    }
    if (c == '[') {
        lx.expect('[');
        ExprPtr a = parse_sum(lx);
        lx.expect(',');
        ExprPtr b = parse_sum(lx);
        lx.expect(']');
        ExprNode n{ExprNode::Kind::Bracket};
        n.children = {a, b};
        return make(std::move(n));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = lx.integer();
        Rational q(num);
        if (lx.accept('/')) {
            long den = lx.integer();
            if (den == 0) throw SyntaxError("zero denominator", lx.pos);
            q = Rational(num, den);
        }
        ExprNode n{ExprNode::Kind::Number};
        n.number = q;
        return make(std::move(n));
    }
    std::size_t at = lx.pos;
    std::string id = lx.ident();
    if (id == "i") return make({ExprNode::Kind::ImagUnit});
    if (id == "sqrt2") return make({ExprNode::Kind::Sqrt2});
    if (id == "M") return make({ExprNode::Kind::MSymbol});
    auto gen = [&](const char* name, int arity) {
        ExprNode n{ExprNode::Kind::Gen};
        n.name = name;
        n.indices = parse_indices(lx, arity);
        return make(std::move(n));
    };
    if (id == "X") return gen("X", 1);
    if (id == "D") return gen("D", 1);
    if (id == "Dup") return gen("Dup", 1);
    if (id == "E") return gen("E", 1);
    auto named = [&](const char* name, int arity) {
        ExprNode n{ExprNode::Kind::Named};
        n.name = name;
        if (arity > 0) n.indices = parse_indices(lx, arity);
        return make(std::move(n));
    };
    if (id == "dirac") return named("dirac", 0);
    if (id == "vector") return named("vector", 0);
    if (id == "laplace") return named("laplace", 0);
    if (id == "r2") return named("r2", 0);
    if (id == "euler") return named("euler", 0);
    if (id == "L") return named("L", 2);
    if (id == "B") return named("B", 2);
    if (id == "K") return named("K", 2);
    if (id == "Pi") return named("Pi", 1);
    throw SyntaxError("unknown identifier '" + id + "'", at);
}

ExprPtr parse_factor(Lexer& lx) {
    if (lx.accept('-')) {
        ExprNode n{ExprNode::Kind::Neg};
        n.children = {parse_factor(lx)};
        return make(std::move(n));
    }
    ExprPtr p = parse_primary(lx);
    if (lx.accept('^')) {
        long e = lx.integer();
        if (e < 0) throw SyntaxError("negative exponent", lx.pos);
        ExprNode n{ExprNode::Kind::Power};
        n.children = {p};
        n.exponent = static_cast<int>(e);
        return make(std::move(n));
    }
    return p;
}

ExprPtr parse_term(Lexer& lx) {
    ExprPtr lhs = parse_factor(lx);
    while (lx.peek() == '*') {
        lx.expect('*');
        ExprPtr rhs = parse_factor(lx);
        ExprNode n{ExprNode::Kind::Product};
        n.children = {lhs, rhs};
        lhs = make(std::move(n));
    }
    return lhs;
}

ExprPtr parse_sum(Lexer& lx) {
    ExprPtr lhs = parse_term(lx);
    while (true) {
        if (lx.accept('+')) {
            ExprNode n{ExprNode::Kind::Sum};
            n.children = {lhs, parse_term(lx)};
            lhs = make(std::move(n));
        } else if (lx.peek() == '-') {
            lx.expect('-');
            ExprNode neg{ExprNode::Kind::Neg};
            neg.children = {parse_term(lx)};
            ExprNode n{ExprNode::Kind::Diff};
            n.children = {lhs, make(std::move(neg))};
            // store as Sum(lhs, Neg(rhs)) for a single canonical shape
            n.kind = ExprNode::Kind::Sum;
            lhs = make(std::move(n));
        } else {
            break;
        }
    }
    return lhs;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Lexer lx{text};
    ExprPtr e = parse_sum(lx);
    lx.skip();
    if (lx.pos != text.size()) throw SyntaxError("trailing input", lx.pos);
    return e;
}

std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    std::function<void(const ExprPtr&)> go = [&](const ExprPtr& p) {
        switch (p->kind) {
            case ExprNode::Kind::Sum:
                os << '(';
                go(p->children[0]);
                os << " + ";
                go(p->children[1]);
                os << ')';
                break;
            case ExprNode::Kind::Diff:
                break;  // never constructed
            case ExprNode::Kind::Product:
                os << '(';
                go(p->children[0]);
                os << " * ";
                go(p->children[1]);
                os << ')';
                break;
            case ExprNode::Kind::Bracket:
                os << '[';
                go(p->children[0]);
                os << ", ";
                go(p->children[1]);
                os << ']';
                break;
            case ExprNode::Kind::Neg:
                os << "-";
                go(p->children[0]);
                break;
            case ExprNode::Kind::Power:
                go(p->children[0]);
                os << '^' << p->exponent;
                break;
            case ExprNode::Kind::Number:
                os << numerator(p->number);
                if (denominator(p->number) != 1) os << '/' << denominator(p->number);
                break;
            case ExprNode::Kind::ImagUnit: os << 'i'; break;
            case ExprNode::Kind::Sqrt2: os << "sqrt2"; break;
            case ExprNode::Kind::MSymbol: os << 'M'; break;
            case ExprNode::Kind::Gen:
            case ExprNode::Kind::Named:
                os << p->name;
                if (!p->indices.empty()) {
                    os << '(';
                    for (std::size_t i = 0; i < p->indices.size(); ++i) {
                        if (i) os << ',';
                        os << p->indices[i];
                    }
                    os << ')';
                }
                break;
        }
    };
    go(e);
    return os.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind || a->name != b->name || a->indices != b->indices ||
        a->number != b->number || a->exponent != b->exponent ||
        a->children.size() != b->children.size())
        return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!expr_equal(a->children[i], b->children[i])) return false;
    return true;
}

int expr_parity(const SpaceConfig& cfg, const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Number:
        case ExprNode::Kind::ImagUnit:
        case ExprNode::Kind::Sqrt2:
        case ExprNode::Kind::MSymbol:
            return 0;
        case ExprNode::Kind::Gen: {
            int j = e->indices[0];
            cfg.check_index(j);
            return e->name == "E" ? 1 ^ cfg.grade(j) : cfg.grade(j);
        }
        case ExprNode::Kind::Named: {
            const std::string& n = e->name;
            if (n == "dirac" || n == "vector") return 1;
            if (n == "laplace" || n == "r2" || n == "euler") return 0;
            if (n == "Pi") return cfg.grade(e->indices[0]);
            return cfg.grade(e->indices[0]) ^ cfg.grade(e->indices[1]);  // L, B, K
        }
        case ExprNode::Kind::Neg:
            return expr_parity(cfg, e->children[0]);
        case ExprNode::Kind::Power: {
            int p = expr_parity(cfg, e->children[0]);
            if (p < 0) return -1;
            return (p * e->exponent) & 1;
        }
        case ExprNode::Kind::Product:
        case ExprNode::Kind::Bracket: {
            int a = expr_parity(cfg, e->children[0]);
            int b = expr_parity(cfg, e->children[1]);
            if (a < 0 || b < 0) return -1;
            return a ^ b;
        }
        case ExprNode::Kind::Sum:
        case ExprNode::Kind::Diff: {
            int a = expr_parity(cfg, e->children[0]);
            int b = expr_parity(cfg, e->children[1]);
            return a == b ? a : -1;
        }
    }
    return -1;
}

// --- normal ordering -----------------------------------------------------------

namespace {

// Flat word over the combined generators during rewriting.
enum class AtomType : char { X = 0, D = 1, E = 2 };
struct Atom {
    AtomType type;
    int index;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
};
using Word = std::vector<Atom>;
using RawForm = std::map<Word, MPoly>;

void raw_add(RawForm& target, const Word& w, const MPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = target.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) target.erase(it);
    }
}

RawForm raw_scale(const RawForm& a, const MPoly& c) {
    RawForm r;
    for (const auto& [w, v] : a) raw_add(r, w, v * c);
    return r;
}

RawForm raw_sum(const RawForm& a, const RawForm& b) {
    RawForm r = a;
    for (const auto& [w, v] : b) raw_add(r, w, v);
    return r;
}

RawForm raw_product(const RawForm& a, const RawForm& b) {
    RawForm r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            raw_add(r, w, ca * cb);
        }
    return r;
}

RawForm raw_atom(AtomType t, int j, MPoly c = MPoly(Scalar(1))) {
    RawForm r;
    raw_add(r, {{t, j}}, c);
    return r;
}

RawForm raw_scalar(MPoly c) {
    RawForm r;
    raw_add(r, {}, std::move(c));
    return r;
}

// named operator expansions at fixed (m, n)
RawForm expand_dup(const SpaceConfig& cfg, int j) {
    int p = cfg.metric_partner(j);
    return raw_atom(AtomType::D, p, MPoly(Scalar(cfg.metric(p, j))));
}

RawForm expand_hat(const SpaceConfig& cfg, int j) {
    int p = cfg.metric_partner(j);
    return raw_atom(AtomType::E, p, MPoly(Scalar(cfg.metric(p, j))));
}

RawForm expand_named(const SpaceConfig& cfg, const ExprNode& node) {
    const std::string& name = node.name;
    const int dims = cfg.dims();
    if (name == "dirac") {
        RawForm r;
        for (int k = 1; k <= dims; ++k)
            r = raw_sum(r, raw_product(expand_hat(cfg, k), raw_atom(AtomType::D, k)));
        return r;
    }
    if (name == "vector") {
        RawForm r;
        for (int j = 1; j <= dims; ++j)
            r = raw_sum(r, raw_product(raw_atom(AtomType::X, j), raw_atom(AtomType::E, j)));
        return r;
    }
    if (name == "euler") {
        RawForm r;
        for (int j = 1; j <= dims; ++j)
            r = raw_sum(r, raw_product(raw_atom(AtomType::X, j), raw_atom(AtomType::D, j)));
        return r;
    }
    if (name == "laplace" || name == "r2") {
        AtomType t = name == "laplace" ? AtomType::D : AtomType::X;
        RawForm r;
        for (int j = 1; j <= dims; ++j)
            for (int k = 1; k <= dims; ++k) {
                int g = cfg.metric(j, k);
                if (!g) continue;
                r = raw_sum(r, raw_scale(raw_product(raw_atom(t, j), raw_atom(t, k)),
                                         MPoly(Scalar(g))));
            }
        return r;
    }
    if (name == "L") {
        int i = node.indices[0], j = node.indices[1];
        RawForm first = raw_product(raw_atom(AtomType::X, i), expand_dup(cfg, j));
        RawForm second = raw_product(raw_atom(AtomType::X, j), expand_dup(cfg, i));
        int sign = cfg.grade(i) && cfg.grade(j) ? 1 : -1;
        return raw_sum(first, raw_scale(second, MPoly(Scalar(sign))));
    }
    if (name == "B") {
        int i = node.indices[0], j = node.indices[1];
        RawForm r = raw_product(expand_hat(cfg, i), expand_hat(cfg, j));
        r = raw_sum(r, raw_scalar(MPoly(Scalar(cfg.metric(j, i)))));
        return raw_scale(r, MPoly(Scalar::fraction(-1, 2)));
    }
    if (name == "K") {
        ExprNode l = node;
        l.name = "L";
        ExprNode b = node;
        b.name = "B";
        return raw_sum(expand_named(cfg, l), expand_named(cfg, b));
    }
    if (name == "Pi") {
        int j = node.indices[0];
        ExprNode vec{ExprNode::Kind::Named};
        vec.name = "vector";
        RawForm x_hat = raw_product(expand_named(cfg, vec), expand_hat(cfg, j));
        ExprNode eu{ExprNode::Kind::Named};
        eu.name = "euler";
        RawForm m2e = raw_sum(raw_scalar(MPoly::symbol_m()),
                              raw_scale(expand_named(cfg, eu), MPoly(Scalar(2))));
        RawForm xj_m2e = raw_product(raw_atom(AtomType::X, j), m2e);
        ExprNode rr{ExprNode::Kind::Named};
        rr.name = "r2";
        RawForm r2d = raw_product(expand_named(cfg, rr), expand_dup(cfg, j));
        return raw_sum(raw_sum(x_hat, xj_m2e), raw_scale(r2d, MPoly(Scalar(-1))));
    }
    throw SyntaxError("unknown named operator " + name, 0);
}

RawForm expand(const SpaceConfig& cfg, const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Number: return raw_scalar(MPoly(Scalar(e->number)));
        case ExprNode::Kind::ImagUnit: return raw_scalar(MPoly(Scalar::i()));
        case ExprNode::Kind::Sqrt2: return raw_scalar(MPoly(Scalar::sqrt2()));
        case ExprNode::Kind::MSymbol: return raw_scalar(MPoly::symbol_m());
        case ExprNode::Kind::Gen: {
            int j = e->indices[0];
            cfg.check_index(j);
            if (e->name == "X") return raw_atom(AtomType::X, j);
            if (e->name == "D") return raw_atom(AtomType::D, j);
            if (e->name == "Dup") return expand_dup(cfg, j);
            return raw_atom(AtomType::E, j);
        }
        case ExprNode::Kind::Named: return expand_named(cfg, *e);
        case ExprNode::Kind::Neg: return raw_scale(expand(cfg, e->children[0]), MPoly(Scalar(-1)));
        case ExprNode::Kind::Power: {
            RawForm r = raw_scalar(MPoly(Scalar(1)));
            RawForm base = expand(cfg, e->children[0]);
            for (int i = 0; i < e->exponent; ++i) r = raw_product(r, base);
            return r;
        }
        case ExprNode::Kind::Sum:
        case ExprNode::Kind::Diff:
            return raw_sum(expand(cfg, e->children[0]), expand(cfg, e->children[1]));
        case ExprNode::Kind::Product:
            return raw_product(expand(cfg, e->children[0]), expand(cfg, e->children[1]));
        case ExprNode::Kind::Bracket: {
            int pa = expr_parity(cfg, e->children[0]);
            int pb = expr_parity(cfg, e->children[1]);
            if (pa < 0 || pb < 0)
                throw UndeclaredParity("bracket of expressions without uniform parity");
            RawForm a = expand(cfg, e->children[0]);
            RawForm b = expand(cfg, e->children[1]);
            RawForm ab = raw_product(a, b);
            RawForm ba = raw_product(b, a);
            int sign = (pa && pb) ? 1 : -1;
            return raw_sum(ab, raw_scale(ba, MPoly(Scalar(sign))));
        }
    }
    throw SyntaxError("malformed expression tree", 0);
}

int atom_grade(const SpaceConfig& cfg, const Atom& a) { return cfg.grade(a.index); }

// Returns the position of the adjacent violation to attack, or -1.
int find_word_violation(const SpaceConfig& cfg, const Word& w, OrderStrategy strat) {
    int found = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        const Atom& a = w[i];
        const Atom& b = w[i + 1];
        bool bad = false;
        if (a.type != b.type) {
            bad = a.type > b.type;
        } else if (a.type == AtomType::E) {
            bad = a.index > b.index || (a.index == b.index && atom_grade(cfg, a) == 0);
        } else {
            // polynomial blocks: ascending, odd squares are the zero rewrite
            bad = a.index > b.index || (a.index == b.index && atom_grade(cfg, a) == 1);
        }
        if (!bad) continue;
        if (strat == OrderStrategy::FirstViolation) return i;
        found = i;
    }
    return found;
}

}  // namespace

std::string NormalWord::str(const SpaceConfig& cfg) const {
    std::ostringstream os;
    bool any = false;
    auto mono = [&](const PolyMonomial& p, const char* xd) {
        for (int j = 1; j <= cfg.dims(); ++j) {
            int e = j <= cfg.m ? p.bos[j - 1] : (p.has_fermion(j - cfg.m) ? 1 : 0);
            for (int r = 0; r < e; ++r) {
                if (any) os << '*';
                os << xd << '(' << j << ')';
                any = true;
            }
        }
    };
    mono(xpart, "X");
    mono(dpart, "D");
    for (int j : epart) {
        if (any) os << '*';
        os << "E(" << j << ')';
        any = true;
    }
    return any ? os.str() : "1";
}

NormalForm normal_order(const SpaceConfig& cfg, const ExprPtr& e, OrderStrategy strategy) {
    RawForm pending = expand(cfg, e);
    RawForm done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        Word w = std::move(node.key());
        MPoly c = std::move(node.mapped());
        if (c.is_zero()) continue;
        int pos = find_word_violation(cfg, w, strategy);
        if (pos < 0) {
            raw_add(done, w, c);
            continue;
        }
        Atom a = w[pos], b = w[pos + 1];
        auto push = [&pending](Word nw, const MPoly& nc) { raw_add(pending, std::move(nw), nc); };
        if (a.type == b.type && a.index == b.index) {
            if (a.type == AtomType::E) {
                // bosonic Clifford square contracts to -g_{jj}
                Word nw = w;
                nw.erase(nw.begin() + pos, nw.begin() + pos + 2);
                push(std::move(nw), c * MPoly(Scalar(-cfg.metric(a.index, a.index))));
            }
            // odd variable or derivative squared: drop the word
            continue;
        }
        int sign = atom_grade(cfg, a) && atom_grade(cfg, b) ? -1 : 1;
        if (a.type == AtomType::D && b.type == AtomType::X) {
            // D_j X_k = delta_jk + (-1)^{[j][k]} X_k D_j
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            push(std::move(swapped), sign < 0 ? c * MPoly(Scalar(-1)) : c);
            if (a.index == b.index) {
                Word contracted = w;
                contracted.erase(contracted.begin() + pos, contracted.begin() + pos + 2);
                push(std::move(contracted), c);
            }
            continue;
        }
        if (a.type == AtomType::E && b.type == AtomType::E) {
            // E_a E_b = -(-1)^{[a][b]} E_b E_a - 2 g_{ba}
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            push(std::move(swapped), sign < 0 ? c : c * MPoly(Scalar(-1)));
            int g = cfg.metric(b.index, a.index);
            if (g) {
                Word contracted = w;
                contracted.erase(contracted.begin() + pos, contracted.begin() + pos + 2);
                push(std::move(contracted), c * MPoly(Scalar(-2 * g)));
            }
            continue;
        }
        // all remaining adjacent swaps are pure Koszul: X/X, D/D out of
        // order, or E passing X or D
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        push(std::move(swapped), sign < 0 ? c * MPoly(Scalar(-1)) : c);
    }
    // compact the flat words
    NormalForm nf;
    for (const auto& [w, c] : done) {
        NormalWord key{PolyMonomial::one(cfg), PolyMonomial::one(cfg), {}};
        for (const Atom& a : w) {
            if (a.type == AtomType::E) {
                key.epart.push_back(a.index);
                continue;
            }
            PolyMonomial& part = a.type == AtomType::X ? key.xpart : key.dpart;
            if (a.index <= cfg.m)
                part.bos[a.index - 1] += 1;
            else
                part.fer |= 1u << (a.index - cfg.m - 1);
        }
        auto [it, inserted] = nf.try_emplace(key, c);
        if (!inserted) it->second += c;
    }
    for (auto it = nf.begin(); it != nf.end();)
        it = it->second.is_zero() ? nf.erase(it) : std::next(it);
    return nf;
}

NormalForm nf_subtract(const NormalForm& a, const NormalForm& b) {
    NormalForm r = a;
    for (const auto& [w, c] : b) {
        auto [it, inserted] = r.try_emplace(w, -c);
        if (!inserted) {
            it->second += -c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

bool nf_zero_after_substitution(const SpaceConfig& cfg, const NormalForm& nf) {
    Scalar m_value(cfg.superdim());
    for (const auto& [w, c] : nf)
        if (!c.substitute(m_value).is_zero()) return false;
    return true;
}

std::string nf_str(const SpaceConfig& cfg, const NormalForm& nf) {
    if (nf.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : nf) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << w.str(cfg);
    }
    return os.str();
}

Operator evaluate_expr(const SpaceConfig& cfg, const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Number:
            return scale(Scalar(e->number), ops::identity(cfg));
        case ExprNode::Kind::ImagUnit: return scale(Scalar::i(), ops::identity(cfg));
        case ExprNode::Kind::Sqrt2: return scale(Scalar::sqrt2(), ops::identity(cfg));
        case ExprNode::Kind::MSymbol:
            return scale(Scalar(cfg.superdim()), ops::identity(cfg));
        case ExprNode::Kind::Gen: {
            int j = e->indices[0];
            if (e->name == "X") return ops::mul_x(cfg, j);
            if (e->name == "D") return ops::partial_op(cfg, j);
            if (e->name == "Dup") return ops::partial_up_op(cfg, j);
            return ops::clifford_act(cfg, j);
        }
        case ExprNode::Kind::Named: {
            const std::string& n = e->name;
            if (n == "dirac") return ops::dirac(cfg);
            if (n == "vector") return ops::vector_x(cfg);
            if (n == "laplace") return ops::laplace(cfg);
            if (n == "r2") return ops::r2(cfg);
            if (n == "euler") return ops::euler(cfg);
            if (n == "L") return ops::L_op(cfg, e->indices[0], e->indices[1]);
            if (n == "B") return ops::B_op(cfg, e->indices[0], e->indices[1]);
            if (n == "K") return ops::K_op(cfg, e->indices[0], e->indices[1]);
            return ops::Pi_op(cfg, e->indices[0]);
        }
        case ExprNode::Kind::Neg:
            return scale(Scalar(-1), evaluate_expr(cfg, e->children[0]));
        case ExprNode::Kind::Power:
            return power(evaluate_expr(cfg, e->children[0]), e->exponent);
        case ExprNode::Kind::Sum:
        case ExprNode::Kind::Diff:
            return add(evaluate_expr(cfg, e->children[0]), evaluate_expr(cfg, e->children[1]));
        case ExprNode::Kind::Product:
            return compose(evaluate_expr(cfg, e->children[0]), evaluate_expr(cfg, e->children[1]));
        case ExprNode::Kind::Bracket: {
            Operator a = evaluate_expr(cfg, e->children[0]);
            Operator b = evaluate_expr(cfg, e->children[1]);
            if (!a.parity_declared()) a.parity = expr_parity(cfg, e->children[0]);
            if (!b.parity_declared()) b.parity = expr_parity(cfg, e->children[1]);
            return bracket(a, b);
        }
    }
    throw SyntaxError("malformed expression tree", 0);
}

IdentityReport verify_identity(const SpaceConfig& cfg, const ExprPtr& lhs, const ExprPtr& rhs,
                               int k_max, int q_max) {
    IdentityReport rep;
    NormalForm diff = nf_subtract(normal_order(cfg, lhs), normal_order(cfg, rhs));
    rep.symbolic_pass = nf_zero_after_substitution(cfg, diff);
    if (!rep.symbolic_pass) rep.residue = nf_str(cfg, diff);
    auto res = equal_on(cfg, evaluate_expr(cfg, lhs), evaluate_expr(cfg, rhs), k_max, q_max);
    rep.evaluation_pass = res.equal;
    rep.witness = res.witness;
    rep.consistent = rep.symbolic_pass == rep.evaluation_pass;
    return rep;
}

IdentityReport verify_identity(const SpaceConfig& cfg, const std::string& lhs,
                               const std::string& rhs, int k_max, int q_max) {
    return verify_identity(cfg, parse_expr(lhs), parse_expr(rhs), k_max, q_max);
}

}  // namespace sdirac
