#include "sdirac/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sdirac {

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i) os << ", ";
        os << eps[i];
    }
    os << "; ";
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (i) os << ", ";
        os << delta[i];
    }
    os << ')';
    return os.str();
}

Weight monogenic_weight_odd(const SpaceConfig& cfg, int k) {
    Weight w;
    w.eps.assign(cfg.d(), Rational(1, 2));
    if (!w.eps.empty()) w.eps[0] += k;
    w.delta.assign(cfg.n, Rational(-1, 2));
    return w;
}

std::vector<SparseVec> relation_kernel(const std::vector<SparseVec>& columns) {
    // Largest coordinate in play separates image block from tag block.
    long nrows = 0;
    for (const auto& c : columns)
        if (!c.empty()) nrows = std::max(nrows, c.rbegin()->first + 1);
    Echelon ech;
    std::vector<SparseVec> kernel;
    for (long j = 0; j < static_cast<long>(columns.size()); ++j) {
        SparseVec v = columns[j];
        v.emplace(nrows + j, Scalar(1));
        while (v.begin()->first < nrows) {
            auto row = ech.rows().find(v.begin()->first);
            if (row == ech.rows().end()) break;
            sparse_axpy(v, -v.begin()->second, row->second);
        }
        if (v.begin()->first >= nrows) {
            SparseVec kv;
            for (const auto& [i, c] : v) kv.emplace(i - nrows, c);
            kernel.push_back(sparse_scale(kv, kv.begin()->second.inverse()));
        } else {
            ech.add(std::move(v));
        }
    }
    return kernel;
}

namespace {

std::vector<Element> laplace_kernel(const SpaceConfig& cfg, int k) {
    if (k < 0) return {};
    Operator lap = ops::laplace(cfg);
    std::vector<TermKey> domain;
    for (const auto& p : poly_basis(cfg, k)) domain.push_back({p, SpinorMonomial::one(cfg)});
    BlockMatrix b = block_matrix(cfg, lap, std::move(domain), k, k, 0);
    return kernel_elements(b);
}

Element tensor_spinor(const Element& poly, const SpinorMonomial& s) {
    Element out;
    for (const auto& [key, c] : poly.terms()) out.add({key.p, s}, c);
    return out;
}

Element apply_power(const Operator& op, Element v, int p) {
    for (int i = 0; i < p; ++i) v = op(v);
    return v;
}

}  // namespace

HarmonicsResult harmonics(const SpaceConfig& cfg, int k) {
    HarmonicsResult res;
    res.basis = laplace_kernel(cfg, k);
    int M = cfg.superdim();
    bool reducible = M <= 0 && (M % 2 == 0) && (2 - M / 2 <= k) && (k <= 2 - M);
    if (!reducible) return res;
    res.window_applies = true;
    int power = (2 * k + M - 2) / 2;  // exponent of R^2
    auto lower = laplace_kernel(cfg, 2 - M - k);
    Operator rsq = ops::r2(cfg);
    ElementSpan span(res.basis);
    for (const auto& h : lower) {
        Element image = apply_power(rsq, h, power);
        res.window_submodule_dim += 1;
        if (!span.contains(image)) res.window_pass = false;
    }
    return res;
}

std::vector<Element> monogenics(const SpaceConfig& cfg, int k, int q,
                                std::optional<int> chirality) {
    if (k < 0 || q < 0) return {};
    if (chirality && cfg.m % 2 != 0)
        throw WindowViolation("chirality split requires m even");
    BlockMatrix b = block_matrix(cfg, ops::dirac(cfg), k, q, chirality);
    auto kernel = kernel_elements(b);
    // Euler eigenvalue sanity: every kernel vector is homogeneous of degree k.
    for (const auto& v : kernel)
        if (v.uniform_degree() != std::optional<int>(k))
            throw DimensionMismatch("monogenic kernel vector not homogeneous");
    return kernel;
}

FischerResult fischer_check(const SpaceConfig& cfg, int k, int q) {
    const int M = cfg.superdim();
    const int denom = 2 * k - 2 + M;
    if (denom == 0)
        throw FischerSingular("projection constant undefined: k = 1 - M/2 at (m,n) = (" +
                              std::to_string(cfg.m) + "," + std::to_string(cfg.n) + ")");
    FischerResult res;
    const Scalar c = Scalar::fraction(1, denom);
    Operator dx = ops::dirac(cfg);
    Operator x = ops::vector_x(cfg);

    auto hk = harmonics(cfg, k).basis;
    auto spinors = spinor_basis(cfg, q);
    res.dim_block = static_cast<int>(hk.size() * spinors.size());
    for (const auto& h : hk) {
        for (const auto& s : spinors) {
            Element v = tensor_spinor(h, s);
            Element dv = dx(v);
            Element p1 = v + x(dv) * c;
            if (!dx(p1).is_zero()) {
                res.failure = "projection piece not monogenic at " + v.str(cfg);
                return res;
            }
            if (!dx(dv).is_zero()) {
                res.failure = "Dx^2 nonzero on harmonic " + v.str(cfg);
                return res;
            }
            if (cfg.m % 2 == 0) {
                res.refined_checked = true;
                // the monogenic piece keeps the chirality of v, the remainder
                // drops to the complementary one before multiplication by x
                auto chir_of = [](const Element& e) -> std::optional<int> {
                    std::optional<int> ch;
                    for (const auto& [key, cc] : e.terms()) {
                        int c2 = key.s.chirality();
                        if (ch && *ch != c2) return std::nullopt;
                        ch = c2;
                    }
                    return ch;
                };
                int vc = s.chirality();
                auto pc = chir_of(p1);
                auto dc = chir_of(dv);
                if ((pc && *pc != vc) || (dc && *dc != (vc ^ 1))) {
                    res.refined_pass = false;
                    res.failure = "chirality bookkeeping failed at " + v.str(cfg);
                    return res;
                }
            }
        }
    }

    auto mk = monogenics(cfg, k, q);
    auto mk1 = monogenics(cfg, k - 1, q - 1);
    std::vector<Element> xmk1;
    xmk1.reserve(mk1.size());
    for (const auto& w : mk1) xmk1.push_back(x(w));
    res.dim_mk = static_cast<int>(mk.size());
    res.dim_x_mk1 = static_cast<int>(xmk1.size());
    ElementSpan inter = intersect(ElementSpan(mk), ElementSpan(xmk1));
    res.dim_intersection = inter.dim();
    if (res.dim_intersection != 0) {
        res.failure = "monogenics meet x*monogenics in dimension " +
                      std::to_string(res.dim_intersection);
        return res;
    }
    res.pass = res.refined_pass;
    return res;
}

CasimirResult casimir_test(const SpaceConfig& cfg, int k, int q) {
    CasimirResult res;
    const int cnum = 2 * k - 2 + cfg.superdim();
    res.nilpotent_case = cnum == 0;
    res.second_eigenvalue = Rational(-cnum);
    Operator cas = ops::casimir(cfg);
    auto hk = harmonics(cfg, k).basis;
    auto spinors = spinor_basis(cfg, q);
    for (const auto& h : hk) {
        for (const auto& s : spinors) {
            Element v = tensor_spinor(h, s);
            Element cv = cas(v);
            if (!cv.is_zero()) res.c_nonzero = true;
            if (res.nilpotent_case) {
                if (!cas(cv).is_zero()) {
                    res.failure = "C^2 nonzero at " + v.str(cfg);
                    return res;
                }
            } else {
                Element factor = cv + v * Scalar(cnum);
                if (!factor.is_zero()) res.factor_nonzero = true;
                Element quad = cas(cv) + cv * Scalar(cnum);
                if (!quad.is_zero()) {
                    res.failure = "C(C + " + std::to_string(cnum) + ") nonzero at " + v.str(cfg);
                    return res;
                }
            }
        }
    }
    res.pass = res.c_nonzero && (res.nilpotent_case || res.factor_nonzero);
    if (!res.pass && res.failure.empty()) res.failure = "a factor vanished identically";
    return res;
}

namespace {

struct SubmoduleSide {
    int dim_m = 0;
    int dim_sub = 0;
    bool pass = true;
    std::string failure;
};

SubmoduleSide submodule_side(const SpaceConfig& cfg, int k, int q, int chir, int power,
                             int source_degree) {
    SubmoduleSide side;
    Operator x = ops::vector_x(cfg);
    auto mk = monogenics(cfg, k, q, chir);
    side.dim_m = static_cast<int>(mk.size());
    auto src = monogenics(cfg, source_degree, q - power, chir ^ (power & 1));
    std::vector<Element> embedded;
    for (const auto& w : src) embedded.push_back(apply_power(x, w, power));
    side.dim_sub = static_cast<int>(embedded.size());

    ElementSpan mspan(mk);
    for (const auto& e : embedded)
        if (!mspan.contains(e)) {
            side.pass = false;
            side.failure = "embedded submodule vector escapes the monogenics";
            return side;
        }

    // x . (P ox S) restricted to the block: x applied to everything one
    // degree down, one t-cut up
    std::vector<Element> ximage;
    for (const auto& key : block_basis(cfg, k - 1, q + 1))
        ximage.push_back(x(Element::monomial(key)));
    ElementSpan inter = intersect(mspan, ElementSpan(ximage));
    ElementSpan sub(embedded);
    if (inter.dim() != sub.dim()) {
        side.pass = false;
        side.failure = "intersection with x.(P ox S) has dimension " +
                       std::to_string(inter.dim()) + ", submodule has " +
                       std::to_string(sub.dim());
        return side;
    }
    for (const auto& e : inter.basis())
        if (!sub.contains(e)) {
            side.pass = false;
            side.failure = "intersection vector outside the embedded submodule";
            return side;
        }
    return side;
}

}  // namespace

SubmoduleResult submodule_check(const SpaceConfig& cfg, int k, int q) {
    const int d = cfg.d(), n = cfg.n;
    if (cfg.m % 2 != 0)
        throw WindowViolation("unique-submodule window requires m even");
    if (d > n) throw WindowViolation("unique-submodule window requires d <= n");
    if (k < 1 + n - d || k > 1 + 2 * n - 2 * d)
        throw WindowViolation("degree " + std::to_string(k) + " outside window [" +
                              std::to_string(1 + n - d) + ", " + std::to_string(1 + 2 * n - 2 * d) +
                              "]");
    SubmoduleResult res;
    res.power = 2 * d - 2 * n + 2 * k - 1;
    res.source_degree = 2 * n - 2 * d - k + 1;

    auto plus = submodule_side(cfg, k, q, 0, res.power, res.source_degree);
    auto minus = submodule_side(cfg, k, q, 1, res.power, res.source_degree);
    res.dim_m_plus = plus.dim_m;
    res.dim_m_minus = minus.dim_m;
    res.dim_sub_plus = plus.dim_sub;
    res.dim_sub_minus = minus.dim_sub;
    if (!plus.pass || !minus.pass) {
        res.failure = !plus.pass ? "+: " + plus.failure : "-: " + minus.failure;
        return res;
    }
    // dimension reproducibility one cut higher
    auto plus2 = submodule_side(cfg, k, q + 1, 0, res.power, res.source_degree);
    auto minus2 = submodule_side(cfg, k, q + 1, 1, res.power, res.source_degree);
    res.stable_q = plus2.pass && minus2.pass && plus2.dim_sub >= plus.dim_sub &&
                   minus2.dim_sub >= minus.dim_sub;
    if (!res.stable_q) {
        res.failure = "dimensions not reproducible at Q+1";
        return res;
    }
    res.pass = true;
    return res;
}

namespace {

// K-type basis of the symmetry realization: all pairs i < j plus the
// fermionic diagonal.
std::vector<std::pair<int, int>> k_pair_basis(const SpaceConfig& cfg) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = i; j <= cfg.dims(); ++j) {
            if (i == j && cfg.grade(i) == 0) continue;
            pairs.emplace_back(i, j);
        }
    return pairs;
}

int osp_mn_dimension(const SpaceConfig& cfg) {
    return cfg.m * (cfg.m - 1) / 2 + cfg.n * (2 * cfg.n + 1) + 2 * cfg.m * cfg.n;
}

struct StackedOps {
    std::vector<TermKey> domain;
    std::map<TermKey, long> cod_index;
    long cod_size = 0;

    SparseVec stack(const SpaceConfig& cfg, const Operator& op) const {
        SparseVec v;
        for (long di = 0; di < static_cast<long>(domain.size()); ++di) {
            Element img = op(Element::monomial(domain[di]));
            for (const auto& [tk, c] : img.terms()) {
                auto it = cod_index.find(tk);
                if (it == cod_index.end())
                    throw UnboundedShift("stacked image of " + op.label +
                                         " escapes the probe block");
                v.emplace(di * cod_size + it->second, c);
            }
        }
        return v;
    }
};

StackedOps make_stacked(const SpaceConfig& cfg, int d_cut, int q_cut, int poly_margin,
                        int t_margin) {
    StackedOps s;
    s.domain = block_basis_range(cfg, 0, d_cut, q_cut);
    auto cod = block_basis_range(cfg, 0, d_cut + poly_margin, q_cut + t_margin);
    s.cod_size = static_cast<long>(cod.size());
    for (long i = 0; i < s.cod_size; ++i) s.cod_index.emplace(cod[i], i);
    return s;
}

// Joint eigenspace refinement of subspaces of a coefficient space under a
// linear map given by columns; candidates must cover every eigenvalue.
struct EigenPiece {
    std::vector<Rational> values;
    std::vector<SparseVec> basis;
};

std::vector<EigenPiece> refine_by_map(const std::vector<EigenPiece>& pieces,
                                      const std::vector<SparseVec>& map_columns,
                                      const std::vector<Rational>& candidates,
                                      const char* what) {
    auto apply = [&map_columns](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v) sparse_axpy(out, c, map_columns[i]);
        return out;
    };
    std::vector<EigenPiece> next;
    for (const auto& piece : pieces) {
        std::vector<SparseVec> images;
        images.reserve(piece.basis.size());
        for (const auto& b : piece.basis) images.push_back(apply(b));
        int found = 0;
        for (const auto& lambda : candidates) {
            std::vector<SparseVec> shifted;
            shifted.reserve(images.size());
            Scalar ls{Rational(-lambda)};
            for (std::size_t i = 0; i < images.size(); ++i) {
                SparseVec u = images[i];
                sparse_axpy(u, ls, piece.basis[i]);
                shifted.push_back(std::move(u));
            }
            auto combos = relation_kernel(shifted);
            if (combos.empty()) continue;
            EigenPiece np;
            np.values = piece.values;
            np.values.push_back(lambda);
            for (const auto& combo : combos) {
                SparseVec nb;
                for (const auto& [i, c] : combo) sparse_axpy(nb, c, piece.basis[i]);
                np.basis.push_back(std::move(nb));
            }
            found += static_cast<int>(np.basis.size());
            next.push_back(std::move(np));
        }
        if (found != static_cast<int>(piece.basis.size()))
            throw NoCartanConfig(std::string("adjoint action of ") + what +
                                 " is not diagonalizable over the candidate eigenvalues");
    }
    return next;
}

}  // namespace

std::vector<Operator> RootSystem::positive_ops() const {
    std::vector<Operator> out;
    for (const auto& r : roots)
        if (r.positive) out.push_back(r.op);
    return out;
}

RootSystem build_root_system(const SpaceConfig& cfg) {
    const int d = cfg.d(), n = cfg.n;
    if (d + n == 0) throw NoCartanConfig("no Cartan directions at (m,n) = (" +
                                         std::to_string(cfg.m) + "," + std::to_string(cfg.n) + ")");
    RootSystem rs;
    for (int a = 1; a <= d; ++a)
        rs.cartan.push_back(scale(-Scalar::i(), ops::K_op(cfg, 2 * a - 1, 2 * a)));
    for (int i = 1; i <= n; ++i)
        rs.cartan.push_back(ops::K_op(cfg, cfg.m + i, cfg.m + n + i));
    for (std::size_t c = 0; c < rs.cartan.size(); ++c) {
        rs.cartan[c].label = c < static_cast<std::size_t>(d)
                                 ? "H_eps" + std::to_string(c + 1)
                                 : "H_delta" + std::to_string(c + 1 - d);
        rs.cartan[c].parity = 0;
    }

    auto pairs = k_pair_basis(cfg);
    const long nb = static_cast<long>(pairs.size());
    std::vector<Operator> kops;
    kops.reserve(nb);
    for (auto [i, j] : pairs) kops.push_back(ops::K_op(cfg, i, j));

    // Stack the K operators on a probe block and verify independence.  The
    // margin must also hold the images of Cartan brackets (two K factors).
    StackedOps probe = make_stacked(cfg, 2, 2, 0, 4);
    std::vector<SparseVec> stacked;
    stacked.reserve(nb);
    Echelon ech;
    std::vector<SparseVec> tagged;
    for (long b = 0; b < nb; ++b) {
        stacked.push_back(probe.stack(cfg, kops[b]));
        SparseVec v = stacked.back();
        long base = static_cast<long>(probe.domain.size()) * probe.cod_size;
        v.emplace(base + b, Scalar(1));
        tagged.push_back(v);
        ech.add(std::move(v));
    }
    if (ech.rank() != nb || nb != osp_mn_dimension(cfg))
        throw NoCartanConfig("symmetry realization not faithful on the probe block");

    // Adjoint action columns in the K basis.
    long probe_n = static_cast<long>(probe.domain.size()) * probe.cod_size;
    auto coeffs_of = [&](const SparseVec& w) {
        SparseVec v = w;
        while (!v.empty() && v.begin()->first < probe_n) {
            auto row = ech.rows().find(v.begin()->first);
            if (row == ech.rows().end())
                throw NoCartanConfig("adjoint action escapes the symmetry span");
            sparse_axpy(v, -v.begin()->second, row->second);
        }
        SparseVec out;
        for (const auto& [i, c] : v) out.emplace(i - probe_n, -c);
        return out;
    };
    std::vector<std::vector<SparseVec>> ad_columns(rs.cartan.size());
    for (std::size_t c = 0; c < rs.cartan.size(); ++c) {
        ad_columns[c].reserve(nb);
        for (long b = 0; b < nb; ++b) {
            Operator br = bracket(rs.cartan[c], kops[b]);
            ad_columns[c].push_back(coeffs_of(probe.stack(cfg, br)));
        }
    }

    // Simultaneous diagonalization; root entries are small integers.
    std::vector<Rational> candidates;
    for (int v = -2; v <= 2; ++v) candidates.push_back(v);
    std::vector<EigenPiece> pieces(1);
    for (long b = 0; b < nb; ++b) pieces[0].basis.push_back({{b, Scalar(1)}});
    for (std::size_t c = 0; c < rs.cartan.size(); ++c)
        pieces = refine_by_map(pieces, ad_columns[c], candidates, rs.cartan[c].label.c_str());

    for (const auto& piece : pieces) {
        bool zero = std::all_of(piece.values.begin(), piece.values.end(),
                                [](const Rational& r) { return r == 0; });
        if (zero) {
            if (static_cast<int>(piece.basis.size()) != d + n)
                throw NoCartanConfig("zero-root space has wrong dimension");
            continue;
        }
        if (piece.basis.size() != 1)
            throw NoCartanConfig("nonzero root space has multiplicity > 1");
        RootSpace space;
        space.root = piece.values;
        for (const auto& r : piece.values)
            if (r != 0) {
                space.positive = r > 0;
                break;
            }
        // assemble the root operator
        Operator op = ops::zero(cfg);
        bool started = false;
        for (const auto& [b, coeff] : piece.basis[0]) {
            Operator term = scale(coeff, kops[b]);
            op = started ? add(op, term) : term;
            started = true;
        }
        std::ostringstream lbl;
        lbl << "root(";
        for (std::size_t i = 0; i < space.root.size(); ++i) {
            if (i) lbl << ',';
            lbl << space.root[i];
        }
        lbl << ')';
        op.label = lbl.str();
        op.parity = -1;
        space.op = std::move(op);
        rs.roots.push_back(std::move(space));
    }
    int expected_roots = osp_mn_dimension(cfg) - (d + n);
    if (static_cast<int>(rs.roots.size()) != expected_roots)
        throw NoCartanConfig("root count mismatch: found " + std::to_string(rs.roots.size()) +
                             ", expected " + std::to_string(expected_roots));
    return rs;
}

std::vector<SingularVector> singular_vectors(const SpaceConfig& cfg,
                                             const std::vector<Element>& space) {
    std::vector<SingularVector> out;
    if (space.empty()) return out;
    RootSystem rs = build_root_system(cfg);
    auto raising = rs.positive_ops();

    // Shared coordinatization of all raising images.
    std::vector<std::vector<Element>> images(raising.size());
    std::set<TermKey> keys;
    for (std::size_t p = 0; p < raising.size(); ++p) {
        images[p].reserve(space.size());
        for (const auto& v : space) {
            images[p].push_back(raising[p](v));
            for (const auto& [k, c] : images[p].back().terms()) keys.insert(k);
        }
    }
    std::vector<TermKey> keyvec(keys.begin(), keys.end());
    std::map<TermKey, long> index;
    for (long i = 0; i < static_cast<long>(keyvec.size()); ++i) index.emplace(keyvec[i], i);
    const long nk = static_cast<long>(keyvec.size());

    std::vector<SparseVec> columns(space.size());
    for (std::size_t vi = 0; vi < space.size(); ++vi)
        for (std::size_t p = 0; p < raising.size(); ++p)
            for (const auto& [k, c] : images[p][vi].terms())
                columns[vi].emplace(static_cast<long>(p) * nk + index.at(k), c);

    auto combos = relation_kernel(columns);
    if (combos.empty()) return out;
    std::vector<Element> singular;
    for (const auto& combo : combos) {
        Element w;
        for (const auto& [i, c] : combo) w += space[i] * c;
        singular.push_back(std::move(w));
    }

    // Weight split: the Cartan action preserves the singular space.
    std::set<TermKey> wkeys;
    for (const auto& w : singular)
        for (const auto& [k, c] : w.terms()) wkeys.insert(k);
    std::vector<TermKey> wkeyvec(wkeys.begin(), wkeys.end());
    std::map<TermKey, long> windex;
    for (long i = 0; i < static_cast<long>(wkeyvec.size()); ++i) windex.emplace(wkeyvec[i], i);
    auto coords = [&](const Element& e) {
        SparseVec v;
        for (const auto& [k, c] : e.terms()) {
            auto it = windex.find(k);
            if (it == windex.end())
                throw NoCartanConfig("Cartan action does not preserve the singular space");
            v.emplace(it->second, c);
        }
        return v;
    };

    int bound = 2 * (cfg.d() + cfg.n + 4);
    for (const auto& v : space)
        for (const auto& [key, c] : v.terms())
            bound = std::max(bound, 2 * (key.p.degree() + key.s.lambda_degree() + 4));
    std::vector<Rational> candidates;
    for (int q = -bound; q <= bound; ++q) candidates.push_back(Rational(q, 2));

    struct WPiece {
        std::vector<Rational> values;
        std::vector<Element> basis;
    };
    std::vector<WPiece> pieces{{{}, singular}};
    for (const auto& h : rs.cartan) {
        std::vector<WPiece> next;
        for (auto& piece : pieces) {
            std::vector<SparseVec> base_coords, image_coords;
            for (const auto& w : piece.basis) {
                base_coords.push_back(coords(w));
                image_coords.push_back(coords(h(w)));
            }
            int found = 0;
            for (const auto& lambda : candidates) {
                std::vector<SparseVec> shifted;
                Scalar ls{Rational(-lambda)};
                for (std::size_t i = 0; i < piece.basis.size(); ++i) {
                    SparseVec u = image_coords[i];
                    sparse_axpy(u, ls, base_coords[i]);
                    shifted.push_back(std::move(u));
                }
                auto kc = relation_kernel(shifted);
                if (kc.empty()) continue;
                WPiece np;
                np.values = piece.values;
                np.values.push_back(lambda);
                for (const auto& combo : kc) {
                    Element w;
                    for (const auto& [i, c] : combo) w += piece.basis[i] * c;
                    np.basis.push_back(std::move(w));
                }
                found += static_cast<int>(np.basis.size());
                next.push_back(std::move(np));
            }
            if (found != static_cast<int>(piece.basis.size()))
                throw NoCartanConfig("singular space is not a sum of weight lines");
        }
        pieces = std::move(next);
    }

    for (auto& piece : pieces) {
        for (auto& w : piece.basis) {
            SingularVector sv;
            sv.vector = std::move(w);
            sv.weight.eps.assign(piece.values.begin(), piece.values.begin() + cfg.d());
            sv.weight.delta.assign(piece.values.begin() + cfg.d(), piece.values.end());
            out.push_back(std::move(sv));
        }
    }
    return out;
}

PiPowerResult pi_power_test(const SpaceConfig& cfg, int k_max) {
    PiPowerResult res;
    Operator pi1 = ops::Pi_op(cfg, 1);
    Element u = Element::unit(cfg);
    for (int k = 1; k <= k_max; ++k) {
        u = pi1(u);
        res.nonzero.push_back(!u.is_zero());
    }
    const int M = cfg.superdim();
    std::ostringstream detail;
    if (M > 0 || (M % 2 != 0)) {
        res.pass = std::all_of(res.nonzero.begin(), res.nonzero.end(), [](bool b) { return b; });
        detail << "expected all powers nonzero up to " << k_max;
    } else {
        int p = -M / 2;
        res.pass = true;
        for (int k = 1; k <= k_max; ++k) {
            bool expect = k <= 2 * p + 1;
            if (res.nonzero[k - 1] != expect) res.pass = false;
        }
        detail << "expected powers nonzero exactly up to " << 2 * p + 1;
    }
    res.detail = detail.str();
    return res;
}

int osp_dimension(int a, int b2) {
    int b = b2 / 2;
    return a * (a - 1) / 2 + b * (b2 + 1) + a * b2;
}

int howe_expected_dim(const SpaceConfig& cfg) {
    return osp_dimension(cfg.m + 4 * cfg.n, 2 * cfg.m + 2 * cfg.n);
}

HoweClosureResult howe_closure_check(const SpaceConfig& cfg, int d_cut, int q_cut,
                                     bool check_brackets) {
    HoweClosureResult res;
    res.expected = howe_expected_dim(cfg);
    auto gens = ops::howe_generators(cfg);

    auto rank_at = [&](int dc) {
        StackedOps stacked = make_stacked(cfg, dc, q_cut, 4, 4);
        Echelon ech;
        for (const auto& g : gens) ech.add(stacked.stack(cfg, g));
        return ech.rank();
    };

    StackedOps stacked = make_stacked(cfg, d_cut, q_cut, 4, 4);
    Echelon ech;
    std::vector<SparseVec> gvecs;
    gvecs.reserve(gens.size());
    for (const auto& g : gens) {
        gvecs.push_back(stacked.stack(cfg, g));
        ech.add(gvecs.back());
    }
    res.rank = ech.rank();
    res.rank_ok = res.rank == res.expected;
    if (!res.rank_ok) {
        res.failure = "generator span has rank " + std::to_string(res.rank) + ", expected " +
                      std::to_string(res.expected);
        return res;
    }
    int rank_next = rank_at(d_cut + 1);
    res.stable = rank_next == res.rank;
    if (!res.stable)
        throw RankUnstable("rank moved from " + std::to_string(res.rank) + " to " +
                           std::to_string(rank_next) + " when extending the cut");

    if (!check_brackets) {
        res.brackets_ok = true;
        return res;
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
            Operator br = bracket(gens[a], gens[b]);
            SparseVec v = stacked.stack(cfg, br);
            ++res.bracket_pairs;
            if (!ech.contains(v)) {
                res.failure = "bracket " + br.label + " escapes the generator span";
                return res;
            }
        }
    }
    res.brackets_ok = true;
    return res;
}

}  // namespace sdirac
