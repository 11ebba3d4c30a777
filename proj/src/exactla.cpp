#include "sdirac/exactla.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace sdirac {

void sparse_axpy(SparseVec& target, const Scalar& c, const SparseVec& src) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : src) {
        auto [it, inserted] = target.try_emplace(i, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    for (const auto& [i, v] : a) r.emplace(i, v * c);
    return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
    // Single forward sweep: eliminating index i only touches indices >= i,
    // so later insertions are still visited.
    for (auto it = v.begin(); it != v.end();) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        long idx = it->first;
        Scalar c = -it->second;
        sparse_axpy(v, c, row->second);
        it = v.upper_bound(idx);
    }
    return v;
}

bool Echelon::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    v = sparse_scale(v, v.begin()->second.inverse());
    long lead = v.begin()->first;
    for (auto& [l, row] : rows_) {
        auto it = row.find(lead);
        if (it == row.end()) continue;
        Scalar c = -it->second;
        sparse_axpy(row, c, v);
    }
    rows_.emplace(lead, std::move(v));
    return true;
}

BlockMatrix block_matrix(const SpaceConfig& cfg, const Operator& a, std::vector<TermKey> domain,
                         int k_lo, int k_hi, int q) {
    BlockMatrix b;
    b.domain = std::move(domain);
    int cod_lo = std::max(0, k_lo + a.poly_lo);
    int cod_hi = k_hi + a.poly_hi;
    int cod_q = q + std::max(a.t_hi, 0);
    b.codomain = block_basis_range(cfg, cod_lo, cod_hi, cod_q);
    for (long i = 0; i < static_cast<long>(b.codomain.size()); ++i)
        b.codomain_index.emplace(b.codomain[i], i);
    b.columns.reserve(b.domain.size());
    for (const auto& key : b.domain) {
        Element img = a(Element::monomial(key));
        SparseVec col;
        for (const auto& [tk, c] : img.terms()) {
            auto it = b.codomain_index.find(tk);
            if (it == b.codomain_index.end())
                throw UnboundedShift("image of " + tk.str(cfg) + " under " + a.label +
                                     " escapes the declared codomain");
            col.emplace(it->second, c);
        }
        b.columns.push_back(std::move(col));
    }
    return b;
}

BlockMatrix block_matrix(const SpaceConfig& cfg, const Operator& a, int k, int q,
                         std::optional<int> chirality) {
    return block_matrix(cfg, a, block_basis(cfg, k, q, chirality), k, k, q);
}

std::vector<SparseVec> kernel_basis(const BlockMatrix& b) {
    // Augment each column with a tag coordinate and eliminate on the image
    // block; vectors whose image part empties out are kernel combinations.
    const long nrows = b.rows();
    Echelon ech;
    std::vector<SparseVec> kernel;
    for (long j = 0; j < b.cols(); ++j) {
        SparseVec v = b.columns[j];
        v.emplace(nrows + j, Scalar(1));
        while (!v.empty() && v.begin()->first < nrows) {
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

std::vector<Element> kernel_elements(const BlockMatrix& b) {
    std::vector<Element> out;
    for (const auto& kv : kernel_basis(b)) {
        Element e;
        for (const auto& [i, c] : kv) e.add(b.domain[i], c);
        out.push_back(std::move(e));
    }
    return out;
}

long rank(const BlockMatrix& b) {
    Echelon ech;
    for (const auto& col : b.columns) ech.add(col);
    return ech.rank();
}

std::vector<Element> image_elements(const BlockMatrix& b) {
    Echelon ech;
    for (const auto& col : b.columns) ech.add(col);
    std::vector<Element> out;
    for (const auto& [lead, row] : ech.rows()) {
        Element e;
        for (const auto& [i, c] : row) e.add(b.codomain[i], c);
        out.push_back(std::move(e));
    }
    return out;
}

void BlockMatrix::to_csv(std::ostream& os, const SpaceConfig& cfg) const {
    os << "row_monomial";
    for (const auto& d : domain) os << ',' << d.str(cfg);
    os << '\n';
    for (long i = 0; i < rows(); ++i) {
        os << codomain[i].str(cfg);
        for (long j = 0; j < cols(); ++j) {
            os << ',';
            auto it = columns[j].find(i);
            if (it != columns[j].end()) {
                auto t = it->second.tuple4();
                os << t[0] << ';' << t[1] << ';' << t[2] << ';' << t[3];
            } else {
                os << "0/1;0/1;0/1;0/1";
            }
        }
        os << '\n';
    }
}

ElementSpan::ElementSpan(const std::vector<Element>& vectors) {
    std::set<TermKey> keys;
    for (const Element& e : vectors)
        for (const auto& [k, c] : e.terms()) keys.insert(k);
    keys_.assign(keys.begin(), keys.end());
    for (long i = 0; i < static_cast<long>(keys_.size()); ++i) index_.emplace(keys_[i], i);
    for (const Element& e : vectors) {
        bool ok = true;
        ech_.add(coords(e, &ok));
    }
}

SparseVec ElementSpan::coords(const Element& e, bool* ok) const {
    SparseVec v;
    for (const auto& [k, c] : e.terms()) {
        auto it = index_.find(k);
        if (it == index_.end()) {
            *ok = false;
            return {};
        }
        v.emplace(it->second, c);
    }
    *ok = true;
    return v;
}

bool ElementSpan::contains(const Element& v) const {
    if (v.is_zero()) return true;
    bool ok = true;
    SparseVec c = coords(v, &ok);
    // a term outside the span's support cannot be reached
    return ok && ech_.contains(c);
}

bool ElementSpan::contains_all(const std::vector<Element>& vs) const {
    return std::all_of(vs.begin(), vs.end(), [this](const Element& v) { return contains(v); });
}

std::vector<Element> ElementSpan::basis() const {
    std::vector<Element> out;
    for (const auto& [lead, row] : ech_.rows()) {
        Element e;
        for (const auto& [i, c] : row) e.add(keys_[i], c);
        out.push_back(std::move(e));
    }
    return out;
}

ElementSpan intersect(const ElementSpan& a, const ElementSpan& b) {
    // Zassenhaus: rows [u | u] for u in a, [w | 0] for w in b; rows whose
    // left block eliminates to zero have right block spanning a cap b.
    std::vector<Element> avec = a.basis(), bvec = b.basis();
    std::set<TermKey> keys;
    for (const auto& e : avec)
        for (const auto& [k, c] : e.terms()) keys.insert(k);
    for (const auto& e : bvec)
        for (const auto& [k, c] : e.terms()) keys.insert(k);
    std::vector<TermKey> keyvec(keys.begin(), keys.end());
    std::map<TermKey, long> index;
    for (long i = 0; i < static_cast<long>(keyvec.size()); ++i) index.emplace(keyvec[i], i);
    const long N = static_cast<long>(keyvec.size());

    Echelon left;
    std::vector<SparseVec> captured;
    auto feed = [&](const Element& e, bool mirror) {
        SparseVec v;
        for (const auto& [k, c] : e.terms()) {
            long i = index.at(k);
            v.emplace(i, c);
            if (mirror) v.emplace(i + N, c);
        }
        while (!v.empty() && v.begin()->first < N) {
            auto row = left.rows().find(v.begin()->first);
            if (row == left.rows().end()) break;
            sparse_axpy(v, -v.begin()->second, row->second);
        }
        if (v.empty()) return;
        if (v.begin()->first >= N)
            captured.push_back(std::move(v));
        else
            left.add(std::move(v));
    };
    for (const auto& e : avec) feed(e, true);
    for (const auto& e : bvec) feed(e, false);

    std::vector<Element> inter;
    for (const auto& v : captured) {
        Element e;
        for (const auto& [i, c] : v) e.add(keyvec[i - N], c);
        inter.push_back(std::move(e));
    }
    return ElementSpan(inter);
}

}  // namespace sdirac
