#include "sdirac/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace sdirac {

namespace {

void compositions(int total, int parts, std::vector<int>& cur, int pos,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == parts - 1) {
        cur[pos] = total;
        emit(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur[pos] = v;
        compositions(total - v, parts, cur, pos + 1, emit);
    }
}

}  // namespace

std::vector<PolyMonomial> poly_basis(const SpaceConfig& cfg, int k) {
    std::vector<PolyMonomial> out;
    int nf = 2 * cfg.n;
    for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
        int fdeg = std::popcount(mask);
        if (fdeg > k) continue;
        int bdeg = k - fdeg;
        if (cfg.m == 0) {
            if (bdeg == 0) out.push_back({{}, mask});
            continue;
        }
        std::vector<int> cur(cfg.m, 0);
        compositions(bdeg, cfg.m, cur, 0,
                     [&](const std::vector<int>& bos) { out.push_back({bos, mask}); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PolyMonomial> poly_basis_range(const SpaceConfig& cfg, int klo, int khi) {
    std::vector<PolyMonomial> out;
    for (int k = std::max(klo, 0); k <= khi; ++k) {
        auto b = poly_basis(cfg, k);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::vector<SpinorMonomial> spinor_basis(const SpaceConfig& cfg, int Q) {
    std::vector<SpinorMonomial> out;
    if (Q < 0) return out;
    int d = cfg.d();
    for (std::uint32_t th = 0; th < (1u << d); ++th) {
        if (cfg.n == 0) {
            out.push_back({th, {}});
            continue;
        }
        for (int tq = 0; tq <= Q; ++tq) {
            std::vector<int> cur(cfg.n, 0);
            compositions(tq, cfg.n, cur, 0,
                         [&](const std::vector<int>& t) { out.push_back({th, t}); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TermKey> block_basis(const SpaceConfig& cfg, int k, int Q,
                                 std::optional<int> chirality) {
    std::vector<TermKey> out;
    auto ps = poly_basis(cfg, k);
    auto ss = spinor_basis(cfg, Q);
    for (const auto& p : ps)
        for (const auto& s : ss) {
            if (chirality && s.chirality() != *chirality) continue;
            out.push_back({p, s});
        }
    return out;
}

std::vector<TermKey> block_basis_range(const SpaceConfig& cfg, int klo, int khi, int Q,
                                       std::optional<int> chirality) {
    std::vector<TermKey> out;
    for (int k = std::max(klo, 0); k <= khi; ++k) {
        auto b = block_basis(cfg, k, Q, chirality);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t poly_dim(const SpaceConfig& cfg, int k) {
    if (cfg.m == 0) return binomial(2 * cfg.n, k);  // purely odd variables
    std::uint64_t total = 0;
    for (int j = 0; j <= std::min(k, 2 * cfg.n); ++j)
        total += binomial(2 * cfg.n, j) * binomial(k - j + cfg.m - 1, cfg.m - 1);
    return total;
}

std::uint64_t spinor_dim(const SpaceConfig& cfg, int Q) {
    return (std::uint64_t{1} << cfg.d()) * binomial(Q + cfg.n, cfg.n);
}

void dump_poly_basis_csv(const SpaceConfig& cfg, const std::vector<PolyMonomial>& basis,
                         std::ostream& os) {
    for (int i = 1; i <= cfg.m; ++i) os << 'x' << i << (i < cfg.m || cfg.n ? "," : "");
    for (int i = 1; i <= 2 * cfg.n; ++i) os << "xf" << i << (i < 2 * cfg.n ? "," : "");
    os << '\n';
    for (const auto& p : basis) {
        for (int i = 0; i < cfg.m; ++i) os << p.bos[i] << (i + 1 < cfg.m || cfg.n ? "," : "");
        for (int i = 1; i <= 2 * cfg.n; ++i) os << (p.has_fermion(i) ? 1 : 0) << (i < 2 * cfg.n ? "," : "");
        os << '\n';
    }
}

void dump_spinor_basis_csv(const SpaceConfig& cfg, const std::vector<SpinorMonomial>& basis,
                           std::ostream& os) {
    int d = cfg.d();
    for (int j = 1; j <= d; ++j) os << "th" << j << (j < d || cfg.n ? "," : "");
    for (int i = 1; i <= cfg.n; ++i) os << 't' << i << (i < cfg.n ? "," : "");
    os << '\n';
    for (const auto& s : basis) {
        for (int j = 1; j <= d; ++j) os << (s.has_theta(j) ? 1 : 0) << (j < d || cfg.n ? "," : "");
        for (int i = 0; i < cfg.n; ++i) os << s.t[i] << (i + 1 < cfg.n ? "," : "");
        os << '\n';
    }
}

}  // namespace sdirac
