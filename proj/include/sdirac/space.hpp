#pragma once

#include <string>

#include "sdirac/errors.hpp"

namespace sdirac {

/// Parameters of the graded space with m commuting and 2n anticommuting
/// coordinates, together with the orthosymplectic metric
///
///     g = [ I_m   0   ]           J = [  0   I_n ]
///         [  0   J_2n ],              [ -I_n  0  ].
///
/// Variable indices are 1-based throughout: 1..m are bosonic, m+1..m+2n
/// fermionic. grade(j) is 0 for bosonic and 1 for fermionic indices.
struct SpaceConfig {
    int m = 3;
    int n = 1;

    SpaceConfig() = default;
    SpaceConfig(int m_, int n_) : m(m_), n(n_) {
        if (m < 0 || n < 0) throw IndexOutOfRange("SpaceConfig: negative dimensions");
    }

    int dims() const { return m + 2 * n; }
    int d() const { return m / 2; }          // number of theta generators
    int superdim() const { return m - 2 * n; }  // M, replaces m in all identities

    int grade(int j) const {
        check_index(j);
        return j <= m ? 0 : 1;
    }

    /// Metric entry g_{jk} in {-1, 0, 1}.
    int metric(int j, int k) const {
        check_index(j);
        check_index(k);
        if (j <= m || k <= m) return j == k && j <= m ? 1 : 0;
        if (k == j + n) return 1;   // g_{m+i, m+n+i}
        if (j == k + n) return -1;  // g_{m+n+i, m+i}
        return 0;
    }

    /// The unique k with g_{jk} != 0, i.e. the index pairing of the metric.
    int metric_partner(int j) const {
        check_index(j);
        if (j <= m) return j;
        return j <= m + n ? j + n : j - n;
    }

    void check_index(int j) const {
        if (j < 1 || j > m + 2 * n)
            throw IndexOutOfRange("variable index " + std::to_string(j) + " outside 1.." +
                                  std::to_string(m + 2 * n));
    }

    bool operator==(const SpaceConfig&) const = default;
};

/// Metric of the conformal algebra: indices -1, 0, 1..m+2n with
/// h_{-1,-1} = -1, h_{0,0} = 1 and h = g on positive indices.
/// Indices -1 and 0 are bosonic.
inline int conformal_metric(const SpaceConfig& cfg, int a, int b) {
    if (a == -1 || b == -1) return a == b ? -1 : 0;
    if (a == 0 || b == 0) return a == b ? 1 : 0;
    return cfg.metric(a, b);
}

inline int conformal_grade(const SpaceConfig& cfg, int a) { return a <= 0 ? 0 : cfg.grade(a); }

}  // namespace sdirac
