// Test-only oracles, deliberately independent of the library's own
// algorithms: girth by edge-deletion distance, diameter by
// Floyd-Warshall, and determinants of polynomial matrices by fraction-free
// elimination (used to evaluate the Ihara-Bass product without touching
// the Faddeev-LeVerrier path under test).
#ifndef GWALK_TESTS_ORACLES_HPP
#define GWALK_TESTS_ORACLES_HPP

#include "gwalk/graph.hpp"
#include "gwalk/poly.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

namespace gwalk::testing {

// Shortest u-v distance avoiding one forbidden edge (BFS).
inline int distance_avoiding_edge(const Graph& g, int src, int dst, int skip_u, int skip_v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == dst)
            return dist[u];
        for (int a : g.out_arcs(u)) {
            const int v = g.terminus(a);
            if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u))
                continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return -1;
}

// Girth as min over edges of (shortest cycle through that edge): delete
// the edge, measure the endpoint distance, add one.
inline std::optional<int> girth_oracle(const Graph& g) {
    std::optional<int> best;
    for (auto [u, v] : g.edge_list()) {
        const int d = distance_avoiding_edge(g, u, v, u, v);
        if (d >= 0 && (!best || d + 1 < *best))
            best = d + 1;
    }
    return best;
}

inline std::optional<int> diameter_oracle(const Graph& g) {
    const int n = g.vertex_count();
    constexpr int kInf = 1 << 28;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
    for (int v = 0; v < n; ++v)
        dist[v][v] = 0;
    for (auto [u, v] : g.edge_list())
        dist[u][v] = dist[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (dist[i][j] >= kInf)
                return std::nullopt;
            best = std::max(best, dist[i][j]);
        }
    return best;
}

// Determinant of a square IntPoly matrix by Bareiss elimination with row
// pivoting; every interior division is exact over Z[u].
inline IntPoly poly_det_bareiss(std::vector<std::vector<IntPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return IntPoly{1};
    IntPoly prev = IntPoly{1};
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == n)
                return IntPoly{};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev);
            }
            m[i][k] = IntPoly{};
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// The Ihara-Bass product (1-u^2)^(E-V) * det(I - u M + (k-1) u^2 I) for a
// k-regular graph, via the polynomial-matrix determinant above.
inline IntPoly ihara_bass_product(const Graph& g, int k) {
    const int nv = g.vertex_count();
    const IntPoly u{0, 1};
    const IntPoly diag = IntPoly{1} + IntPoly{0, 0, 1}.scaled(Int(k - 1));
    std::vector<std::vector<IntPoly>> m(nv, std::vector<IntPoly>(nv));
    for (int i = 0; i < nv; ++i)
        m[i][i] = diag;
    for (auto [a, b] : g.edge_list()) {
        m[a][b] = m[a][b] - u;
        m[b][a] = m[b][a] - u;
    }
    IntPoly det = poly_det_bareiss(std::move(m));
    const IntPoly one_minus_u2{1, 0, -1};
    const int exponent = g.edge_count() - nv;
    for (int i = 0; i < exponent; ++i)
        det *= one_minus_u2;
    return det;
}

} // namespace gwalk::testing

#endif
