// Total-coloring verification. verify() scans elements in parallel and emits
// every conflict (never fail-fast), so a sweep can report how badly a broken
// construction fails. verify_reference() is the serial quadratic comparator:
// it walks all element pairs and re-derives adjacency from modular arithmetic
// alone, sharing no incidence machinery with the fast path.

#include "ctc/verifier.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctc {

namespace {

void check_total(const circulant_graph& g, const total_coloring& c) {
    if (static_cast<int>(c.vertex_colors.size()) != g.n ||
        c.edge_colors.size() != g.edges.size())
        throw coverage_error("coloring does not cover the graph (n = " + std::to_string(g.n) +
                             ")");
    for (int col : c.vertex_colors)
        if (col < 0 || col >= c.palette_size)
            throw coverage_error("vertex color outside the palette");
    for (int col : c.edge_colors)
        if (col < 0 || col >= c.palette_size)
            throw coverage_error("edge color outside the palette");
}

void sort_conflicts(std::vector<conflict>& cs) {
    std::sort(cs.begin(), cs.end(), [](const conflict& x, const conflict& y) {
        return std::tuple{static_cast<int>(x.kind), x.first, x.second, x.color} <
               std::tuple{static_cast<int>(y.kind), y.first, y.second, y.color};
    });
}

int colors_used_in(const total_coloring& c) {
    std::vector<char> seen(static_cast<std::size_t>(c.palette_size), 0);
    int used = 0;
    for (int col : c.vertex_colors)
        if (!seen[col]) { seen[col] = 1; ++used; }
    for (int col : c.edge_colors)
        if (!seen[col]) { seen[col] = 1; ++used; }
    return used;
}

} // namespace

verification_report verify(const circulant_graph& g, const total_coloring& c) {
    check_total(g, c);

    const int m = static_cast<int>(g.edges.size());

    // Per-edge flags: endpoint clash, edge-vs-u, edge-vs-v.
    std::vector<std::uint8_t> edge_flags(m, 0);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < m; ++e) {
        const edge& ed = g.edges[e];
        std::uint8_t f = 0;
        if (c.vertex_colors[ed.u] == c.vertex_colors[ed.v]) f |= 1;
        if (c.edge_colors[e] == c.vertex_colors[ed.u]) f |= 2;
        if (c.edge_colors[e] == c.vertex_colors[ed.v]) f |= 4;
        edge_flags[e] = f;
    }

    // Per-vertex bitmask over the 6 incident-edge pairs (p,q), p < q.
    std::vector<std::uint8_t> pair_mask(g.n, 0);
#pragma omp parallel for schedule(static)
    for (int v = 0; v < g.n; ++v) {
        std::uint8_t mask = 0;
        int bit = 0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q, ++bit)
                if (c.edge_colors[g.incident[v][p]] == c.edge_colors[g.incident[v][q]])
                    mask |= static_cast<std::uint8_t>(1u << bit);
        pair_mask[v] = mask;
    }

    verification_report report;
    for (int e = 0; e < m; ++e)
        if (edge_flags[e] & 1)
            report.conflicts.push_back({conflict_kind::vertex_vertex, g.edges[e].u,
                                        g.edges[e].v, c.vertex_colors[g.edges[e].u]});
    for (int v = 0; v < g.n; ++v) {
        if (!pair_mask[v]) continue;
        int bit = 0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q, ++bit)
                if (pair_mask[v] & (1u << bit)) {
                    int e1 = g.incident[v][p];
                    int e2 = g.incident[v][q];
                    report.conflicts.push_back({conflict_kind::edge_edge, std::min(e1, e2),
                                                std::max(e1, e2), c.edge_colors[e1]});
                }
    }
    for (int e = 0; e < m; ++e) {
        if (edge_flags[e] & 2)
            report.conflicts.push_back(
                {conflict_kind::vertex_edge, g.edges[e].u, e, c.edge_colors[e]});
        if (edge_flags[e] & 4)
            report.conflicts.push_back(
                {conflict_kind::vertex_edge, g.edges[e].v, e, c.edge_colors[e]});
    }

    sort_conflicts(report.conflicts);
    report.valid = report.conflicts.empty();
    report.colors_used = colors_used_in(c);
    return report;
}

verification_report verify_reference(const circulant_graph& g, const total_coloring& c) {
    check_total(g, c);

    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    auto vertices_adjacent = [&](int u, int v) {
        int d = ((u - v) % n + n) % n;
        return d == g.a || d == n - g.a || d == g.b || d == n - g.b;
    };

    verification_report report;
    // Elements 0..n-1 are vertices, n..n+m-1 are edges; every unordered pair.
    const int total = n + m;
    for (int x = 0; x < total; ++x) {
        for (int y = x + 1; y < total; ++y) {
            if (x < n && y < n) {
                if (vertices_adjacent(x, y) && c.vertex_colors[x] == c.vertex_colors[y])
                    report.conflicts.push_back(
                        {conflict_kind::vertex_vertex, x, y, c.vertex_colors[x]});
            } else if (x < n && y >= n) {
                const edge& ed = g.edges[y - n];
                if ((ed.u == x || ed.v == x) && c.edge_colors[y - n] == c.vertex_colors[x])
                    report.conflicts.push_back(
                        {conflict_kind::vertex_edge, x, y - n, c.edge_colors[y - n]});
            } else {
                const edge& e1 = g.edges[x - n];
                const edge& e2 = g.edges[y - n];
                bool share = e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v;
                if (share && c.edge_colors[x - n] == c.edge_colors[y - n])
                    report.conflicts.push_back(
                        {conflict_kind::edge_edge, x - n, y - n, c.edge_colors[x - n]});
            }
        }
    }

    sort_conflicts(report.conflicts);
    report.valid = report.conflicts.empty();
    report.colors_used = colors_used_in(c);
    return report;
}

graph_type classify(const circulant_graph& g, const total_coloring& c) {
    verification_report report = verify(g, c);
    if (!report.valid) return graph_type::invalid;
    if (report.colors_used <= 5) return graph_type::type_i;
    if (report.colors_used == 6) return graph_type::type_ii;
    return graph_type::invalid;
}

std::vector<int> missing_colors(const circulant_graph& g, const partial_coloring& c, int i) {
    if (i < 0 || i >= g.n)
        throw index_error("vertex " + std::to_string(i) + " out of range for n = " +
                          std::to_string(g.n));
    std::vector<char> taken(static_cast<std::size_t>(c.palette_size), 0);
    if (c.vertex_colors[i] >= 0) taken[c.vertex_colors[i]] = 1;
    for (int e : g.incident[i])
        if (c.edge_colors[e] >= 0) taken[c.edge_colors[e]] = 1;
    std::vector<int> missing;
    for (int col = 0; col < c.palette_size; ++col)
        if (!taken[col]) missing.push_back(col);
    return missing;
}

} // namespace ctc
