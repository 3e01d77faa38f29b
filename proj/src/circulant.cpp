#include "ctc/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ctc {

namespace {

std::string params_str(int n, int a, int b) {
    return "C_" + std::to_string(n) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

circulant_graph build(int n, int a, int b) {
    if (n < 5)
        throw parameter_error("vertex count must be at least 5, got " + std::to_string(n));
    if (!(1 <= a && a < b && b <= (n - 1) / 2))
        throw parameter_error(params_str(n, a, b) +
                              ": offsets must satisfy 1 <= a < b <= (n-1)/2");

    circulant_graph g;
    g.n = n;
    g.a = a;
    g.b = b;
    g.edges.reserve(2 * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (offset_class c : {offset_class::a, offset_class::b}) {
            int v = (u + g.offset_value(c)) % n;
            g.edges.push_back({std::min(u, v), std::max(u, v), c});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const edge& x, const edge& y) {
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });

    g.incident.assign(n, {-1, -1, -1, -1});
    std::vector<int> fill(n, 0);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        g.incident[g.edges[e].u][fill[g.edges[e].u]++] = e;
        g.incident[g.edges[e].v][fill[g.edges[e].v]++] = e;
    }
    return g;
}

std::array<int, 4> neighbors(const circulant_graph& g, int i) {
    if (i < 0 || i >= g.n)
        throw index_error("vertex " + std::to_string(i) + " out of range for n = " +
                          std::to_string(g.n));
    std::array<int, 4> nb = {(i + g.a) % g.n, (i - g.a + g.n) % g.n,
                             (i + g.b) % g.n, (i - g.b + g.n) % g.n};
    std::sort(nb.begin(), nb.end());
    return nb;
}

int edge_index(const circulant_graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.n || u == v) return -1;
    for (int e : g.incident[u])
        if (g.edges[e].u == u && g.edges[e].v == v) return e;
    return -1;
}

cycle_decomposition decompose_cycles(const circulant_graph& g, int offset) {
    if (offset != g.a && offset != g.b)
        throw parameter_error("offset " + std::to_string(offset) + " is not a generator of " +
                              params_str(g.n, g.a, g.b));
    cycle_decomposition d;
    d.offset = offset;
    d.cycle_count = std::gcd(g.n, offset);
    d.cycle_length = g.n / d.cycle_count;
    d.cycles.resize(d.cycle_count);
    for (int s = 0; s < d.cycle_count; ++s) {
        d.cycles[s].reserve(d.cycle_length);
        int v = s;
        for (int t = 0; t < d.cycle_length; ++t) {
            d.cycles[s].push_back(v);
            v = (v + offset) % g.n;
        }
    }
    return d;
}

std::pair<int, int> canonical_params(int n, int a, int b) {
    if (n < 5)
        throw parameter_error("vertex count must be at least 5, got " + std::to_string(n));
    if (a < 1 || a > n - 1 || b < 1 || b > n - 1)
        throw parameter_error(params_str(n, a, b) + ": offsets must lie in 1..n-1");
    int fa = std::min(a, n - a);
    int fb = std::min(b, n - b);
    if (2 * fa == n || 2 * fb == n)
        throw parameter_error(params_str(n, a, b) +
                              ": offset n/2 gives a matching, not a cycle class");
    if (fa == fb)
        throw parameter_error(params_str(n, a, b) + ": offsets coincide (a = +-b mod n)");
    if (fa > fb) std::swap(fa, fb);
    return {fa, fb};
}

} // namespace ctc
