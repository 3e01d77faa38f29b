#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ctc/errors.hpp"

namespace ctc {

enum class offset_class : std::uint8_t { a = 0, b = 1 };

// Undirected edge stored canonically with u < v. offset records which of the
// two generators produced it, so a map on edges has no orientation ambiguity.
struct edge {
    int u;
    int v;
    offset_class offset;
};

// The 4-regular circulant graph C_n(a,b), 1 <= a < b <= (n-1)/2, n >= 5.
// Vertices are 0..n-1; vertex i is adjacent to (i +- a) and (i +- b) mod n.
// Immutable after build(); safe to share across threads.
struct circulant_graph {
    int n = 0;
    int a = 0;
    int b = 0;
    std::vector<edge> edges;                  // exactly 2n, sorted by (u,v)
    std::vector<std::array<int, 4>> incident; // per-vertex edge indices, ascending

    int offset_value(offset_class c) const { return c == offset_class::a ? a : b; }
};

// Validates the bounds and constructs the graph. Throws parameter_error when
// (n,a,b) is not a simple 4-regular instance of the family.
circulant_graph build(int n, int a, int b);

// The four distinct neighbours of vertex i, ascending. Throws index_error.
std::array<int, 4> neighbors(const circulant_graph& g, int i);

// Canonical edge index of {u,v}, or -1 when u,v are not adjacent.
int edge_index(const circulant_graph& g, int u, int v);

// The offset-d edges of C_n(a,b) split into gcd(n,d) disjoint cycles of
// length n/gcd(n,d); cycle s starts at vertex s and steps by +d.
struct cycle_decomposition {
    int offset = 0;
    int cycle_count = 0;
    int cycle_length = 0;
    std::vector<std::vector<int>> cycles;
};

// offset must be one of g.a, g.b.
cycle_decomposition decompose_cycles(const circulant_graph& g, int offset);

// Maps raw offsets 1 <= a,b <= n-1 onto the representative pair inside the
// canonical bound: each offset is folded to min(d, n-d), then the pair is
// sorted ascending. The four parameterizations (a,b), (b,a), (n-a,b), (a,n-b)
// all describe the same edge set and fold to the same pair.
// Throws parameter_error when the folded offsets coincide (a = +-b mod n),
// when an offset is 0 mod n, or when an offset equals n/2.
std::pair<int, int> canonical_params(int n, int a, int b);

} // namespace ctc
