#pragma once

#include <cstdint>
#include <vector>

#include "ctc/circulant.hpp"
#include "ctc/coloring.hpp"

namespace ctc {

enum class conflict_kind : std::uint8_t {
    vertex_vertex = 0, // adjacent vertices share a color
    edge_edge = 1,     // incident edges share a color
    vertex_edge = 2,   // an edge shares a color with one of its endpoints
};

// One violation of the total-coloring rules, re-checkable in isolation.
// Element ids: vertex_vertex -> two vertex ids; edge_edge -> two canonical
// edge indices; vertex_edge -> (vertex id, edge index).
struct conflict {
    conflict_kind kind;
    int first;
    int second;
    int color;

    friend bool operator==(const conflict&, const conflict&) = default;
};

struct verification_report {
    bool valid = false;
    int colors_used = 0;
    std::vector<conflict> conflicts; // sorted by (kind, first, second)
};

// Exhaustive conflict scan (never fail-fast). The per-element scans run under
// OpenMP; the report is deterministic regardless of thread count.
// Throws coverage_error when c is not total or carries out-of-range colors.
verification_report verify(const circulant_graph& g, const total_coloring& c);

// Serial reference: quadratic over all element pairs with adjacency recomputed
// from modular arithmetic alone (no use of the prebuilt incidence structure).
// Kept as the independent oracle for verify().
verification_report verify_reference(const circulant_graph& g, const total_coloring& c);

enum class graph_type : std::uint8_t { type_i, type_ii, invalid };

// type_i when valid with at most 5 colors, type_ii when valid with exactly 6,
// invalid otherwise (including valid colorings that use more than 6 colors).
graph_type classify(const circulant_graph& g, const total_coloring& c);

// Palette colors absent from vertex i's closed star (the vertex itself plus
// its assigned incident edges) under a partial coloring. Ascending.
std::vector<int> missing_colors(const circulant_graph& g, const partial_coloring& c, int i);

} // namespace ctc
