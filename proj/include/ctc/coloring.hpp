#pragma once

#include <vector>

#include "ctc/circulant.hpp"

namespace ctc {

// A total map V u E -> {0..palette_size-1}. Edge colors are indexed by the
// canonical edge index of circulant_graph::edges.
struct total_coloring {
    int palette_size = 0;
    std::vector<int> vertex_colors; // size n
    std::vector<int> edge_colors;   // size 2n
};

// Builder state while a construction is being assembled; -1 marks unassigned.
// Kept distinct from total_coloring so verify() never sees partial input.
struct partial_coloring {
    int palette_size = 0;
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;

    static partial_coloring empty(const circulant_graph& g, int palette_size);

    bool total() const;

    // Throws coverage_error when any element is unassigned or out of range.
    total_coloring finalize() const;
};

// Number of distinct colors actually present.
int count_colors_used(const total_coloring& c);

} // namespace ctc
