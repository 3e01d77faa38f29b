#include "ctc/coloring.hpp"

#include <string>

namespace ctc {

partial_coloring partial_coloring::empty(const circulant_graph& g, int palette_size) {
    partial_coloring p;
    p.palette_size = palette_size;
    p.vertex_colors.assign(g.n, -1);
    p.edge_colors.assign(g.edges.size(), -1);
    return p;
}

bool partial_coloring::total() const {
    for (int c : vertex_colors)
        if (c < 0) return false;
    for (int c : edge_colors)
        if (c < 0) return false;
    return true;
}

total_coloring partial_coloring::finalize() const {
    auto check = [this](const std::vector<int>& xs, const char* what) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] < 0)
                throw coverage_error(std::string(what) + " " + std::to_string(i) +
                                     " is unassigned");
            if (xs[i] >= palette_size)
                throw coverage_error(std::string(what) + " " + std::to_string(i) +
                                     " exceeds the palette");
        }
    };
    check(vertex_colors, "vertex");
    check(edge_colors, "edge");
    return total_coloring{palette_size, vertex_colors, edge_colors};
}

int count_colors_used(const total_coloring& c) {
    std::vector<char> seen(static_cast<std::size_t>(c.palette_size), 0);
    int used = 0;
    auto mark = [&](int col) {
        if (col >= 0 && col < c.palette_size && !seen[col]) {
            seen[col] = 1;
            ++used;
        }
    };
    for (int col : c.vertex_colors) mark(col);
    for (int col : c.edge_colors) mark(col);
    return used;
}

} // namespace ctc
