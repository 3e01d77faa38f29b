#pragma once

#include <string>

#include "ctc/circulant.hpp"
#include "ctc/coloring.hpp"

namespace ctc {

// Coloring files: {"n","a","b","palette","type","vertices","edges"} with
// edges as {"u","v","offset","color"} sorted by (u,v). Field order is fixed
// so identical inputs serialize to identical bytes.
std::string coloring_to_json(const circulant_graph& g, const total_coloring& c,
                             const std::string& type_label);

struct loaded_coloring {
    circulant_graph graph;
    total_coloring coloring;
};

// Throws format_error on malformed input (bad JSON, missing fields, wrong
// edge set, out-of-range colors).
loaded_coloring coloring_from_json(const std::string& text);

// Graph-only files: {"n","a","b","edges":[{"u","v","offset"}]}.
std::string graph_to_json(const circulant_graph& g);

// DOT graph with vertex colors as node attributes and edge colors (plus the
// generating offset) as edge attributes.
std::string coloring_to_dot(const circulant_graph& g, const total_coloring& c);

} // namespace ctc
