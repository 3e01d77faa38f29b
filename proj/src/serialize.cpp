#include "ctc/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace ctc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edge_to_json(const circulant_graph& g, int e, const total_coloring* c) {
    const edge& ed = g.edges[e];
    ordered_json j;
    j["u"] = ed.u;
    j["v"] = ed.v;
    j["offset"] = g.offset_value(ed.offset);
    if (c) j["color"] = c->edge_colors[e];
    return j;
}

} // namespace

std::string coloring_to_json(const circulant_graph& g, const total_coloring& c,
                             const std::string& type_label) {
    ordered_json j;
    j["n"] = g.n;
    j["a"] = g.a;
    j["b"] = g.b;
    j["palette"] = c.palette_size;
    if (!type_label.empty()) j["type"] = type_label;
    j["vertices"] = c.vertex_colors;
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        edges.push_back(edge_to_json(g, e, &c));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

std::string graph_to_json(const circulant_graph& g) {
    ordered_json j;
    j["n"] = g.n;
    j["a"] = g.a;
    j["b"] = g.b;
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        edges.push_back(edge_to_json(g, e, nullptr));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

loaded_coloring coloring_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("not valid JSON: ") + e.what());
    }

    try {
        const int n = j.at("n").get<int>();
        const int a = j.at("a").get<int>();
        const int b = j.at("b").get<int>();
        const int palette = j.at("palette").get<int>();

        circulant_graph g;
        try {
            g = build(n, a, b);
        } catch (const parameter_error& e) {
            throw format_error(std::string("bad graph parameters: ") + e.what());
        }
        if (palette < 1) throw format_error("palette must be positive");

        total_coloring c;
        c.palette_size = palette;
        c.vertex_colors = j.at("vertices").get<std::vector<int>>();
        if (static_cast<int>(c.vertex_colors.size()) != n)
            throw format_error("vertex color list must have n entries");
        for (int col : c.vertex_colors)
            if (col < 0 || col >= palette) throw format_error("vertex color outside palette");

        const auto& edges = j.at("edges");
        if (!edges.is_array() || edges.size() != g.edges.size())
            throw format_error("edge list must have exactly 2n entries");
        c.edge_colors.assign(g.edges.size(), -1);
        for (const auto& item : edges) {
            const int u = item.at("u").get<int>();
            const int v = item.at("v").get<int>();
            const int off = item.at("offset").get<int>();
            const int col = item.at("color").get<int>();
            int e = edge_index(g, u, v);
            if (e < 0) throw format_error("edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") is not in the graph");
            if (off != g.offset_value(g.edges[e].offset))
                throw format_error("edge offset tag does not match the graph");
            if (col < 0 || col >= palette) throw format_error("edge color outside palette");
            if (c.edge_colors[e] >= 0) throw format_error("duplicate edge entry");
            c.edge_colors[e] = col;
        }
        for (int col : c.edge_colors)
            if (col < 0) throw format_error("edge list does not cover the graph");

        return {std::move(g), std::move(c)};
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("missing or mistyped field: ") + e.what());
    }
}

std::string coloring_to_dot(const circulant_graph& g, const total_coloring& c) {
    std::ostringstream out;
    out << "graph c" << g.n << "_" << g.a << "_" << g.b << " {\n";
    out << "  graph [n=" << g.n << ", a=" << g.a << ", b=" << g.b
        << ", palette=" << c.palette_size << "];\n";
    for (int v = 0; v < g.n; ++v)
        out << "  " << v << " [color=" << c.vertex_colors[v] << "];\n";
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const edge& ed = g.edges[e];
        out << "  " << ed.u << " -- " << ed.v << " [color=" << c.edge_colors[e]
            << ", offset=" << g.offset_value(ed.offset) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace ctc
