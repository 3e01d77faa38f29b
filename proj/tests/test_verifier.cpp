#include <doctest.h>

#include <random>

#include "ctc/circulant.hpp"
#include "ctc/coloring.hpp"
#include "ctc/verifier.hpp"

using namespace ctc;

namespace {

// Valid by construction on K_5 = C_5(1,2): vertices 2i mod 5, edge {i,j} gets
// (i+j) mod 5.
total_coloring k5_coloring(const circulant_graph& g) {
    total_coloring c;
    c.palette_size = 5;
    for (int i = 0; i < 5; ++i) c.vertex_colors.push_back(2 * i % 5);
    for (const edge& e : g.edges) c.edge_colors.push_back((e.u + e.v) % 5);
    return c;
}

total_coloring random_coloring(const circulant_graph& g, int palette, std::mt19937& rng) {
    total_coloring c;
    c.palette_size = palette;
    for (int i = 0; i < g.n; ++i) c.vertex_colors.push_back(static_cast<int>(rng() % palette));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        c.edge_colors.push_back(static_cast<int>(rng() % palette));
    return c;
}

} // namespace

TEST_CASE("hand-built coloring of C_5(1,2) is valid with 5 colors") {
    circulant_graph g = build(5, 1, 2);
    total_coloring c = k5_coloring(g);
    verification_report r = verify(g, c);
    CHECK(r.valid);
    CHECK(r.conflicts.empty());
    CHECK(r.colors_used == 5);
    verification_report ref = verify_reference(g, c);
    CHECK(ref.valid);
    CHECK(ref.colors_used == 5);
}

TEST_CASE("equal colors on adjacent vertices are reported") {
    circulant_graph g = build(9, 1, 4);
    total_coloring c;
    c.palette_size = 5;
    for (int i = 0; i < 9; ++i) c.vertex_colors.push_back(i % 5);
    for (const edge& ed : g.edges) c.edge_colors.push_back((3 * ed.u + ed.v) % 5);
    c.vertex_colors[1] = c.vertex_colors[0]; // v_0 and v_1 adjacent via a = 1
    verification_report r = verify(g, c);
    CHECK(!r.valid);
    bool found = false;
    for (const conflict& cf : r.conflicts)
        if (cf.kind == conflict_kind::vertex_vertex && cf.first == 0 && cf.second == 1)
            found = true;
    CHECK(found);
}

TEST_CASE("no 5-color assignment on C_7(1,2) passes") {
    circulant_graph g = build(7, 1, 2);
    total_coloring c;
    c.palette_size = 5;
    for (int i = 0; i < 7; ++i) c.vertex_colors.push_back(i % 5);
    for (const edge& e : g.edges) c.edge_colors.push_back((e.u + e.v) % 5);
    CHECK(!verify(g, c).valid);
}

TEST_CASE("verify rejects partial or out-of-range input") {
    circulant_graph g = build(5, 1, 2);
    total_coloring c = k5_coloring(g);
    SUBCASE("missing edge colors") {
        c.edge_colors.pop_back();
        CHECK_THROWS_AS(verify(g, c), coverage_error);
    }
    SUBCASE("unassigned marker") {
        c.vertex_colors[0] = -1;
        CHECK_THROWS_AS(verify(g, c), coverage_error);
    }
    SUBCASE("color beyond the palette") {
        c.edge_colors[0] = 5;
        CHECK_THROWS_AS(verify(g, c), coverage_error);
    }
    SUBCASE("partial builder refuses to finalize") {
        partial_coloring p = partial_coloring::empty(g, 5);
        CHECK(!p.total());
        CHECK_THROWS_AS(p.finalize(), coverage_error);
    }
}

TEST_CASE("classify") {
    circulant_graph g = build(5, 1, 2);
    total_coloring c = k5_coloring(g);
    CHECK(classify(g, c) == graph_type::type_i);

    SUBCASE("a sixth color pushes the verdict to type II") {
        c.palette_size = 6;
        c.vertex_colors[0] = 5; // fresh color, still proper
        CHECK(verify(g, c).valid);
        CHECK(classify(g, c) == graph_type::type_ii);
    }
    SUBCASE("seven colors exceed the window") {
        c.palette_size = 7;
        c.vertex_colors[0] = 5;
        c.edge_colors[0] = 6;
        CHECK(verify(g, c).valid);
        CHECK(verify(g, c).colors_used == 7);
        CHECK(classify(g, c) == graph_type::invalid);
    }
    SUBCASE("conflicting input is invalid") {
        c.vertex_colors[1] = c.vertex_colors[0];
        CHECK(classify(g, c) == graph_type::invalid);
    }
}

TEST_CASE("missing_colors") {
    circulant_graph g = build(9, 1, 4);
    partial_coloring p = partial_coloring::empty(g, 5);
    p.vertex_colors[0] = 0;
    p.edge_colors[edge_index(g, 0, 1)] = 1;
    p.edge_colors[edge_index(g, 0, 4)] = 2;
    CHECK(missing_colors(g, p, 0) == std::vector<int>{3, 4});
    p.edge_colors[edge_index(g, 8, 0)] = 3;
    p.edge_colors[edge_index(g, 5, 0)] = 4;
    CHECK(missing_colors(g, p, 0).empty());
    CHECK(missing_colors(g, p, 3) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(missing_colors(g, p, 9), index_error);
}

TEST_CASE("verify agrees with the quadratic reference on random colorings") {
    std::mt19937 rng(20260810);
    int checked = 0;
    for (int round = 0; round < 600; ++round) {
        int n = 5 + static_cast<int>(rng() % 8); // n in 5..12
        int bmax = (n - 1) / 2;
        int a = 1 + static_cast<int>(rng() % (bmax - 1));
        int b = a + 1 + static_cast<int>(rng() % (bmax - a));
        circulant_graph g = build(n, a, b);
        int palette = 4 + static_cast<int>(rng() % 4);
        total_coloring c = random_coloring(g, palette, rng);
        verification_report fast = verify(g, c);
        verification_report ref = verify_reference(g, c);
        CHECK(fast.valid == ref.valid);
        CHECK(fast.colors_used == ref.colors_used);
        REQUIRE(fast.conflicts.size() == ref.conflicts.size());
        CHECK(fast.conflicts == ref.conflicts);
        ++checked;
    }
    CHECK(checked == 600);
}

TEST_CASE("verdicts are invariant under palette permutation") {
    std::mt19937 rng(7);
    circulant_graph g = build(11, 2, 4);
    for (int round = 0; round < 50; ++round) {
        total_coloring c = random_coloring(g, 5, rng);
        std::array<int, 5> perm = {0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        total_coloring pc = c;
        for (int& col : pc.vertex_colors) col = perm[col];
        for (int& col : pc.edge_colors) col = perm[col];
        verification_report r1 = verify(g, c);
        verification_report r2 = verify(g, pc);
        CHECK(r1.valid == r2.valid);
        CHECK(r1.conflicts.size() == r2.conflicts.size());
        CHECK(r1.colors_used == r2.colors_used);
    }
}
