#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ctc/circulant.hpp"

using namespace ctc;

namespace {

// Edge set computed straight from the definition, independent of build().
std::set<std::pair<int, int>> raw_edge_set(int n, int a, int b) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int d : {a, b}) {
            int j = (i + d) % n;
            out.insert({std::min(i, j), std::max(i, j)});
        }
    return out;
}

} // namespace

TEST_CASE("build constructs simple 4-regular instances") {
    circulant_graph g = build(7, 1, 2);
    CHECK(g.n == 7);
    CHECK(g.edges.size() == 14);
    for (int v = 0; v < g.n; ++v) {
        auto nb = neighbors(g, v);
        CHECK(std::set<int>(nb.begin(), nb.end()).size() == 4);
    }
}

TEST_CASE("build rejects parameters outside the family") {
    CHECK_THROWS_AS(build(10, 1, 6), parameter_error); // 6 > (10-1)/2
    CHECK_THROWS_AS(build(10, 2, 5), parameter_error); // 5 > 4
    CHECK_THROWS_AS(build(8, 1, 4), parameter_error);  // b = n/2
    CHECK_THROWS_AS(build(9, 2, 2), parameter_error);  // a = b
    CHECK_THROWS_AS(build(9, 0, 2), parameter_error);
    CHECK_THROWS_AS(build(4, 1, 2), parameter_error);  // n too small
}

TEST_CASE("degree is 4 everywhere on C_15(3,6)") {
    circulant_graph g = build(15, 3, 6);
    for (int v = 0; v < g.n; ++v) {
        auto nb = neighbors(g, v);
        std::set<int> distinct(nb.begin(), nb.end());
        CHECK(distinct.size() == 4);
        CHECK(distinct.count(v) == 0);
    }
}

TEST_CASE("neighbors examples") {
    circulant_graph g7 = build(7, 1, 2);
    CHECK(neighbors(g7, 0) == std::array<int, 4>{1, 2, 5, 6});
    circulant_graph g10 = build(10, 1, 4);
    CHECK(neighbors(g10, 9) == std::array<int, 4>{0, 3, 5, 8});
    CHECK_THROWS_AS(neighbors(g7, 7), index_error);
    CHECK_THROWS_AS(neighbors(g7, -1), index_error);
}

TEST_CASE("edge enumeration: 2n canonical edges, no duplicates, all n <= 30") {
    for (int n = 5; n <= 30; ++n)
        for (int a = 1; a < (n - 1) / 2; ++a)
            for (int b = a + 1; b <= (n - 1) / 2; ++b) {
                circulant_graph g = build(n, a, b);
                REQUIRE(g.edges.size() == static_cast<std::size_t>(2 * n));
                std::set<std::pair<int, int>> seen;
                for (const edge& e : g.edges) {
                    CHECK(e.u < e.v);
                    int diff = (e.v - e.u) % n;
                    int d = g.offset_value(e.offset);
                    CHECK((diff == d || diff == n - d));
                    seen.insert({e.u, e.v});
                }
                CHECK(seen.size() == static_cast<std::size_t>(2 * n));
                CHECK(seen == raw_edge_set(n, a, b));
                for (int v = 0; v < n; ++v) {
                    auto nb = neighbors(g, v);
                    CHECK(std::set<int>(nb.begin(), nb.end()).size() == 4);
                }
            }
}

TEST_CASE("edge_index finds exactly the edges") {
    circulant_graph g = build(10, 1, 4);
    CHECK(g.edges[edge_index(g, 0, 1)].offset == offset_class::a);
    CHECK(g.edges[edge_index(g, 6, 0)].offset == offset_class::b);
    CHECK(edge_index(g, 0, 5) == -1);
    CHECK(edge_index(g, 0, 0) == -1);
}

TEST_CASE("cycle decomposition") {
    SUBCASE("C_10(1,4) offset 4: 2 cycles of length 5") {
        auto d = decompose_cycles(build(10, 1, 4), 4);
        CHECK(d.cycle_count == 2);
        CHECK(d.cycle_length == 5);
    }
    SUBCASE("C_15(3,6) offset 3: 3 cycles of length 5") {
        auto d = decompose_cycles(build(15, 3, 6), 3);
        CHECK(d.cycle_count == 3);
        CHECK(d.cycle_length == 5);
    }
    SUBCASE("C_9(1,3) offset 3 matches the orbits of +3 mod 9") {
        auto d = decompose_cycles(build(9, 1, 3), 3);
        CHECK(d.cycle_count == 3);
        CHECK(d.cycle_length == 3);
        CHECK(d.cycles[0] == std::vector<int>{0, 3, 6});
        CHECK(d.cycles[1] == std::vector<int>{1, 4, 7});
        CHECK(d.cycles[2] == std::vector<int>{2, 5, 8});
    }
    SUBCASE("rejects offsets that are not generators") {
        CHECK_THROWS_AS(decompose_cycles(build(10, 1, 4), 3), parameter_error);
    }
}

TEST_CASE("cycle decomposition partitions V for all n <= 30") {
    for (int n = 5; n <= 30; ++n)
        for (int a = 1; a < (n - 1) / 2; ++a)
            for (int b = a + 1; b <= (n - 1) / 2; ++b) {
                circulant_graph g = build(n, a, b);
                for (int d : {a, b}) {
                    auto dec = decompose_cycles(g, d);
                    CHECK(dec.cycle_count == std::gcd(n, d));
                    CHECK(dec.cycle_count * dec.cycle_length == n);
                    std::set<int> covered;
                    for (const auto& cyc : dec.cycles) {
                        CHECK(cyc.size() == static_cast<std::size_t>(dec.cycle_length));
                        for (std::size_t t = 0; t < cyc.size(); ++t) {
                            covered.insert(cyc[t]);
                            int next = cyc[(t + 1) % cyc.size()];
                            int diff = ((next - cyc[t]) % n + n) % n;
                            CHECK((diff == d || diff == n - d));
                        }
                    }
                    CHECK(covered.size() == static_cast<std::size_t>(n));
                }
            }
}

TEST_CASE("canonical_params folds and sorts") {
    CHECK(canonical_params(10, 1, 6) == std::pair{1, 4});
    CHECK(canonical_params(7, 5, 3) == std::pair{2, 3});
    CHECK(canonical_params(12, 11, 7) == std::pair{1, 5});
}

TEST_CASE("canonical_params rejects degenerate offsets") {
    CHECK_THROWS_AS(canonical_params(10, 5, 3), parameter_error); // a = n/2
    CHECK_THROWS_AS(canonical_params(9, 3, 6), parameter_error);  // 6 folds onto 3
    CHECK_THROWS_AS(canonical_params(7, 5, 2), parameter_error);  // 5 folds onto 2
    CHECK_THROWS_AS(canonical_params(10, 0, 3), parameter_error);
    CHECK_THROWS_AS(canonical_params(10, 1, 10), parameter_error);
}

TEST_CASE("canonical_params preserves the edge set and is idempotent") {
    CHECK(raw_edge_set(12, 11, 7) == raw_edge_set(12, 1, 5));
    for (int n = 5; n <= 50; n += 3)
        for (int a = 1; a <= n - 1; ++a)
            for (int b = 1; b <= n - 1; ++b) {
                int fa = std::min(a, n - a);
                int fb = std::min(b, n - b);
                if (fa == 0 || fb == 0 || fa == fb || 2 * fa == n || 2 * fb == n) continue;
                auto [ca, cb] = canonical_params(n, a, b);
                CHECK(canonical_params(n, ca, cb) == std::pair{ca, cb});
                CHECK(raw_edge_set(n, a, b) == raw_edge_set(n, ca, cb));
                // the four parameterizations of the same graph agree
                CHECK(canonical_params(n, b, a) == std::pair{ca, cb});
                CHECK(canonical_params(n, n - a, b) == std::pair{ca, cb});
                CHECK(canonical_params(n, a, n - b) == std::pair{ca, cb});
            }
}
