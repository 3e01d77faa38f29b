#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ctc/circulant.hpp"
#include "ctc/coloring.hpp"

namespace ctc {

// Which constructive case (if any) covers a given instance. Exactly one tag
// per instance, chosen under a fixed priority order (see select_scheme).
enum class scheme_id : std::uint8_t {
    five_p_case1,   // n = 5p, both offsets = 1 mod 5 after folding
    five_p_case2,   // n = 5p, both offsets = 2 mod 5 after folding
    five_p_case3,   // n = 5p, offsets = 1 and 2 mod 5 after folding
    three_p_odd,    // n = 3p (p odd), gcd(a,b) = 1, 3 | n/gcd(n,b)
    nine_p_even_k0, // n = 9p (p even), offsets (1,k), k = 0 mod 3, 3 | n/gcd(n,k)
    nine_p_odd_k1,  // n = 9p (p odd), offsets (1,k), gcd(n,k) = 1, k = 1 mod 9
    nine_p_odd_k4,  // ... k = 4 mod 9
    nine_p_odd_k7,  // ... k = 7 mod 9
    six_p,          // n = 6p, a,b != 0 mod 3, p even or gcd(a,b) = 1
    delegated,      // order-6p (1,k) instances covered by prior published work
    not_covered,    // outside every constructive case; exact search applies
};

// Stable name used in CSV/JSON output.
const char* scheme_name(scheme_id id);

// Drives the order-9p constructions with p odd: for x = i mod 9, entries[x]
// is (vertex color of v_i, color of edge {v_i-k, v_i}, color of edge
// {v_i, v_i+k}). The out-entry at x and the in-entry at (x+k) mod 9 name the
// same edge, so entries[x][2] == entries[(x+k)%9][1] holds for every x.
struct triple_table {
    std::array<std::array<int, 3>, 9> entries;
};

// k_mod_9 must be 1, 4 or 7.
const triple_table& nine_p_table(int k_mod_9);

// First matching case under the fixed priority order: 5p family, then 9p,
// then 3p-odd, then 6p, then delegated (order-6p (1,k), k != 0 mod 3),
// else not_covered. Total: every valid graph gets a tag.
scheme_id select_scheme(const circulant_graph& g);

// Each construction verifies its own output and throws scheme_invalid rather
// than returning a conflicting assignment.

// Palette {0..4}: vertices i mod 5; each offset class is traversed along the
// generator whose residue mod 5 lies in {1,2} (d or n-d) and its edges get
// (i + shift) mod 5 from the traversal tail, with shifts (2,4), (3,4), (3,1)
// for cases 1, 2, 3. `which` must be one of the five_p_* tags.
total_coloring color_five_p(const circulant_graph& g, scheme_id which);

// Offset-b cycles colored over the interleaved vertex/edge walk with per-cycle
// palettes; offset-a edges colored 2/3/4 by the cycle class of their tail.
total_coloring color_three_p_odd(const circulant_graph& g);

// Vertices and offset-k edges use {0,1,2}; the outer cycle alternates 3,4.
total_coloring color_nine_p_even_k0(const circulant_graph& g);

// Table-driven vertex and offset-k edge colors, then outer-cycle completion.
// `which` must be one of the nine_p_odd_* tags.
total_coloring color_nine_p_odd(const circulant_graph& g, scheme_id which);

// Assigns every outer edge {v_i, v_i+1} a color missing from the closed
// palettes of both endpoints, by deterministic greedy over i = 0..n-1
// (smallest admissible color first) with chronological backtracking.
// Expects all vertices and all offset-b edges assigned, outer edges not.
// Throws completion_failure when backtracking exhausts every choice.
total_coloring complete_outer_cycle(const circulant_graph& g, partial_coloring partial);

// Vertices i mod 3; one offset class gets (2*head - tail) mod 3, the other —
// whichever has even cycle length, preferring b — alternates 3,4.
total_coloring color_six_p(const circulant_graph& g);

// select_scheme + dispatch. Construction failures are captured, not thrown,
// so sweeps never abort; delegated/not_covered yield no coloring.
struct scheme_result {
    scheme_id id = scheme_id::not_covered;
    std::optional<total_coloring> coloring; // set iff a construction verified
    std::string failure;                    // set iff a construction failed
};

scheme_result apply_scheme(const circulant_graph& g);

} // namespace ctc
