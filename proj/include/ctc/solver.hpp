#pragma once

#include <cstdint>
#include <optional>

#include "ctc/circulant.hpp"
#include "ctc/coloring.hpp"

namespace ctc {

struct search_budget {
    std::int64_t max_nodes = 50'000'000;
    std::int64_t max_millis = 300'000;
};

// Defaults above, overridable through CTC_MAX_NODES / CTC_MAX_MS.
search_budget default_budget();

enum class search_status : std::uint8_t { found, none, budget_exceeded };

struct search_result {
    search_status status = search_status::none;
    std::optional<total_coloring> witness; // verifier-valid, <= k colors
    std::int64_t nodes = 0;                // color assignments explored
};

struct search_options {
    // Pins v_0 to color 0 and its four incident edges (by neighbour index) to
    // 1,2,3,4 - pure color renaming, so the decision answer is unchanged.
    bool symmetry_breaking = true;
};

// Backtracking decision search: does a proper total coloring with at most k
// colors exist? Elements are ordered once by a most-constrained-first pass
// over the total graph; colors are tried ascending; per-element available
// color sets prune dead branches. "none" only after exhaustive search.
// Deterministic: identical inputs give identical witnesses and node counts.
search_result exists_total_coloring(const circulant_graph& g, int k,
                                    const search_budget& budget,
                                    const search_options& opts = {});

enum class chi_status : std::uint8_t {
    exact,            // failing and succeeding levels both completed
    lower_bound_only, // some level exhausted, the next ran out of budget
    budget_exceeded,  // not even the first level completed
};

struct chi_result {
    int chi_total = 0; // exact value, or the best proven lower bound
    chi_status status = chi_status::budget_exceeded;
    std::optional<total_coloring> witness;
    std::int64_t nodes = 0;
};

// Iterates k = 5, 6, ... until a witness exists. The search does not assume
// any upper-bound conjecture; a greedy bound guarantees termination by k = 9.
chi_result total_chromatic_number(const circulant_graph& g, const search_budget& budget);

} // namespace ctc
