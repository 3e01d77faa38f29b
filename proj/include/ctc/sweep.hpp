#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ctc/circulant.hpp"
#include "ctc/schemes.hpp"
#include "ctc/solver.hpp"

namespace ctc {

enum class sweep_outcome : std::uint8_t {
    verified_5,     // construction applied and verified with 5 colors
    scheme_invalid, // construction applied and failed verification
    delegated,      // covered by prior published work; no construction here
    not_covered,    // outside every constructive case
};

const char* outcome_name(sweep_outcome o);

struct sweep_row {
    int n = 0, a = 0, b = 0;
    scheme_id scheme = scheme_id::not_covered;
    sweep_outcome outcome = sweep_outcome::not_covered;
    int colors = 0;               // colors used by a verified construction
    std::optional<int> chi_exact; // set when the exact cross-check completed
    std::int64_t nodes = 0;       // solver nodes when the cross-check ran
    std::int64_t elapsed_ms = 0;  // 0 unless timings requested
};

struct sweep_options {
    std::string family = "all"; // 5p | 3p | 9p | 6p | all
    int pmax = 4;               // families: p = 1..pmax
    int nmax = 30;              // family "all": n = 5..nmax
    bool check_exact = false;
    bool force_exact = false;   // allow the exact cross-check past n = 14
    bool timings = false;       // real elapsed_ms (off by default: files are
                                // byte-identical across runs)
    search_budget budget{};
};

// The instance list for a family, lexicographic in (n,a,b).
// Family filters mirror the constructions' hypotheses; "all" enumerates every
// canonical pair. Throws parameter_error on an unknown family name.
std::vector<std::tuple<int, int, int>> sweep_instances(const sweep_options& opts);

// One row per instance, computed in parallel, emitted in deterministic order.
// Partial failures are recorded in rows and never abort the sweep.
std::vector<sweep_row> run_sweep(const sweep_options& opts);

// Fixed columns n,a,b,scheme,outcome,colors,chi_exact,nodes,elapsed_ms and a
// trailing '#' summary line with counts per outcome.
std::string sweep_to_csv(const std::vector<sweep_row>& rows);

} // namespace ctc
