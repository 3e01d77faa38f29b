#pragma once

#include <stdexcept>

namespace ctc {

// Parameters outside the simple 4-regular family 1 <= a < b <= (n-1)/2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex index outside 0..n-1.
struct index_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A coloring handed to verify() is not total (or carries out-of-range colors).
struct coverage_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A constructive scheme produced an assignment that fails verification.
// Raised instead of returning invalid output.
struct scheme_invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outer-cycle completion exhausted every admissible color choice.
struct completion_failure : scheme_invalid {
    using scheme_invalid::scheme_invalid;
};

// Malformed JSON/DOT input.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ctc
