#pragma once

#include <stdexcept>

namespace knodel {

// (delta, n) outside the Knodel family: n odd, n < 2, delta < 1 or 2^delta > n
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// a closed-form operation was asked for outside the parameter region where
// its formula is proven; callers should fall back to BFS
struct RegimeNotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAWalk : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTarget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SinkFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace knodel
