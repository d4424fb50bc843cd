#pragma once

#include <stdexcept>

namespace mep {

// A configured resource bound was hit; callers may retry with looser limits.
// The CLI maps these to exit code 2.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : LimitExceeded {
    using LimitExceeded::LimitExceeded;
};

struct DLimitExceeded : LimitExceeded {
    using LimitExceeded::LimitExceeded;
};

// Solvers represent range sets as 64-bit masks.
struct RangeLimitExceeded : LimitExceeded {
    using LimitExceeded::LimitExceeded;
};

struct InvalidK : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A cell's cluster is larger than the budget; the space was not preprocessed.
struct ClusterTooLarge : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mep
