#pragma once

#include <cstdint>

#include "mep/instance.hpp"
#include "mep/solution.hpp"

namespace mep {

struct BruteOptions {
    std::uint64_t budget = 10'000'000;  // refuse when C(n,k) exceeds this
    bool preprocess = true;
};

// Exhaustive baseline: evaluates every k-subset of ranges and returns the
// optimum, tie-broken by lexicographically smallest removed set. Deliberately
// naive; ground truth for the other solvers.
//
// Throws InvalidK (k < 0 or k > n), RangeLimitExceeded (n > 64),
// BudgetExceeded (C(n,k) > budget).
Solution solve_brute(const RangeSpace& space, int k, const BruteOptions& options = {});

}  // namespace mep
