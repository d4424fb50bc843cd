#pragma once

#include <vector>

namespace mep {

// A removed-range set of size <= k with the points it exposes.
struct Solution {
    int k = 0;
    std::vector<int> removed;            // sorted range ids
    int exposed_count = 0;
    std::vector<int> exposed_point_ids;  // sorted, in the input instance's numbering

    bool operator==(const Solution&) const = default;
};

}  // namespace mep
