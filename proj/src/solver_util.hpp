#pragma once

#include <algorithm>
#include <cstdint>

#include "mep/errors.hpp"
#include "mep/instance.hpp"
#include "mep/solution.hpp"

// Shared solver plumbing: preprocessing, mask helpers, Solution assembly.

namespace mep::detail {

struct PreparedInstance {
    std::vector<Cell> cells;   // of the (possibly preprocessed) space
    MaskedCells masked;
    std::vector<int> id_map;   // cell-local point id -> input point id
};

inline PreparedInstance prepare(const RangeSpace& space, int k, bool run_preprocess = true) {
    const int n = static_cast<int>(space.ranges.size());
    if (k < 0 || k > n)
        throw InvalidK("k must be in [0, " + std::to_string(n) + "], got " + std::to_string(k));
    if (n > 64)
        throw RangeLimitExceeded("solver supports at most 64 ranges, got " + std::to_string(n));
    PreparedInstance prepared;
    if (run_preprocess) {
        PreprocessResult pre = preprocess(space, k);
        prepared.cells = compute_cells(pre.space);
        prepared.id_map = std::move(pre.kept_point_ids);
    } else {
        prepared.cells = compute_cells(space);
        prepared.id_map.resize(space.points.size());
        for (int i = 0; i < static_cast<int>(space.points.size()); ++i) prepared.id_map[i] = i;
    }
    prepared.masked = to_masked_cells(prepared.cells);
    return prepared;
}

inline std::vector<int> mask_to_ids(std::uint64_t mask) {
    std::vector<int> ids;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1) ids.push_back(i);
    }
    return ids;
}

inline Solution make_solution(int k, std::vector<int> removed, const PreparedInstance& prepared) {
    Solution solution;
    solution.k = k;
    const std::uint64_t removed_mask = signature_mask(removed);
    solution.removed = std::move(removed);
    for (std::size_t c = 0; c < prepared.cells.size(); ++c) {
        if ((prepared.masked.cluster[c] & ~removed_mask) != 0) continue;
        for (const int pid : prepared.cells[c].point_ids)
            solution.exposed_point_ids.push_back(prepared.id_map[pid]);
    }
    std::sort(solution.exposed_point_ids.begin(), solution.exposed_point_ids.end());
    solution.exposed_count = static_cast<int>(solution.exposed_point_ids.size());
    return solution;
}

}  // namespace mep::detail
