#pragma once

#include <cstdint>
#include <vector>

#include "mep/geometry.hpp"

namespace mep {

// The instance: ranges and points, identified by their index (ids are dense,
// 0..n-1 and 0..m-1). Immutable after construction; all operations below are
// pure and safe to call concurrently.
struct RangeSpace {
    std::vector<Range> ranges;
    std::vector<Point> points;

    bool operator==(const RangeSpace&) const = default;
};

// The exact set of range ids containing a point, ascending.
using Signature = std::vector<int>;

// One distinct nonempty signature together with the points carrying it.
struct Cell {
    Signature cluster;
    std::vector<int> point_ids;

    int cluster_size() const { return static_cast<int>(cluster.size()); }
};

struct InstanceStats {
    int range_count = 0;       // n
    int point_count = 0;       // m
    int max_overlap = 0;       // largest |OL(R_i)|
    int cell_count = 0;        // point-bearing cells after preprocessing with k
    int max_cluster_size = 0;  // deepest coverage among the original cells
    int uncovered_points = 0;  // points contained in no range
};

struct PreprocessReport {
    std::vector<int> removed_overcovered;  // signature larger than k
    std::vector<int> already_exposed;      // empty signature
};

struct PreprocessResult {
    RangeSpace space;
    PreprocessReport report;
    // Original id of each point kept in `space`, ascending; kept point j in the
    // preprocessed space is original point kept_point_ids[j].
    std::vector<int> kept_point_ids;
};

// Dual view: ranges become vertices, every covered point becomes one
// hyperedge equal to its signature (a multiset; duplicates preserved).
struct DualHypergraph {
    int vertex_count = 0;
    std::vector<Signature> edges;
};

// Throws std::out_of_range for an unknown point id.
Signature signature_of(const RangeSpace& space, int point_id);

// One Cell per distinct nonempty signature, partitioning all covered points.
// Deterministic: cells ordered lexicographically by cluster, point ids ascending.
std::vector<Cell> compute_cells(const RangeSpace& space);

// OL(R_i) = { j != i : overlaps(R_i, R_j) }, ascending, indexed by range id.
std::vector<std::vector<int>> overlap_sets(const RangeSpace& space);

InstanceStats compute_stats(const RangeSpace& space, int k);

// Drops points covered by more than k ranges (they cannot be exposed by any
// removal of size <= k) and points covered by nothing (exposed for every
// removal). Ranges are unchanged; kept points are renumbered densely in
// original order.
PreprocessResult preprocess(const RangeSpace& space, int k);

// Number of points exposed by removing the set `removed` (sorted range ids):
// the total point count of cells whose cluster is a subset of `removed`.
int exposure(const std::vector<Cell>& cells, const std::vector<int>& removed);

DualHypergraph to_dual_hypergraph(const RangeSpace& space);

// Bitmask form of a cell list, for solvers. Requires range ids < 64.
struct MaskedCells {
    std::vector<std::uint64_t> cluster;
    std::vector<int> point_count;
};

std::uint64_t signature_mask(const Signature& sig);
MaskedCells to_masked_cells(const std::vector<Cell>& cells);
int exposure(const MaskedCells& cells, std::uint64_t removed);

}  // namespace mep
