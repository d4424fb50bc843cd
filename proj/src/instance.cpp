#include "mep/instance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mep {

Signature signature_of(const RangeSpace& space, int point_id) {
    if (point_id < 0 || point_id >= static_cast<int>(space.points.size()))
        throw std::out_of_range("unknown point id " + std::to_string(point_id));
    Signature sig;
    const Point p = space.points[point_id];
    for (int i = 0; i < static_cast<int>(space.ranges.size()); ++i) {
        if (contains(space.ranges[i], p)) sig.push_back(i);
    }
    return sig;
}

std::vector<Cell> compute_cells(const RangeSpace& space) {
    std::map<Signature, std::vector<int>> by_cluster;
    for (int pid = 0; pid < static_cast<int>(space.points.size()); ++pid) {
        Signature sig = signature_of(space, pid);
        if (sig.empty()) continue;
        by_cluster[std::move(sig)].push_back(pid);
    }
    std::vector<Cell> cells;
    cells.reserve(by_cluster.size());
    for (auto& [cluster, pids] : by_cluster) cells.push_back(Cell{cluster, std::move(pids)});
    return cells;
}

std::vector<std::vector<int>> overlap_sets(const RangeSpace& space) {
    const int n = static_cast<int>(space.ranges.size());
    std::vector<std::vector<int>> ol(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (overlaps(space.ranges[i], space.ranges[j])) {
                ol[i].push_back(j);
                ol[j].push_back(i);
            }
        }
    }
    return ol;
}

PreprocessResult preprocess(const RangeSpace& space, int k) {
    PreprocessResult result;
    result.space.ranges = space.ranges;
    for (int pid = 0; pid < static_cast<int>(space.points.size()); ++pid) {
        const Signature sig = signature_of(space, pid);
        if (sig.empty()) {
            result.report.already_exposed.push_back(pid);
        } else if (static_cast<int>(sig.size()) > k) {
            result.report.removed_overcovered.push_back(pid);
        } else {
            result.space.points.push_back(space.points[pid]);
            result.kept_point_ids.push_back(pid);
        }
    }
    return result;
}

InstanceStats compute_stats(const RangeSpace& space, int k) {
    InstanceStats stats;
    stats.range_count = static_cast<int>(space.ranges.size());
    stats.point_count = static_cast<int>(space.points.size());
    for (const auto& ol : overlap_sets(space))
        stats.max_overlap = std::max(stats.max_overlap, static_cast<int>(ol.size()));
    for (const Cell& cell : compute_cells(space))
        stats.max_cluster_size = std::max(stats.max_cluster_size, cell.cluster_size());
    const PreprocessResult pre = preprocess(space, k);
    stats.cell_count = static_cast<int>(compute_cells(pre.space).size());
    stats.uncovered_points = static_cast<int>(pre.report.already_exposed.size());
    return stats;
}

int exposure(const std::vector<Cell>& cells, const std::vector<int>& removed) {
    int exposed = 0;
    for (const Cell& cell : cells) {
        if (std::includes(removed.begin(), removed.end(), cell.cluster.begin(),
                          cell.cluster.end()))
            exposed += static_cast<int>(cell.point_ids.size());
    }
    return exposed;
}

DualHypergraph to_dual_hypergraph(const RangeSpace& space) {
    DualHypergraph dual;
    dual.vertex_count = static_cast<int>(space.ranges.size());
    for (int pid = 0; pid < static_cast<int>(space.points.size()); ++pid) {
        Signature sig = signature_of(space, pid);
        if (!sig.empty()) dual.edges.push_back(std::move(sig));
    }
    return dual;
}

std::uint64_t signature_mask(const Signature& sig) {
    std::uint64_t mask = 0;
    for (const int id : sig) {
        if (id < 0 || id >= 64) throw std::out_of_range("range id out of bitmask width");
        mask |= std::uint64_t{1} << id;
    }
    return mask;
}

MaskedCells to_masked_cells(const std::vector<Cell>& cells) {
    MaskedCells masked;
    masked.cluster.reserve(cells.size());
    masked.point_count.reserve(cells.size());
    for (const Cell& cell : cells) {
        masked.cluster.push_back(signature_mask(cell.cluster));
        masked.point_count.push_back(static_cast<int>(cell.point_ids.size()));
    }
    return masked;
}

int exposure(const MaskedCells& cells, std::uint64_t removed) {
    int exposed = 0;
    for (std::size_t i = 0; i < cells.cluster.size(); ++i) {
        if ((cells.cluster[i] & ~removed) == 0) exposed += cells.point_count[i];
    }
    return exposed;
}

}  // namespace mep
