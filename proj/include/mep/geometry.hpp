#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mep {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

// Axis-aligned rectangle [xmin,xmax] x [ymin,ymax]. Valid iff xmin < xmax and ymin < ymax.
struct AxisRect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    bool operator==(const AxisRect&) const = default;
};

// Closed disk of radius r > 0.
struct Disk {
    double cx = 0.0;
    double cy = 0.0;
    double r = 0.0;

    bool operator==(const Disk&) const = default;
};

// Strictly convex polygon, vertices in counterclockwise order, no three collinear.
struct ConvexPolygon {
    std::vector<Point> vertices;

    bool operator==(const ConvexPolygon&) const = default;
};

// Cap on polygon complexity; keeps every per-range predicate O(1).
inline constexpr int kMaxPolygonSides = 16;

using Range = std::variant<AxisRect, Disk, ConvexPolygon>;

// All regions are closed: boundary points are contained and tangency counts
// as overlap. Comparisons are plain floating point, no epsilon.

bool contains(const Range& range, Point p);
bool overlaps(const Range& a, const Range& b);

// True iff p is contained and lies on the region boundary.
bool on_boundary(const Range& range, Point p);

// First violated invariant, or nullopt when the range is valid.
std::optional<std::string> validate(const Range& range);

}  // namespace mep
