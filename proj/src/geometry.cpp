#include "mep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mep {

namespace {

double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double squared_dist(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Squared distance from p to the closed segment [a,b].
double squared_dist_segment(Point p, Point a, Point b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return squared_dist(p, a);
    double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return squared_dist(p, Point{a.x + t * abx, a.y + t * aby});
}

std::vector<Point> rect_vertices(const AxisRect& r) {
    return {{r.xmin, r.ymin}, {r.xmax, r.ymin}, {r.xmax, r.ymax}, {r.xmin, r.ymax}};
}

bool poly_contains(const std::vector<Point>& vs, Point p) {
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        if (cross(vs[i], vs[(i + 1) % n], p) < 0.0) return false;
    }
    return true;
}

// Separating-axis test over the edge normals of both polygons. Closed
// convention: only a strict gap separates, so touching counts as overlap.
bool poly_poly_overlap(const std::vector<Point>& a, const std::vector<Point>& b) {
    const std::vector<Point>* polys[2] = {&a, &b};
    for (const auto* poly : polys) {
        const int n = static_cast<int>(poly->size());
        for (int i = 0; i < n; ++i) {
            const Point u = (*poly)[i];
            const Point v = (*poly)[(i + 1) % n];
            const double nx = -(v.y - u.y);
            const double ny = v.x - u.x;
            double amin = std::numeric_limits<double>::infinity(), amax = -amin;
            double bmin = amin, bmax = amax;
            for (const Point q : a) {
                const double d = nx * q.x + ny * q.y;
                amin = std::min(amin, d);
                amax = std::max(amax, d);
            }
            for (const Point q : b) {
                const double d = nx * q.x + ny * q.y;
                bmin = std::min(bmin, d);
                bmax = std::max(bmax, d);
            }
            if (amax < bmin || bmax < amin) return false;
        }
    }
    return true;
}

bool poly_disk_overlap(const std::vector<Point>& vs, const Disk& d) {
    const Point c{d.cx, d.cy};
    if (poly_contains(vs, c)) return true;
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        if (squared_dist_segment(c, vs[i], vs[(i + 1) % n]) <= d.r * d.r) return true;
    }
    return false;
}

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct ContainsVisitor {
    Point p;

    bool operator()(const AxisRect& r) const {
        return p.x >= r.xmin && p.x <= r.xmax && p.y >= r.ymin && p.y <= r.ymax;
    }
    bool operator()(const Disk& d) const {
        return squared_dist(p, {d.cx, d.cy}) <= d.r * d.r;
    }
    bool operator()(const ConvexPolygon& poly) const { return poly_contains(poly.vertices, p); }
};

struct OverlapVisitor {
    bool operator()(const AxisRect& a, const AxisRect& b) const {
        return a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax && b.ymin <= a.ymax;
    }
    bool operator()(const Disk& a, const Disk& b) const {
        const double rr = a.r + b.r;
        return squared_dist({a.cx, a.cy}, {b.cx, b.cy}) <= rr * rr;
    }
    bool operator()(const AxisRect& a, const Disk& b) const {
        // Closest point of the rect to the disk center.
        const Point q{std::clamp(b.cx, a.xmin, a.xmax), std::clamp(b.cy, a.ymin, a.ymax)};
        return squared_dist(q, {b.cx, b.cy}) <= b.r * b.r;
    }
    bool operator()(const Disk& a, const AxisRect& b) const { return (*this)(b, a); }
    bool operator()(const AxisRect& a, const ConvexPolygon& b) const {
        return poly_poly_overlap(rect_vertices(a), b.vertices);
    }
    bool operator()(const ConvexPolygon& a, const AxisRect& b) const { return (*this)(b, a); }
    bool operator()(const Disk& a, const ConvexPolygon& b) const {
        return poly_disk_overlap(b.vertices, a);
    }
    bool operator()(const ConvexPolygon& a, const Disk& b) const { return (*this)(b, a); }
    bool operator()(const ConvexPolygon& a, const ConvexPolygon& b) const {
        return poly_poly_overlap(a.vertices, b.vertices);
    }
};

struct BoundaryVisitor {
    Point p;

    bool operator()(const AxisRect& r) const {
        if (!ContainsVisitor{p}(r)) return false;
        return p.x == r.xmin || p.x == r.xmax || p.y == r.ymin || p.y == r.ymax;
    }
    bool operator()(const Disk& d) const {
        return squared_dist(p, {d.cx, d.cy}) == d.r * d.r;
    }
    bool operator()(const ConvexPolygon& poly) const {
        if (!poly_contains(poly.vertices, p)) return false;
        const auto& vs = poly.vertices;
        const int n = static_cast<int>(vs.size());
        for (int i = 0; i < n; ++i) {
            if (cross(vs[i], vs[(i + 1) % n], p) == 0.0) return true;
        }
        return false;
    }
};

struct ValidateVisitor {
    std::optional<std::string> operator()(const AxisRect& r) const {
        if (!std::isfinite(r.xmin) || !std::isfinite(r.ymin) || !std::isfinite(r.xmax) ||
            !std::isfinite(r.ymax))
            return "rectangle has non-finite coordinate";
        if (r.xmin >= r.xmax || r.ymin >= r.ymax) return "degenerate rectangle";
        return std::nullopt;
    }
    std::optional<std::string> operator()(const Disk& d) const {
        if (!std::isfinite(d.cx) || !std::isfinite(d.cy) || !std::isfinite(d.r))
            return "disk has non-finite coordinate";
        if (d.r <= 0.0) return "disk radius must be positive";
        return std::nullopt;
    }
    std::optional<std::string> operator()(const ConvexPolygon& poly) const {
        const auto& vs = poly.vertices;
        const int n = static_cast<int>(vs.size());
        if (n < 3) return "polygon needs at least 3 vertices";
        if (n > kMaxPolygonSides)
            return "polygon exceeds " + std::to_string(kMaxPolygonSides) + " sides";
        for (const Point v : vs) {
            if (!finite(v)) return "polygon has non-finite vertex";
        }
        // Strictly convex and CCW iff every vertex lies strictly left of every
        // directed edge. Also rejects self-intersecting vertex orders.
        for (int i = 0; i < n; ++i) {
            const Point u = vs[i];
            const Point v = vs[(i + 1) % n];
            for (int j = 0; j < n; ++j) {
                if (j == i || j == (i + 1) % n) continue;
                if (cross(u, v, vs[j]) <= 0.0)
                    return "polygon vertices must be strictly convex in CCW order";
            }
        }
        return std::nullopt;
    }
};

}  // namespace

bool contains(const Range& range, Point p) { return std::visit(ContainsVisitor{p}, range); }

bool overlaps(const Range& a, const Range& b) { return std::visit(OverlapVisitor{}, a, b); }

bool on_boundary(const Range& range, Point p) { return std::visit(BoundaryVisitor{p}, range); }

std::optional<std::string> validate(const Range& range) {
    return std::visit(ValidateVisitor{}, range);
}

}  // namespace mep
