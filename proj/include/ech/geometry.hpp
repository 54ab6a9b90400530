#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

struct Point2 {
    Rat x, y;

    Point2() = default;
    Point2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point2&) const = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
inline Point2 operator*(const Rat& k, const Point2& a) { return {k * a.x, k * a.y}; }

// det(u | v) = u.x*v.y - u.y*v.x
inline Rat cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

// 90-degree counterclockwise rotation: (a,b) -> (-b,a).
inline Point2 perp(const Point2& v) { return {-v.y, v.x}; }

inline bool is_lattice_point(const Point2& p) { return is_integer(p.x) && is_integer(p.y); }

// Convex polygon stored as vertices in clockwise cyclic order, no repeated
// vertices and no three consecutive collinear ones. Degenerate cases are
// first-class: one vertex is a point, two vertices a segment.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    // Builds the polygon as the convex hull of the given points and
    // canonicalizes orientation (clockwise) and the starting vertex.
    static ConvexPolygon from_points(const std::vector<Point2>& pts);

    static ConvexPolygon point(Point2 p) { return from_points({std::move(p)}); }

    const std::vector<Point2>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    bool is_point() const { return verts_.size() == 1; }
    bool is_segment() const { return verts_.size() == 2; }
    bool is_degenerate() const { return verts_.size() < 3; }

    bool operator==(const ConvexPolygon&) const = default;

private:
    std::vector<Point2> verts_;
};

ConvexPolygon convex_hull(const std::vector<Point2>& pts);

// Twice the Euclidean area (shoelace), always nonnegative; 0 when degenerate.
Rat area2(const ConvexPolygon& P);

bool is_lattice_polygon(const ConvexPolygon& P);

// Number of integer points in the closed region bounded by P (row scan).
Int lattice_point_count(const ConvexPolygon& P);

// Number of lattice points on the boundary; 1 for a point, gcd-count on a
// segment. Throws std::invalid_argument when a vertex is non-integral.
Int boundary_lattice_count(const ConvexPolygon& P);

// L = area2/2 + L_boundary/2 + 1, exact. Requires a non-degenerate lattice P.
bool pick_identity_check(const ConvexPolygon& P);

ConvexPolygon dilate(const ConvexPolygon& P, const Rat& k);
ConvexPolygon translate(const ConvexPolygon& P, const Point2& v);

ConvexPolygon minkowski_sum(const ConvexPolygon& P, const ConvexPolygon& Q);

bool polygon_contains(const ConvexPolygon& P, const Point2& p);

// Closed halfplane a*x + b*y <= c.
struct Halfplane {
    Rat a, b, c;
};

// Exact intersection of halfplanes; nullopt when empty. The intersection must
// be bounded (callers arrange this); unbounded inputs throw.
std::optional<ConvexPolygon> halfplane_intersection(const std::vector<Halfplane>& hs);

// Inclusive integer x-range [lo,hi] of P at height y, if the horizontal line
// meets P there.
std::optional<std::pair<Int, Int>> row_range(const ConvexPolygon& P, const Int& y);

// A convex domain: either standard position (vertices (0,0), (a,0), (0,b) with
// edges along both axes, possibly degenerate) or free (disjoint from both axes).
struct ConvexDomain {
    ConvexPolygon polygon;
    bool is_lattice = false;
    bool is_free = false;

    // Validates standard position; throws std::invalid_argument otherwise.
    static ConvexDomain standard(ConvexPolygon poly);
    // Validates axis avoidance; throws std::invalid_argument otherwise.
    static ConvexDomain free(ConvexPolygon poly);
};

std::string polygon_to_string(const ConvexPolygon& P);

}  // namespace ech
