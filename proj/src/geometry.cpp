#include "ech/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace ech {

namespace {

bool lex_less(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Monotone chain; returns counterclockwise hull without repeated endpoint.
std::vector<Point2> hull_ccw(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    return h;
}

}  // namespace

ConvexPolygon convex_hull(const std::vector<Point2>& pts) {
    return ConvexPolygon::from_points(pts);
}

ConvexPolygon ConvexPolygon::from_points(const std::vector<Point2>& pts) {
    if (pts.empty()) throw std::invalid_argument("convex hull of empty point set");
    std::vector<Point2> h = hull_ccw(pts);
    if (h.size() == 2) {
        // collinear input: keep the two lexicographic extremes
        if (!lex_less(h[0], h[1])) std::swap(h[0], h[1]);
    } else if (h.size() > 2) {
        std::reverse(h.begin(), h.end());  // clockwise
        size_t start = 0;
        for (size_t i = 1; i < h.size(); ++i)
            if (lex_less(h[i], h[start])) start = i;
        std::rotate(h.begin(), h.begin() + start, h.end());
    }
    ConvexPolygon P;
    P.verts_ = std::move(h);
    return P;
}

Rat area2(const ConvexPolygon& P) {
    const auto& v = P.vertices();
    if (v.size() < 3) return 0;
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s < 0 ? -s : s;
}

bool is_lattice_polygon(const ConvexPolygon& P) {
    for (const auto& v : P.vertices())
        if (!is_lattice_point(v)) return false;
    return true;
}

std::optional<std::pair<Int, Int>> row_range(const ConvexPolygon& P, const Int& y) {
    const auto& v = P.vertices();
    const Rat yr(y);
    bool found = false;
    Rat xlo, xhi;
    auto add = [&](const Rat& x) {
        if (!found) {
            xlo = xhi = x;
            found = true;
        } else {
            if (x < xlo) xlo = x;
            if (x > xhi) xhi = x;
        }
    };
    if (v.size() == 1) {
        if (v[0].y == yr) add(v[0].x);
    } else {
        for (size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            if (v.size() == 2 && i == 1) break;  // segment: one edge suffices
            const Rat y1 = a.y, y2 = b.y;
            if ((yr < y1 && yr < y2) || (yr > y1 && yr > y2)) continue;
            if (y1 == y2) {
                add(a.x);
                add(b.x);
            } else {
                add(a.x + (yr - y1) * (b.x - a.x) / (y2 - y1));
            }
        }
    }
    if (!found) return std::nullopt;
    return std::make_pair(ceil_rat(xlo), floor_rat(xhi));
}

Int lattice_point_count(const ConvexPolygon& P) {
    Rat ymin = P.vertices()[0].y, ymax = ymin;
    for (const auto& v : P.vertices()) {
        if (v.y < ymin) ymin = v.y;
        if (v.y > ymax) ymax = v.y;
    }
    Int count = 0;
    for (Int y = ceil_rat(ymin); y <= floor_rat(ymax); ++y) {
        auto r = row_range(P, y);
        if (r && r->second >= r->first) count += r->second - r->first + 1;
    }
    return count;
}

namespace {
Int seg_gcd(const Point2& a, const Point2& b) {
    Int dx = rat_num(b.x - a.x), dy = rat_num(b.y - a.y);
    if (dx < 0) dx = -dx;
    if (dy < 0) dy = -dy;
    return boost::integer::gcd(dx, dy);
}
}  // namespace

Int boundary_lattice_count(const ConvexPolygon& P) {
    if (!is_lattice_polygon(P))
        throw std::invalid_argument("boundary_lattice_count: non-lattice polygon");
    const auto& v = P.vertices();
    if (v.size() == 1) return 1;
    if (v.size() == 2) return seg_gcd(v[0], v[1]) + 1;
    Int total = 0;
    for (size_t i = 0; i < v.size(); ++i) total += seg_gcd(v[i], v[(i + 1) % v.size()]);
    return total;
}

bool pick_identity_check(const ConvexPolygon& P) {
    if (P.is_degenerate())
        throw std::invalid_argument("pick_identity_check: degenerate polygon");
    Rat lhs(lattice_point_count(P));
    Rat rhs = area2(P) / 2 + Rat(boundary_lattice_count(P)) / 2 + 1;
    return lhs == rhs;
}

ConvexPolygon dilate(const ConvexPolygon& P, const Rat& k) {
    if (k < 0) throw std::invalid_argument("dilate: negative factor");
    std::vector<Point2> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(k * v);
    return ConvexPolygon::from_points(pts);
}

ConvexPolygon translate(const ConvexPolygon& P, const Point2& t) {
    std::vector<Point2> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(v + t);
    return ConvexPolygon::from_points(pts);
}

ConvexPolygon minkowski_sum(const ConvexPolygon& P, const ConvexPolygon& Q) {
    // Hull of pairwise vertex sums; exact and uniform over degenerate cases.
    std::vector<Point2> pts;
    pts.reserve(P.size() * Q.size());
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) pts.push_back(p + q);
    return ConvexPolygon::from_points(pts);
}

bool polygon_contains(const ConvexPolygon& P, const Point2& p) {
    const auto& v = P.vertices();
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        if (cross(v[1] - v[0], p - v[0]) != 0) return false;
        return dot(p - v[0], v[1] - v[0]) >= 0 && dot(p - v[1], v[0] - v[1]) >= 0;
    }
    for (size_t i = 0; i < v.size(); ++i)
        if (cross(v[(i + 1) % v.size()] - v[i], p - v[i]) > 0) return false;
    return true;
}

std::optional<ConvexPolygon> halfplane_intersection(const std::vector<Halfplane>& hs) {
    // Boundedness requires the outward normals to positively span the plane.
    {
        std::vector<Point2> dirs;
        for (const auto& h : hs) {
            if (h.a == 0 && h.b == 0) {
                if (h.c < 0) return std::nullopt;
                continue;
            }
            dirs.push_back({h.a, h.b});
        }
        auto half = [](const Point2& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
        std::sort(dirs.begin(), dirs.end(), [&](const Point2& u, const Point2& w) {
            if (half(u) != half(w)) return half(u) < half(w);
            return cross(u, w) > 0;
        });
        dirs.erase(std::unique(dirs.begin(), dirs.end(),
                               [](const Point2& u, const Point2& w) {
                                   return cross(u, w) == 0 && dot(u, w) > 0;
                               }),
                   dirs.end());
        if (dirs.size() < 3)
            throw std::invalid_argument("halfplane_intersection: unbounded region");
        for (size_t i = 0; i < dirs.size(); ++i)
            if (cross(dirs[i], dirs[(i + 1) % dirs.size()]) <= 0)
                throw std::invalid_argument("halfplane_intersection: unbounded region");
    }
    std::vector<Point2> cands;
    for (size_t i = 0; i < hs.size(); ++i) {
        for (size_t j = i + 1; j < hs.size(); ++j) {
            Rat det = hs[i].a * hs[j].b - hs[j].a * hs[i].b;
            if (det == 0) continue;
            Point2 p{(hs[i].c * hs[j].b - hs[j].c * hs[i].b) / det,
                     (hs[i].a * hs[j].c - hs[j].a * hs[i].c) / det};
            bool ok = true;
            for (const auto& h : hs) {
                if (h.a * p.x + h.b * p.y > h.c) {
                    ok = false;
                    break;
                }
            }
            if (ok) cands.push_back(std::move(p));
        }
    }
    if (cands.empty()) return std::nullopt;
    return ConvexPolygon::from_points(cands);
}

ConvexDomain ConvexDomain::standard(ConvexPolygon poly) {
    const auto& v = poly.vertices();
    if (poly.is_degenerate())
        throw std::invalid_argument("standard domain: polygon is degenerate");
    bool has_origin = false;
    Rat a = 0, b = 0, xmax = 0, ymax = 0;
    for (const auto& p : v) {
        if (p.x < 0 || p.y < 0)
            throw std::invalid_argument("standard domain: vertex outside first quadrant");
        if (p.x == 0 && p.y == 0) has_origin = true;
        if (p.y == 0 && p.x > a) a = p.x;
        if (p.x == 0 && p.y > b) b = p.y;
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    if (!has_origin || a == 0 || b == 0)
        throw std::invalid_argument(
            "standard domain: must contain (0,0), (a,0) with a>0 and (0,b) with b>0");
    // The non-axis boundary must be the graph of a function over [0,a]: the
    // widest point of the polygon has to sit on the x-axis and the tallest on
    // the y-axis.  Otherwise part of the region does not project down onto the
    // axis segment and the domain is not of the required form.
    if (a != xmax || b != ymax)
        throw std::invalid_argument(
            "standard domain: boundary is not a graph over the axis segments "
            "(the widest point must lie on the x-axis and the tallest on the y-axis)");
    ConvexDomain d;
    d.is_lattice = is_lattice_polygon(poly);
    d.polygon = std::move(poly);
    d.is_free = false;
    return d;
}

ConvexDomain ConvexDomain::free(ConvexPolygon poly) {
    const auto& v = poly.vertices();
    Rat xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    bool off_y_axis = xmin > 0 || xmax < 0;
    bool off_x_axis = ymin > 0 || ymax < 0;
    if (!off_y_axis || !off_x_axis)
        throw std::invalid_argument("free domain: polygon meets a coordinate axis");
    ConvexDomain d;
    d.is_lattice = is_lattice_polygon(poly);
    d.polygon = std::move(poly);
    d.is_free = true;
    return d;
}

std::string polygon_to_string(const ConvexPolygon& P) {
    std::string s = "[";
    for (size_t i = 0; i < P.size(); ++i) {
        if (i) s += ", ";
        s += "(" + rat_to_string(P.vertices()[i].x) + "," + rat_to_string(P.vertices()[i].y) + ")";
    }
    return s + "]";
}

}  // namespace ech
