#include "ech/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace ech {

namespace {

Rat path_region_area2(const std::vector<Point2>& path) {
    // Region bounded by the axes and the path; close the polygon through (0,0).
    std::vector<Point2> poly;
    poly.push_back({0, 0});
    poly.insert(poly.end(), path.begin(), path.end());
    Rat s = 0;
    for (size_t i = 0; i < poly.size(); ++i)
        s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s < 0 ? -s : s;
}

std::array<Int, 4> mat_mul(const std::array<Int, 4>& m, const std::array<Int, 4>& n) {
    return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

Point2 mat_apply(const std::array<Int, 4>& m, const Point2& p) {
    return {Rat(m[0]) * p.x + Rat(m[1]) * p.y, Rat(m[2]) * p.x + Rat(m[3]) * p.y};
}

ConcaveRegion derived_region(const ConcaveRegion& parent, const std::vector<Point2>& sub,
                             const std::array<Int, 4>& lin, const Point2& shift) {
    ConcaveRegion r;
    r.path.reserve(sub.size());
    for (const auto& p : sub) r.path.push_back(mat_apply(lin, p) + shift);
    r.linear = mat_mul(lin, parent.linear);
    r.offset = mat_apply(lin, parent.offset) + shift;
    return r;
}

void collect_weights(const ConcaveRegion& region, std::vector<Int>& out) {
    const auto& path = region.path;
    if (path.size() < 2) return;
    if (path_region_area2(path) == 0) return;
    Rat b1r = path[0].x + path[0].y;
    for (const auto& p : path) b1r = std::min(b1r, Rat(p.x + p.y));
    if (!is_integer(b1r) || b1r <= 0)
        throw std::logic_error("concave decomposition: invalid inscribed triangle size");
    Int b1 = rat_num(b1r);
    out.push_back(b1);
    size_t i_high = path.size(), i_low = 0;
    for (size_t i = 0; i < path.size(); ++i) {
        if (path[i].x + path[i].y == b1r) {
            if (i_high == path.size()) i_high = i;
            i_low = i;
        }
    }
    // Component above the inscribed hypotenuse, sheared back to standard form.
    if (i_high > 0) {
        std::vector<Point2> sub(path.begin(), path.begin() + i_high + 1);
        collect_weights(derived_region(region, sub, {1, 0, 1, 1}, {0, Rat(-b1)}), out);
    }
    // Component to the right of the inscribed hypotenuse.
    if (i_low + 1 < path.size()) {
        std::vector<Point2> sub(path.begin() + i_low, path.end());
        collect_weights(derived_region(region, sub, {1, 1, 0, 1}, {Rat(-b1), 0}), out);
    }
}

}  // namespace

std::vector<Int> concave_weights(const ConcaveRegion& region) {
    std::vector<Int> out;
    collect_weights(region, out);
    std::sort(out.begin(), out.end(), std::greater<Int>());
    return out;
}

WeightSequence weight_sequence(const ConvexDomain& omega) {
    if (omega.is_free || !omega.is_lattice || omega.polygon.is_degenerate())
        throw std::invalid_argument("weight_sequence: requires a standard lattice domain");
    const auto& v = omega.polygon.vertices();
    // Canonical clockwise order starts at (0,0); the walk v[1]..v[n-1] is the
    // upper-right boundary from (0,b) to (a,0).
    if (!(v[0] == Point2{0, 0}))
        throw std::logic_error("weight_sequence: canonical form does not start at origin");
    Rat cr = 0;
    for (const auto& p : v) cr = std::max(cr, Rat(p.x + p.y));
    Int c = rat_num(cr);
    const Rat b = v[1].y, a = v.back().x;
    size_t idx_min = 0, idx_max = 0;
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i].x + v[i].y == cr) {
            idx_max = i;
            if (idx_min == 0) idx_min = i;
        }
    }
    WeightSequence w;
    w.c = c;
    if (b < cr) {
        // Complement component along the vertical axis, reflected across the
        // hypotenuse x+y=c into standard form by (x,y) -> (x, c-x-y).
        ConcaveRegion r;
        r.linear = {1, 0, -1, -1};
        r.offset = {0, cr};
        for (size_t i = 1; i <= idx_min; ++i) r.path.push_back({v[i].x, cr - v[i].x - v[i].y});
        w.a = concave_weights(r);
    }
    if (a < cr) {
        // Complement component along the horizontal axis, via (x,y) -> (c-x-y, y).
        ConcaveRegion r;
        r.linear = {-1, -1, 0, 1};
        r.offset = {cr, 0};
        for (size_t i = idx_max; i < v.size(); ++i)
            r.path.push_back({cr - v[i].x - v[i].y, v[i].y});
        w.b = concave_weights(r);
    }
    return w;
}

Int weights_area2(const WeightSequence& w) {
    Int s = w.c * w.c;
    for (const auto& x : w.a) s -= x * x;
    for (const auto& x : w.b) s -= x * x;
    return s;
}

Int weights_lattice_count(const WeightSequence& w) {
    Int s = (w.c + 1) * (w.c + 2) / 2;
    for (const auto& x : w.a) s -= x * (x + 1) / 2;
    for (const auto& x : w.b) s -= x * (x + 1) / 2;
    return s;
}

WeightCheck validate_weights(const WeightSequence& w, const ConvexDomain& omega) {
    WeightCheck r;
    Int va = weights_area2(w);
    Int vc = weights_lattice_count(w);
    Rat pa = area2(omega.polygon);
    Int pc = lattice_point_count(omega.polygon);
    r.volume_ok = (Rat(va) == pa);
    r.count_ok = (vc == pc);
    r.detail = "area2: " + va.str() + " vs " + rat_to_string(pa) +
               "; count: " + vc.str() + " vs " + pc.str();
    return r;
}

Int weights_gcd(const WeightSequence& w) {
    Int g = w.c;
    for (const auto& x : w.a) g = boost::integer::gcd(g, x);
    for (const auto& x : w.b) g = boost::integer::gcd(g, x);
    return g;
}

bool has_unit_weight(const WeightSequence& w) {
    if (w.c == 1) return true;
    for (const auto& x : w.a)
        if (x == 1) return true;
    for (const auto& x : w.b)
        if (x == 1) return true;
    return false;
}

std::string weights_to_string(const WeightSequence& w) {
    auto list = [](const std::vector<Int>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += xs[i].str();
        }
        return s;
    };
    return "(" + w.c.str() + ";" + list(w.a) + ";" + list(w.b) + ")";
}

}  // namespace ech
