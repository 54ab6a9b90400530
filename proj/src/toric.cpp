#include "ech/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace ech {

namespace {

bool is_primitive_integer(const Point2& v) {
    if (!is_lattice_point(v)) return false;
    Int x = rat_num(v.x), y = rat_num(v.y);
    if (x == 0 && y == 0) return false;
    return boost::integer::gcd(Int(abs(x)), Int(abs(y))) == 1;
}

// Angular order index used to count how often a ray sequence passes the
// positive x-axis: 0 for the upper half (including +x), 1 for the lower.
int angular_half(const Point2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angular_less(const Point2& a, const Point2& b) {
    if (angular_half(a) != angular_half(b)) return angular_half(a) < angular_half(b);
    return cross(a, b) > 0;
}

}  // namespace

void validate_fan(const Fan2& fan) {
    const auto& r = fan.rays;
    if (r.size() < 3) throw std::invalid_argument("fan: fewer than three rays");
    int wraps = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        if (!is_primitive_integer(r[i]))
            throw std::invalid_argument("fan: ray is not a primitive integer vector");
        const Point2& next = r[(i + 1) % r.size()];
        if (r[i] == next) throw std::invalid_argument("fan: repeated ray");
        if (cross(r[i], next) <= 0)
            throw std::invalid_argument("fan: rays not in strict counterclockwise order");
        if (!angular_less(r[i], next)) ++wraps;
    }
    if (wraps != 1) throw std::invalid_argument("fan: rays do not wrap the plane exactly once");
}

ToricDivisor operator+(const ToricDivisor& d, const ToricDivisor& e) {
    if (d.fan != e.fan) throw std::invalid_argument("divisor sum: fans differ");
    ToricDivisor s = d;
    for (size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] += e.coeffs[i];
    return s;
}

ToricDivisor operator*(const Rat& k, const ToricDivisor& d) {
    ToricDivisor s = d;
    for (auto& c : s.coeffs) c = k * c;
    return s;
}

Fan2 inner_normal_fan(const ConvexDomain& omega) {
    if (omega.polygon.is_degenerate())
        throw std::invalid_argument("inner_normal_fan: degenerate domain");
    Fan2 fan;
    fan.convention = FanConvention::normal_fan;
    // Clockwise edge slopes give the inward normals in clockwise order.
    for (const auto& v : edge_slopes(omega.polygon)) fan.rays.push_back({v.y, -v.x});
    std::reverse(fan.rays.begin(), fan.rays.end());
    validate_fan(fan);
    return fan;
}

Fan2 slope_fan(const ConvexDomain& omega) {
    Fan2 fan = inner_normal_fan(omega);
    for (auto& r : fan.rays) r = perp(r);
    fan.convention = FanConvention::slope_fan;
    validate_fan(fan);
    return fan;
}

ToricDivisor divisor_from_parallel_polygon(const ConvexDomain& omega, const ConvexPolygon& L) {
    ToricDivisor d;
    d.fan = inner_normal_fan(omega);
    std::vector<Point2> slopes;
    for (const auto& u : d.fan.rays) slopes.push_back(perp(u));
    for (const auto& s : edge_slopes(L))
        if (std::find(slopes.begin(), slopes.end(), s) == slopes.end())
            throw std::invalid_argument("divisor_from_parallel_polygon: foreign edge slope");
    for (const auto& v : slopes) {
        Rat best = cross(v, L.vertices()[0]);
        for (const auto& p : L.vertices()) best = std::max(best, cross(v, p));
        d.coeffs.push_back(best);
    }
    return d;
}

ToricDivisor balance_divisor(const ConvexDomain& omega) {
    return divisor_from_parallel_polygon(omega, omega.polygon);
}

std::optional<ConvexPolygon> divisor_polytope(const ToricDivisor& d) {
    if (d.coeffs.size() != d.fan.rays.size())
        throw std::invalid_argument("divisor_polytope: coefficient count mismatch");
    std::vector<Halfplane> hs;
    for (size_t i = 0; i < d.fan.rays.size(); ++i) {
        const Point2& u = d.fan.rays[i];
        hs.push_back({-u.x, -u.y, d.coeffs[i]});
    }
    return halfplane_intersection(hs);
}

Int h0(const ToricDivisor& d) {
    auto p = divisor_polytope(d);
    return p ? lattice_point_count(*p) : Int(0);
}

bool is_nef(const ToricDivisor& d) {
    auto p = divisor_polytope(d);
    if (!p) return false;
    for (size_t i = 0; i < d.fan.rays.size(); ++i) {
        const Point2& u = d.fan.rays[i];
        Rat mn = dot(u, p->vertices()[0]);
        for (const auto& v : p->vertices()) mn = std::min(mn, dot(u, v));
        if (mn != -d.coeffs[i]) return false;
    }
    return true;
}

namespace {

// Lattice length of the face of P minimizing <u, .>; zero when the face is a
// single vertex.
Rat edge_lattice_length(const ConvexPolygon& P, const Point2& u) {
    Rat mn = dot(u, P.vertices()[0]);
    for (const auto& v : P.vertices()) mn = std::min(mn, dot(u, v));
    std::vector<Point2> face;
    for (const auto& v : P.vertices())
        if (dot(u, v) == mn) face.push_back(v);
    if (face.size() < 2) return 0;
    Point2 diff = face[1] - face[0];
    Point2 dir = perp(u);  // primitive since u is
    Rat t = dir.x != 0 ? diff.x / dir.x : diff.y / dir.y;
    return t < 0 ? -t : t;
}

}  // namespace

Rat intersect_nef(const ToricDivisor& d, const ToricDivisor& e) {
    if (d.fan != e.fan) throw std::invalid_argument("intersect_nef: fans differ");
    if (!is_nef(d) || !is_nef(e)) throw std::invalid_argument("intersect_nef: divisor not nef");
    ConvexPolygon pd = *divisor_polytope(d);
    ConvexPolygon pe = *divisor_polytope(e);
    Rat by_edges = 0;
    for (size_t i = 0; i < d.fan.rays.size(); ++i)
        by_edges += edge_lattice_length(pd, d.fan.rays[i]) * e.coeffs[i];
    Rat mixed = (area2(minkowski_sum(pd, pe)) - area2(pd) - area2(pe)) / 2;
    if (by_edges != mixed)
        throw std::logic_error("intersect_nef: edge-length and mixed-volume formulas disagree");
    return by_edges;
}

std::vector<Point2> cartier_data(const ConvexDomain& omega, const ConvexPolygon& L) {
    Fan2 fan = slope_fan(omega);
    for (const auto& s : edge_slopes(L))
        if (std::find(fan.rays.begin(), fan.rays.end(), s) == fan.rays.end())
            throw std::invalid_argument("cartier_data: polygon not parallel to the domain");
    std::vector<Point2> out;
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        // A direction strictly inside the cone picks out the shared vertex.
        Point2 w = fan.rays[i] + fan.rays[(i + 1) % fan.rays.size()];
        Point2 q = L.vertices()[0];
        for (const auto& v : L.vertices())
            if (cross(w, v) > cross(w, q)) q = v;
        out.push_back(perp(q));
    }
    return out;
}

namespace {

Rat stretched_divisor_value(const ConvexDomain& omega, const ToricDivisor& d_omega,
                            const ConvexPolygon& candidate) {
    ConvexPolygon s = stretch(omega, candidate);
    return intersect_nef(divisor_from_parallel_polygon(omega, s), d_omega);
}

CapacitySequence alg_capacities_free(const ConvexDomain& omega, long long kmax,
                                     const SearchLimits& limits, bool parallel) {
    ToricDivisor d_omega = balance_divisor(omega);
    // One enumeration at the largest budget covers every k: smaller k only
    // tightens the pruning, never the candidate set that matters.  Track the
    // best divisor value per lattice-count class (clamped at kmax+1).
    auto cands = free_candidate_loops(omega, kmax, limits);
    size_t nclass = static_cast<size_t>(kmax) + 2;
    std::vector<std::optional<Rat>> best(nclass);
    auto fold = [&](std::vector<std::optional<Rat>>& acc, long long count, Rat v) {
        size_t cls = static_cast<size_t>(std::min(count, kmax + 1));
        if (!acc[cls] || v < *acc[cls]) acc[cls] = std::move(v);
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            std::vector<std::optional<Rat>> local(nclass);
#pragma omp for schedule(dynamic, 64)
            for (long long i = 0; i < static_cast<long long>(cands.size()); ++i) {
                const auto& c = cands[static_cast<size_t>(i)];
                fold(local, c.lattice_count,
                     stretched_divisor_value(omega, d_omega, free_candidate_polygon(c)));
            }
#pragma omp critical
            for (size_t cls = 0; cls < nclass; ++cls)
                if (local[cls]) fold(best, static_cast<long long>(cls), *local[cls]);
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (const auto& c : cands)
            fold(best, c.lattice_count,
                 stretched_divisor_value(omega, d_omega, free_candidate_polygon(c)));
    }
    CapacitySequence seq;
    seq.source = CapacitySource::toric;
    seq.values.resize(static_cast<size_t>(kmax) + 1);
    std::optional<Rat> suffix;
    for (long long k = kmax; k >= 0; --k) {
        const auto& cls = best[static_cast<size_t>(k) + 1];
        if (cls && (!suffix || *cls < *suffix)) suffix = *cls;
        if (!suffix) throw std::logic_error("alg_capacity: no candidate found");
        seq.values[static_cast<size_t>(k)] = *suffix;
    }
    return seq;
}

}  // namespace

CapacitySequence alg_capacities(const ConvexDomain& omega, long long kmax,
                                const SearchLimits& limits, bool parallel) {
    if (kmax < 0) throw std::invalid_argument("alg_capacities: kmax < 0");
    if (omega.is_free) return alg_capacities_free(omega, kmax, limits, parallel);
    ToricDivisor d_omega = balance_divisor(omega);
    Rat budget = default_search_budget(omega, kmax);
    auto eval = [&](const ConvexPolygon& P) {
        return stretched_divisor_value(omega, d_omega, P);
    };
    auto best = min_eval_by_count(omega, budget, kmax + 1, eval, limits, parallel);
    CapacitySequence seq;
    seq.source = CapacitySource::toric;
    seq.values.resize(static_cast<size_t>(kmax) + 1);
    // c_k = min over candidates with at least k+1 lattice points; best has
    // exact-count buckets 1..kmax+1 and an overflow bucket at kmax+2.
    std::optional<Rat> suffix = best[static_cast<size_t>(kmax) + 2];
    for (long long k = kmax; k >= 0; --k) {
        const auto& slot = best[static_cast<size_t>(k) + 1];
        if (slot && (!suffix || *slot < *suffix)) suffix = slot;
        if (!suffix) throw std::logic_error("alg_capacities: missing count class");
        seq.values[static_cast<size_t>(k)] = *suffix;
    }
    return seq;
}

Rat alg_capacity(const ConvexDomain& omega, long long k, const SearchLimits& limits,
                 bool parallel) {
    return alg_capacities(omega, k, limits, parallel).values.back();
}

}  // namespace ech
