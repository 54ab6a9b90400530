#pragma once

#include "ech/capacity.hpp"
#include "ech/geometry.hpp"
#include "ech/omega.hpp"

namespace ech {

enum class FanConvention { normal_fan, slope_fan };

// Complete fan in the plane: primitive integer rays in counterclockwise
// cyclic order, 2D cones implicit between adjacent rays.
struct Fan2 {
    std::vector<Point2> rays;
    FanConvention convention = FanConvention::normal_fan;

    bool operator==(const Fan2&) const = default;
};

// Throws std::invalid_argument unless rays are primitive integer vectors,
// pairwise distinct, in strict counterclockwise order, and wrap the plane
// exactly once.
void validate_fan(const Fan2& fan);

// Torus-invariant divisor sum a_rho * D_rho on a fixed fan.
struct ToricDivisor {
    Fan2 fan;
    std::vector<Rat> coeffs;

    bool operator==(const ToricDivisor&) const = default;
};

ToricDivisor operator+(const ToricDivisor& d, const ToricDivisor& e);
ToricDivisor operator*(const Rat& k, const ToricDivisor& d);

// One ray per edge: the primitive inward normal, in counterclockwise order.
Fan2 inner_normal_fan(const ConvexDomain& omega);

// One ray per edge slope; equal to the inner normal fan rotated a quarter
// turn counterclockwise.
Fan2 slope_fan(const ConvexDomain& omega);

// Divisor on the inner normal fan whose polytope is omega itself: the
// coefficient on the ray normal to the edge of slope v is the omega-length
// of v.
ToricDivisor balance_divisor(const ConvexDomain& omega);

// P(D) = {v : <u_rho, v> >= -a_rho}; nullopt when empty.
std::optional<ConvexPolygon> divisor_polytope(const ToricDivisor& d);

// Number of lattice points of P(D); 0 when P(D) is empty.
Int h0(const ToricDivisor& d);

// True iff P(D) is nonempty and every defining hyperplane touches it.
bool is_nef(const ToricDivisor& d);

// Divisor on omega's normal fan with coefficients read off a polygon all of
// whose edge slopes occur among omega's; its polytope is that polygon, and it
// is nef by construction. Throws if the polygon has a foreign edge slope.
ToricDivisor divisor_from_parallel_polygon(const ConvexDomain& omega, const ConvexPolygon& L);

// Intersection number of two nef divisors on the same fan, computed both as
// the sum over rays of (lattice edge length of P(D)) x (coefficient of E) and
// as the Minkowski mixed volume of the two polytopes; the results must agree.
Rat intersect_nef(const ToricDivisor& d, const ToricDivisor& e);

// Cartier data of the divisor attached to L on the slope fan of omega: for
// each 2D cone the quarter-turn of the vertex of L shared by the two edges
// whose slopes span the cone.
std::vector<Point2> cartier_data(const ConvexDomain& omega, const ConvexPolygon& L);

// c_k computed through the divisor formulation: minimize the intersection of
// the balance divisor with the nef divisor of the stretched candidate over
// candidates with at least k+1 lattice points.
Rat alg_capacity(const ConvexDomain& omega, long long k, const SearchLimits& limits = {},
                 bool parallel = true);

CapacitySequence alg_capacities(const ConvexDomain& omega, long long kmax,
                                const SearchLimits& limits = {}, bool parallel = true);

}  // namespace ech
