#pragma once

#include "ech/geometry.hpp"

namespace ech {

// Support-type pseudonorm attached to a convex domain: the length of a vector
// v is the largest cross product v x u over u in the domain. Summed over the
// boundary edges of a polygon it gives the Omega-perimeter that the capacity
// optimization minimizes.

Rat omega_length(const ConvexDomain& omega, const Point2& v);

// Omega-perimeter of the full clockwise boundary of L. A point contributes 0;
// a segment is traversed out and back, so both directions contribute.
Rat omega_perimeter(const ConvexDomain& omega, const ConvexPolygon& L);

// Clockwise primitive edge slopes of a polygon.
std::vector<Point2> edge_slopes(const ConvexPolygon& P);

// Smallest polygon with edges parallel to omega's edges that contains L;
// preserves the omega-perimeter of L.
ConvexPolygon stretch(const ConvexDomain& omega, const ConvexPolygon& L);

// Dual-norm length of an open or closed path (given by its edge vectors) for
// a free domain, relative to the interior base point v_star.
Rat dual_norm_length(const ConvexDomain& omega, const Point2& v_star,
                     const std::vector<Point2>& path_edges);

// Dual-norm length of the closed boundary of L, using the centroid of omega
// as base point. Independent of the base point for closed paths.
Rat free_length(const ConvexDomain& omega, const ConvexPolygon& L);

Point2 centroid(const ConvexPolygon& P);

}  // namespace ech
