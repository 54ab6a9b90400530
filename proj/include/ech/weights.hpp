#pragma once

#include <array>

#include "ech/geometry.hpp"

namespace ech {

// Weight sequence (c; a_1..a_m; b_1..b_n) of a standard lattice domain:
// head c is the size of the smallest right triangle conv{(0,0),(c,0),(0,c)}
// containing the domain, the a_i / b_j are the triangle sizes produced by
// recursively decomposing the two complement components (a-side next to the
// vertical axis, b-side next to the horizontal axis). Each list is kept in
// descending order.
struct WeightSequence {
    Int c;
    std::vector<Int> a;
    std::vector<Int> b;

    bool operator==(const WeightSequence&) const = default;
};

// A concave corner region in standard form: bounded by the two coordinate
// axes and a convex-toward-origin lattice path from (0,B) down to (A,0).
// `linear`/`offset` record the unimodular affine map that carried the region
// here from its original position (row-major 2x2 matrix), kept for checking.
struct ConcaveRegion {
    std::vector<Point2> path;  // from (0,B) to (A,0), clockwise along the region
    std::array<Int, 4> linear{1, 0, 0, 1};
    Point2 offset{0, 0};
};

// Triangle sizes of the greedy decomposition of a concave region; empty when
// the region has zero area.
std::vector<Int> concave_weights(const ConcaveRegion& region);

// Full weight sequence of a standard lattice domain.
WeightSequence weight_sequence(const ConvexDomain& omega);

struct WeightCheck {
    bool volume_ok = false;  // c^2 - sum a^2 - sum b^2 == area2
    bool count_ok = false;   // triangular-number identity vs. lattice count
    std::string detail;
};

// Exact consistency report of a weight sequence against its source domain.
WeightCheck validate_weights(const WeightSequence& w, const ConvexDomain& omega);

// gcd of all entries of the sequence (head included); 0 only never, c >= 1.
Int weights_gcd(const WeightSequence& w);

bool has_unit_weight(const WeightSequence& w);

// Number of lattice points of the source domain, recovered from the sequence
// by the triangular-number identity.
Int weights_lattice_count(const WeightSequence& w);

// Twice the area of the source domain: c^2 - sum a^2 - sum b^2.
Int weights_area2(const WeightSequence& w);

std::string weights_to_string(const WeightSequence& w);

}  // namespace ech
