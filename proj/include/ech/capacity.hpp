#pragma once

#include <array>
#include <functional>
#include <stdexcept>

#include "ech/omega.hpp"
#include "ech/weights.hpp"

namespace ech {

// Raised when a bounded search runs out of its node / iteration budget.
// best_so_far carries the incumbent value if one was found.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg, std::optional<Rat> best = std::nullopt)
        : std::runtime_error(msg), best_so_far(std::move(best)) {}
    std::optional<Rat> best_so_far;
};

struct SearchLimits {
    long long max_nodes = 200'000'000;  // DFS nodes in path enumeration
    long long max_delta = 1'000'000;    // outer iterations in weight optimization
    long long max_table = 20'000'000;   // DP table cells in weight optimization
};

enum class CapacitySource { ball, ellipsoid, bruteforce, weights, toric };

struct CapacitySequence {
    std::vector<Rat> values;  // c_0 .. c_kmax
    CapacitySource source = CapacitySource::bruteforce;
};

// ---- closed forms ----

// c_k(B(q)) = d*q where d(d+1)/2 <= k <= d(d+3)/2.
Rat ball_capacity(const Rat& q, const Int& k);

// (k+1)-th smallest element of the multiset {a*m + b*n : m,n >= 0}.
Rat ellipsoid_capacity(const Rat& a, const Rat& b, const Int& k);

// ---- brute-force lattice-path route ----

// Visits every convex lattice domain in standard position whose
// omega-perimeter is at most `budget`: monotone convex lattice paths closed by
// axis segments, plus the degenerate point and axis segments. Serial.
void enumerate_path_domains(const ConvexDomain& omega, const Rat& budget,
                            const std::function<void(const ConvexPolygon&, const Rat&)>& visit,
                            const SearchLimits& limits = {});

// c_0..c_kmax as the minimum omega-perimeter over domains with exactly k+1
// lattice points. `parallel` switches between the OpenMP kernel and the
// serial reference implementation.
CapacitySequence capacities_bruteforce(const ConvexDomain& omega, long long kmax,
                                       const SearchLimits& limits = {}, bool parallel = true);

Rat capacity_bruteforce(const ConvexDomain& omega, long long k, const SearchLimits& limits = {},
                        bool parallel = true);

// cap(r) = max lattice point count over domains of omega-perimeter <= r.
Int cap_bruteforce(const ConvexDomain& omega, const Rat& r, const SearchLimits& limits = {},
                   bool parallel = true);

// Search budget large enough to cover an optimal domain for every lattice
// point count up to kmax+1, from cheap feasible candidates (axis segments and
// dilated triangles).
Rat default_search_budget(const ConvexDomain& omega, long long kmax);

// Runs the path enumeration and minimizes an arbitrary pure evaluation over
// the visited domains, bucketed by exact lattice point count (index L from 1;
// bucket lmax+1 collects everything larger). eval may run concurrently.
std::vector<std::optional<Rat>> min_eval_by_count(
    const ConvexDomain& omega, const Rat& budget, long long lmax,
    const std::function<Rat(const ConvexPolygon&)>& eval, const SearchLimits& limits = {},
    bool parallel = true);

// ---- weight-sequence route ----

// c_k = min{ delta*c - sum alpha_i w_i } over delta, alpha >= 0 subject to
// delta(delta+3)/2 - sum alpha_i(alpha_i+1)/2 >= k, by per-delta dynamic
// programming with an exact termination bound.
Rat capacity_from_weights(const WeightSequence& w, const Int& k, const SearchLimits& limits = {});

CapacitySequence capacities_from_weights(const WeightSequence& w, long long kmax,
                                         const SearchLimits& limits = {});

// cap(r) = 1 + max{ delta(delta+3)/2 - sum alpha_i(alpha_i+1)/2 } subject to
// delta*c - sum alpha_i w_i <= r.
Int cap_from_weights(const WeightSequence& w, const Rat& r, const SearchLimits& limits = {});

// Cap function table on 0..r_max. Entries up to direct_limit come from the
// optimization; beyond that they are extended by the periodic difference
// relation cap(r+lambda) = cap(r) + r + L - 1 (lambda = omega-perimeter of the
// source domain, L its lattice point count), after the relation has been
// verified on the directly computed window.
struct CapTable {
    std::vector<Int> values;  // index r = 0..r_max
    Int direct_limit = 0;     // values[r] for r <= direct_limit are direct
};

CapTable cap_table(const WeightSequence& w, const Int& r_direct, const Int& r_max,
                   const SearchLimits& limits = {});

// Smallest r with cap(r) >= k+1.
Int capacity_from_cap_table(const CapTable& t, const Int& k);

struct TightReport {
    bool tight = false;
    Int first_violation = -1;  // smallest r in (r0, horizon] with cap(r) == cap(r-1)
};

// Checks that the cap function is strictly increasing on (r0, horizon].
TightReport is_tightly_constrained(const WeightSequence& w, const Int& r0, const Int& horizon,
                                   const SearchLimits& limits = {});

// cap of a domain q * Omega' at r, reduced to the primitive domain Omega':
// capacities of the scaled domain are q times integers, so
// cap(r) = cap'(floor(r/q)).
Int cap_scale_reduce(const ConvexDomain& omega, const Int& q, const Rat& r,
                     const SearchLimits& limits = {});

// c_0..c_kmax of a disjoint union: max over k_1+...+k_n = k of sum c_{k_i}.
std::vector<Rat> disjoint_union_capacities(const std::vector<CapacitySequence>& parts,
                                           long long kmax);

// ---- free domains ----

// Minimum dual-norm boundary length over all lattice polygons (any position;
// the value is translation invariant) with exactly k+1 lattice points.
Rat free_capacity_bruteforce(const ConvexDomain& omega, long long k,
                             const SearchLimits& limits = {});

// The dual-norm minimizers (with ties) for every lattice-count class
// 1..k+1, deduplicated up to lattice translation; shared with the toric
// cross-check, which re-evaluates them with its own objective.
std::vector<ConvexPolygon> free_candidate_polygons(const ConvexDomain& omega, long long k,
                                                   const SearchLimits& limits = {});

// Compact form of the same candidate set: the loop's vertices translated into
// the first quadrant, plus its lattice point count.
struct FreeCandidate {
    std::vector<std::array<long long, 2>> chain;
    long long lattice_count = 1;
};
std::vector<FreeCandidate> free_candidate_loops(const ConvexDomain& omega, long long k,
                                                const SearchLimits& limits = {});
ConvexPolygon free_candidate_polygon(const FreeCandidate& cand);

}  // namespace ech
