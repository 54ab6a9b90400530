#pragma once

#include "ech/capacity.hpp"
#include "ech/weights.hpp"

namespace ech {

struct Quadratic {
    Rat a2, a1, a0;

    Rat eval(const Int& x) const { return a2 * Rat(x) * Rat(x) + a1 * Rat(x) + a0; }
    bool operator==(const Quadratic&) const = default;
};

struct Quasipolynomial {
    Int period = 1;
    std::vector<Quadratic> pieces;  // one per residue
    std::vector<Int> onset;         // validity threshold per residue
};

// L(x) = Vol * x^2 + (boundary count / 2) * x + 1, verified against direct
// lattice counts of dilates at x = 0..4 (throws std::logic_error otherwise).
Quadratic ehrhart_polynomial(const ConvexPolygon& P);

// Quasipolynomial of a rational polygon, period = lcm of vertex denominators.
// Each piece is fitted from three exact counts and verified on two more.
Quasipolynomial ehrhart_quasipolynomial(const ConvexPolygon& P);

struct ResidueFit {
    Int residue;
    bool fitted = false;        // a quadratic matched a long-enough suffix
    Quadratic piece;            // cap(r + lambda*x) as a polynomial in x
    Int onset = 0;              // first x from which the piece is exact
    Rat gamma;                  // constant term minus one
    bool matched_form = false;  // piece == ehr(x) + r*x + gamma
};

struct QuasiFitReport {
    Int lambda = 0;
    bool tight = false;   // cap strictly increasing on the checked window
    Int first_violation = -1;
    std::vector<ResidueFit> fits;
};

// Fits cap(r + lambda*x) per residue over x = 0..window-1 using exact
// interpolation on the last three points and a backward exact-match scan.
// Refuses weight sequences with gcd > 1 (reduce through cap_scale_reduce).
QuasiFitReport cap_quasifit(const ConvexDomain& omega, long long window,
                            const SearchLimits& limits = {});

struct CheckReport {
    bool ok = false;
    std::string detail;
};

// h0 of multiples of the balance divisor against lattice counts of dilates.
CheckReport verify_hilbert_match(const ConvexDomain& omega, long long x_max);

// cap(r * lambda) = lattice count of the r-fold dilate, by brute force.
CheckReport verify_optimal_path(const ConvexDomain& omega, long long r_max,
                                const SearchLimits& limits = {});

struct AsymptoticRow {
    Int k;
    Rat ck;
    std::optional<Rat> ratio;  // ck^2 / k, absent at k = 0
};

struct AsymptoticsReport {
    std::vector<AsymptoticRow> rows;
    Rat four_vol;
    double final_deviation = 0.0;  // |ck^2/(4 Vol k) - 1| at the last row
};

AsymptoticsReport asymptotics_report(const ConvexDomain& omega, long long k_max,
                                     const SearchLimits& limits = {});

struct MixedSweepResult {
    bool found = false;
    std::optional<ConvexPolygon> candidate;
    long long tried = 0;
    long long radius = 0;  // search bound that was exhausted or succeeded
};

// EXPERIMENTAL: searches for a lattice polygon K with
// |(K + x*Omega) ∩ Z^2| = cap(r + lambda*x) for all x = 0..x_max, among
// polygons with vertex coordinates bounded by the radius.
MixedSweepResult conjecture_mixed_sweep(const ConvexDomain& omega, const Int& r, long long x_max,
                                        long long radius, const SearchLimits& limits = {});

enum class GcdSweepStatus { excluded, unit_weight, found, open };

struct GcdSweepEntry {
    std::string name;
    GcdSweepStatus status = GcdSweepStatus::open;
    Int gcd = 1;
    Int r0 = 0;  // smallest bound after which cap increases strictly (empirical)
};

// EXPERIMENTAL: for weight sequences with gcd 1 and no unit weight, searches
// for an r0 <= horizon past which the cap function strictly increases.
std::vector<GcdSweepEntry> conjecture_gcd_sweep(
    const std::vector<std::pair<std::string, WeightSequence>>& corpus, const Int& horizon,
    const SearchLimits& limits = {});

}  // namespace ech
