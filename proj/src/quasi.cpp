#include "ech/quasi.hpp"

#include <algorithm>
#include <functional>

#include "ech/toric.hpp"

#include <boost/integer/common_factor.hpp>

namespace ech {

namespace {

// Quadratic through three points with distinct integer abscissae, by divided
// differences.
Quadratic quad_through(const Int& x0, const Rat& y0, const Int& x1, const Rat& y1,
                       const Int& x2, const Rat& y2) {
    Rat f1 = (y1 - y0) / Rat(x1 - x0);
    Rat f2 = ((y2 - y1) / Rat(x2 - x1) - f1) / Rat(x2 - x0);
    Quadratic q;
    q.a2 = f2;
    q.a1 = f1 - f2 * Rat(x0 + x1);
    q.a0 = y0 - f1 * Rat(x0) + f2 * Rat(x0) * Rat(x1);
    return q;
}

}  // namespace

Quadratic ehrhart_polynomial(const ConvexPolygon& P) {
    if (P.is_degenerate() || !is_lattice_polygon(P))
        throw std::invalid_argument("ehrhart_polynomial: needs a non-degenerate lattice polygon");
    Quadratic q{area2(P) / 2, Rat(boundary_lattice_count(P)) / 2, 1};
    for (Int x = 0; x <= 4; ++x)
        if (Rat(lattice_point_count(dilate(P, Rat(x)))) != q.eval(x))
            throw std::logic_error("ehrhart_polynomial: verification against counts failed");
    return q;
}

Quasipolynomial ehrhart_quasipolynomial(const ConvexPolygon& P) {
    if (P.is_degenerate())
        throw std::invalid_argument("ehrhart_quasipolynomial: degenerate polygon");
    Int period = 1;
    for (const auto& v : P.vertices()) {
        period = boost::integer::lcm(period, rat_den(v.x));
        period = boost::integer::lcm(period, rat_den(v.y));
    }
    Quasipolynomial qp;
    qp.period = period;
    for (Int r = 0; r < period; ++r) {
        std::array<Int, 5> xs;
        std::array<Rat, 5> ys;
        for (int t = 0; t < 5; ++t) {
            xs[t] = r + period * t;
            ys[t] = Rat(lattice_point_count(dilate(P, Rat(xs[t]))));
        }
        Quadratic q = quad_through(xs[0], ys[0], xs[1], ys[1], xs[2], ys[2]);
        for (int t = 3; t < 5; ++t)
            if (q.eval(xs[t]) != ys[t])
                throw std::logic_error("ehrhart_quasipolynomial: verification failed");
        qp.pieces.push_back(q);
        qp.onset.push_back(0);
    }
    return qp;
}

QuasiFitReport cap_quasifit(const ConvexDomain& omega, long long window,
                            const SearchLimits& limits) {
    if (window < 5) throw std::invalid_argument("cap_quasifit: window must be at least 5");
    WeightSequence w = weight_sequence(omega);
    Int g = weights_gcd(w);
    if (g > 1)
        throw std::invalid_argument("cap_quasifit: weight gcd is " + g.str() +
                                    " > 1; reduce the domain by that factor first");
    Int lambda = weights_area2(w);
    QuasiFitReport rep;
    rep.lambda = lambda;
    long long lam = lambda.convert_to<long long>();
    // One shared table cap(0 .. lambda*window - 1).
    std::vector<Int> cap(static_cast<size_t>(lam * window));
    for (long long s = 0; s < lam * window; ++s)
        cap[static_cast<size_t>(s)] = cap_from_weights(w, Rat(s), limits);
    rep.tight = true;
    for (long long s = 1; s < lam * window; ++s) {
        if (cap[static_cast<size_t>(s)] <= cap[static_cast<size_t>(s - 1)]) {
            rep.tight = false;
            rep.first_violation = s;
            break;
        }
    }
    Rat vol = Rat(lambda) / 2;
    Rat half_bnd = Rat(boundary_lattice_count(omega.polygon)) / 2;
    for (long long r = 0; r < lam; ++r) {
        ResidueFit fit;
        fit.residue = r;
        auto y = [&](long long x) { return Rat(cap[static_cast<size_t>(r + lam * x)]); };
        fit.piece = quad_through(Int(window - 3), y(window - 3), Int(window - 2), y(window - 2),
                                 Int(window - 1), y(window - 1));
        long long onset = window - 3;
        while (onset > 0 && fit.piece.eval(Int(onset - 1)) == y(onset - 1)) --onset;
        fit.onset = onset;
        fit.fitted = (window - onset) >= 4;
        fit.gamma = fit.piece.a0 - 1;
        fit.matched_form =
            fit.fitted && fit.piece.a2 == vol && fit.piece.a1 == half_bnd + Rat(r);
        rep.fits.push_back(std::move(fit));
    }
    return rep;
}

CheckReport verify_hilbert_match(const ConvexDomain& omega, long long x_max) {
    ToricDivisor d = balance_divisor(omega);
    CheckReport rep;
    rep.ok = true;
    for (long long x = 0; x <= x_max; ++x) {
        Int lhs = h0(Rat(x) * d);
        Int rhs = lattice_point_count(dilate(omega.polygon, Rat(x)));
        if (lhs != rhs) {
            rep.ok = false;
            rep.detail += "x=" + std::to_string(x) + ": h0=" + lhs.str() +
                          " count=" + rhs.str() + "; ";
        }
    }
    if (rep.ok) rep.detail = "h0(x D) = L(x Omega) for x = 0.." + std::to_string(x_max);
    return rep;
}

CheckReport verify_optimal_path(const ConvexDomain& omega, long long r_max,
                                const SearchLimits& limits) {
    Rat lambda = area2(omega.polygon);
    CheckReport rep;
    rep.ok = true;
    for (long long r = 1; r <= r_max; ++r) {
        Int lhs = cap_bruteforce(omega, Rat(r) * lambda, limits);
        Int rhs = lattice_point_count(dilate(omega.polygon, Rat(r)));
        if (lhs != rhs) {
            rep.ok = false;
            rep.detail += "r=" + std::to_string(r) + ": cap=" + lhs.str() +
                          " count=" + rhs.str() + "; ";
        }
    }
    if (rep.ok) rep.detail = "cap(r lambda) = L(r Omega) for r = 1.." + std::to_string(r_max);
    return rep;
}

AsymptoticsReport asymptotics_report(const ConvexDomain& omega, long long k_max,
                                     const SearchLimits& limits) {
    WeightSequence w = weight_sequence(omega);
    AsymptoticsReport rep;
    rep.four_vol = 2 * area2(omega.polygon);
    std::vector<long long> ks{0};
    for (long long k = 1; k < k_max; k = std::max(k + 1, k * 2)) ks.push_back(k);
    if (k_max > 0) ks.push_back(k_max);
    for (long long k : ks) {
        AsymptoticRow row;
        row.k = k;
        row.ck = capacity_from_weights(w, Int(k), limits);
        if (k > 0) row.ratio = row.ck * row.ck / Rat(k);
        rep.rows.push_back(row);
    }
    const auto& last = rep.rows.back();
    if (last.ratio) {
        Rat dev = *last.ratio / rep.four_vol - 1;
        if (dev < 0) dev = -dev;
        rep.final_deviation = dev.convert_to<double>();
    }
    return rep;
}

MixedSweepResult conjecture_mixed_sweep(const ConvexDomain& omega, const Int& r, long long x_max,
                                        long long radius, const SearchLimits& limits) {
    WeightSequence w = weight_sequence(omega);
    Int lambda = weights_area2(w);
    std::vector<Int> want;
    for (long long x = 0; x <= x_max; ++x)
        want.push_back(cap_from_weights(w, Rat(r + lambda * x), limits));
    std::vector<ConvexPolygon> dilates;
    for (long long x = 0; x <= x_max; ++x) dilates.push_back(dilate(omega.polygon, Rat(x)));
    MixedSweepResult res;
    const long long maxv = 6;
    for (long long rho = 0; rho <= radius; ++rho) {
        std::vector<Point2> grid;
        for (long long x = -rho; x <= rho; ++x)
            for (long long y = -rho; y <= rho; ++y) grid.push_back({x, y});
        std::vector<size_t> pick;
        bool found = false;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (found) return;
            if (!pick.empty()) {
                std::vector<Point2> pts;
                bool fresh = rho == 0;
                for (size_t i : pick) {
                    const Point2& p = grid[i];
                    pts.push_back(p);
                    Rat ax = p.x < 0 ? -p.x : p.x, ay = p.y < 0 ? -p.y : p.y;
                    if (ax == rho || ay == rho) fresh = true;  // not tried at smaller radius
                }
                if (fresh) {
                    ++res.tried;
                    if (res.tried * (x_max + 1) > limits.max_nodes)
                        throw BudgetExceeded("conjecture_mixed_sweep: candidate budget exceeded");
                    ConvexPolygon cand = ConvexPolygon::from_points(pts);
                    bool ok = true;
                    for (long long x = 0; x <= x_max && ok; ++x)
                        ok = lattice_point_count(minkowski_sum(cand, dilates[static_cast<size_t>(x)])) ==
                             want[static_cast<size_t>(x)];
                    if (ok) {
                        res.found = true;
                        res.candidate = std::move(cand);
                        res.radius = rho;
                        found = true;
                        return;
                    }
                }
            }
            if (pick.size() == static_cast<size_t>(maxv)) return;
            for (size_t i = start; i < grid.size() && !found; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        if (found) return res;
    }
    res.radius = radius;
    return res;
}

std::vector<GcdSweepEntry> conjecture_gcd_sweep(
    const std::vector<std::pair<std::string, WeightSequence>>& corpus, const Int& horizon,
    const SearchLimits& limits) {
    std::vector<GcdSweepEntry> out;
    for (const auto& [name, w] : corpus) {
        GcdSweepEntry e;
        e.name = name;
        e.gcd = weights_gcd(w);
        if (e.gcd != 1) {
            e.status = GcdSweepStatus::excluded;
            out.push_back(std::move(e));
            continue;
        }
        // Classify every gcd-1 entry empirically.  Having a unit weight does
        // not by itself force a lower bound of zero (an ellipsoid like E(2,3)
        // has unit weights but skips capacity 1), so the unit_weight status is
        // only reported when the cap function is strictly increasing from the
        // start of the window.
        Int last_violation = -1;
        Int prev = cap_from_weights(w, Rat(0), limits);
        for (Int r = 1; r <= horizon; ++r) {
            Int cur = cap_from_weights(w, Rat(r), limits);
            if (cur <= prev) last_violation = r;
            prev = cur;
        }
        if (last_violation < 0) {
            e.status = has_unit_weight(w) ? GcdSweepStatus::unit_weight : GcdSweepStatus::found;
            e.r0 = 0;
        } else if (last_violation < horizon) {
            e.status = GcdSweepStatus::found;
            e.r0 = last_violation;
        } else {
            e.status = GcdSweepStatus::open;
            e.r0 = horizon;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ech
