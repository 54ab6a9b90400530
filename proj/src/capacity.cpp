#include "ech/capacity.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include <boost/integer/common_factor.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ech {

namespace {

Int tri(const Int& n) { return n * (n + 1) / 2; }      // 1 + 2 + ... + n
Int tri2(const Int& d) { return d * (d + 3) / 2; }     // index budget at delta = d

long long to_ll(const Int& n) { return n.convert_to<long long>(); }


}  // namespace

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------

Rat ball_capacity(const Rat& q, const Int& k) {
    if (q <= 0 || k < 0) throw std::invalid_argument("ball_capacity: need q > 0, k >= 0");
    // d = largest integer with d(d+1)/2 <= k
    Int d = (sqrt(Int(8 * k + 1)) - 1) / 2;
    while (tri(d + 1) <= k) ++d;
    while (d > 0 && tri(d) > k) --d;
    return Rat(d) * q;
}

Rat ellipsoid_capacity(const Rat& a, const Rat& b, const Int& k) {
    if (a <= 0 || b <= 0 || k < 0)
        throw std::invalid_argument("ellipsoid_capacity: need a, b > 0, k >= 0");
    // Everything we need is bounded by the ball value for q = max(a,b).
    Rat bound = ball_capacity(std::max(a, b), k);
    long long mmax = to_ll(floor_rat(bound / a));
    long long nmax = to_ll(floor_rat(bound / b));
    std::vector<Rat> vals;
    vals.reserve(static_cast<size_t>((mmax + 1) * (nmax + 1)));
    for (long long m = 0; m <= mmax; ++m)
        for (long long n = 0; n <= nmax; ++n) {
            Rat v = a * m + b * n;
            if (v <= bound) vals.push_back(std::move(v));
        }
    std::sort(vals.begin(), vals.end());
    if (k >= Int(vals.size()))
        throw std::logic_error("ellipsoid_capacity: bound undercount");
    return vals[static_cast<size_t>(to_ll(k))];
}

// ---------------------------------------------------------------------------
// brute-force path enumeration
// ---------------------------------------------------------------------------

namespace {

// Number of lattice points of the domain bounded by the axes and the given
// path chain (chain runs from (0, b) on the vertical axis to (x, 0)), by
// Pick's theorem on the cycle closed through the origin. The degenerate
// point / segment chains come out right because the cycle covers them twice.
Int chain_lattice_count(const std::vector<Point2>& chain) {
    Int a2 = 0, bnd = 0;
    Point2 prev{0, 0};
    auto step = [&](const Point2& v) {
        a2 += rat_num(cross(prev, v));
        Int dx = rat_num(v.x - prev.x), dy = rat_num(v.y - prev.y);
        bnd += boost::integer::gcd(Int(abs(dx)), Int(abs(dy)));
        prev = v;
    };
    for (const auto& v : chain) step(v);
    step({0, 0});
    if (a2 < 0) a2 = -a2;
    return (a2 + bnd) / 2 + 1;
}

using EmitFn = std::function<void(const std::vector<Point2>&, const Rat&)>;

struct PathSearch {
    const ConvexDomain& omega;
    Rat budget;
    Rat wdesc;  // cost of one unit of descent: max x over omega
    Rat baxis;  // cost of one unit of width: top of omega's vertical edge
    long long wmax = 0, hmax = 0;
    long long max_nodes;

    PathSearch(const ConvexDomain& om, const Rat& u, const SearchLimits& lim)
        : omega(om), budget(u), max_nodes(lim.max_nodes) {
        if (om.is_free)
            throw std::invalid_argument("path search: requires a standard domain");
        if (om.polygon.is_degenerate())
            throw std::invalid_argument("path search: degenerate domain");
        wdesc = omega_length(om, {0, -1});
        baxis = 0;
        for (const auto& v : om.polygon.vertices())
            if (v.x == 0 && v.y > baxis) baxis = v.y;
        if (wdesc <= 0 || baxis <= 0)
            throw std::invalid_argument("path search: domain must meet both axes");
        if (budget < 0) throw std::invalid_argument("path search: negative budget");
        Int wb = floor_rat(budget / baxis), hb = floor_rat(budget / wdesc);
        if (wb > 2'000'000 || hb > 2'000'000)
            throw BudgetExceeded("path search: bounding box too large");
        wmax = to_ll(wb);
        hmax = to_ll(hb);
    }
};

struct NodeBudget {
    long long local = 0;
    std::atomic<long long>* shared = nullptr;
    long long max_nodes = 0;
    std::atomic<bool>* abort = nullptr;

    void tick() {
        // The local count never exceeds the global one, so this cheap check
        // also catches tiny budgets that a batched update would skip over.
        if (++local > max_nodes) throw BudgetExceeded("path search: node budget exceeded");
        if (shared && local % 8192 == 0) {
            long long total = shared->fetch_add(8192) + 8192;
            if (total > max_nodes || (abort && abort->load(std::memory_order_relaxed)))
                throw BudgetExceeded("path search: node budget exceeded");
        }
    }
};

void dfs(const PathSearch& ps, std::vector<Point2>& chain, Point2 prev, Rat cost,
         NodeBudget& nb, const EmitFn& out) {
    nb.tick();
    const Point2 cur = chain.back();
    if (cur.y == 0 && chain.size() >= 2) {
        out(chain, cost);
        return;
    }
    long long x = to_ll(rat_num(cur.x)), y = to_ll(rat_num(cur.y));
    for (long long dx = 0; x + dx <= ps.wmax; ++dx) {
        long long dytop = dx == 0 ? -1 : ps.hmax - y;
        for (long long dy = dytop; dy >= -y; --dy) {
            Point2 e{dx, dy};
            if (cross(prev, e) >= 0) continue;  // slopes must strictly decrease
            Rat ec = omega_length(ps.omega, e);
            // Every remaining unit of descent will cost at least wdesc.
            if (cost + ec + Rat(y + dy) * ps.wdesc > ps.budget) continue;
            chain.push_back(cur + e);
            dfs(ps, chain, e, cost + ec, nb, out);
            chain.pop_back();
        }
    }
}

// Degenerate domains on the vertical axis (the point and the axis segments),
// emitted outside the DFS.
void emit_axis_degenerates(const PathSearch& ps, const EmitFn& out) {
    std::vector<Point2> chain{{0, 0}};
    out(chain, 0);
    for (long long b0 = 1; b0 <= ps.hmax; ++b0) {
        Rat cost = Rat(b0) * ps.wdesc;  // traversed down and back up
        if (cost > ps.budget) break;
        chain = {{0, 0}, {0, b0}};
        out(chain, cost);
    }
}

struct RootTask {
    long long b0;
    Point2 e1;
    Rat cost1;
};

std::vector<RootTask> root_tasks(const PathSearch& ps) {
    std::vector<RootTask> tasks;
    const Point2 up{0, 1};
    for (long long b0 = 0; b0 <= ps.hmax; ++b0) {
        for (long long dx = 1; dx <= ps.wmax; ++dx) {
            for (long long dy = ps.hmax - b0; dy >= -b0; --dy) {
                Point2 e{dx, dy};
                if (cross(up, e) >= 0) continue;
                Rat ec = omega_length(ps.omega, e);
                if (ec + Rat(b0 + dy) * ps.wdesc > ps.budget) continue;
                tasks.push_back({b0, e, ec});
            }
        }
    }
    return tasks;
}

void run_task(const PathSearch& ps, const RootTask& t, NodeBudget& nb, const EmitFn& out) {
    std::vector<Point2> chain{{0, t.b0}, {Rat(t.e1.x), Rat(t.b0) + t.e1.y}};
    dfs(ps, chain, t.e1, t.cost1, nb, out);
}

void run_serial(const PathSearch& ps, const EmitFn& out) {
    emit_axis_degenerates(ps, out);
    NodeBudget nb;
    nb.max_nodes = ps.max_nodes;
    for (const auto& t : root_tasks(ps)) run_task(ps, t, nb, out);
}

// Runs the search with a per-thread accumulator A. A needs: A(const A&) copy
// of an empty template, visit(chain, cost), merge(const A&).
template <class A>
void run_search(const PathSearch& ps, A& acc, bool parallel) {
    EmitFn into_acc = [&acc](const std::vector<Point2>& chain, const Rat& cost) {
        acc.visit(chain, cost);
    };
    emit_axis_degenerates(ps, into_acc);
    std::vector<RootTask> tasks = root_tasks(ps);
#ifdef _OPENMP
    if (parallel) {
        std::atomic<long long> shared_nodes{0};
        std::atomic<bool> abort{false};
        const A empty = acc;
#pragma omp parallel
        {
            A local = empty;
            NodeBudget nb;
            nb.shared = &shared_nodes;
            nb.max_nodes = ps.max_nodes;
            nb.abort = &abort;
            EmitFn out = [&local](const std::vector<Point2>& chain, const Rat& cost) {
                local.visit(chain, cost);
            };
#pragma omp for schedule(dynamic)
            for (long long i = 0; i < static_cast<long long>(tasks.size()); ++i) {
                if (abort.load(std::memory_order_relaxed)) continue;
                try {
                    NodeBudget tnb = nb;
                    tnb.local = 0;
                    run_task(ps, tasks[static_cast<size_t>(i)], tnb, out);
                } catch (const BudgetExceeded&) {
                    abort.store(true);
                }
            }
#pragma omp critical
            acc.merge(local);
        }
        if (abort.load()) throw BudgetExceeded("path search: node budget exceeded");
        return;
    }
#else
    (void)parallel;
#endif
    NodeBudget nb;
    nb.max_nodes = ps.max_nodes;
    for (const auto& t : tasks) run_task(ps, t, nb, into_acc);
}

struct BestByCountAcc {
    long long lmax = 0;  // largest lattice point count of interest
    std::vector<std::optional<Rat>> best;  // index L = 1..lmax

    explicit BestByCountAcc(long long l) : lmax(l), best(static_cast<size_t>(l) + 1) {}

    void visit(const std::vector<Point2>& chain, const Rat& cost) {
        Int L = chain_lattice_count(chain);
        if (L > lmax) return;
        auto& slot = best[static_cast<size_t>(to_ll(L))];
        if (!slot || cost < *slot) slot = cost;
    }
    void merge(const BestByCountAcc& o) {
        for (size_t i = 0; i < best.size(); ++i)
            if (o.best[i] && (!best[i] || *o.best[i] < *best[i])) best[i] = o.best[i];
    }
};

struct MaxCountAcc {
    Int best = 0;
    void visit(const std::vector<Point2>& chain, const Rat&) {
        Int L = chain_lattice_count(chain);
        if (L > best) best = L;
    }
    void merge(const MaxCountAcc& o) {
        if (o.best > best) best = o.best;
    }
};

// Cheap feasible candidates with exactly L lattice points: axis segments and
// the smallest dilated standard triangle. Used to seed the search budget.
Rat incumbent_for_count(const ConvexDomain& omega, long long L) {
    if (L <= 1) return 0;
    Rat h = omega_length(omega, {1, 0});   // horizontal segment unit cost
    Rat w = omega_length(omega, {0, -1});  // vertical segment unit cost
    Rat best = Rat(L - 1) * std::min(h, w);
    Int n = 0;
    while (tri2(n) + 1 < L) ++n;  // (n+1)(n+2)/2 >= L
    Rat tcost = Rat(n) * (omega_length(omega, {1, -1}) + omega_length(omega, {0, 1}) +
                          omega_length(omega, {-1, 0}));
    return std::min(best, tcost);
}

}  // namespace

Rat default_search_budget(const ConvexDomain& omega, long long kmax) {
    Rat budget = 0;
    for (long long L = 1; L <= kmax + 1; ++L)
        budget = std::max(budget, incumbent_for_count(omega, L));
    return budget;
}

namespace {

struct MinEvalAcc {
    long long lmax = 0;
    const std::function<Rat(const ConvexPolygon&)>* eval = nullptr;
    std::vector<std::optional<Rat>> best;  // index L = 1..lmax, overflow at lmax+1

    MinEvalAcc(long long l, const std::function<Rat(const ConvexPolygon&)>& e)
        : lmax(l), eval(&e), best(static_cast<size_t>(l) + 2) {}

    void visit(const std::vector<Point2>& chain, const Rat&) {
        Int L = chain_lattice_count(chain);
        size_t idx = L > lmax ? static_cast<size_t>(lmax) + 1
                              : static_cast<size_t>(to_ll(L));
        std::vector<Point2> pts = chain;
        pts.push_back({0, 0});
        Rat v = (*eval)(ConvexPolygon::from_points(pts));
        auto& slot = best[idx];
        if (!slot || v < *slot) slot = v;
    }
    void merge(const MinEvalAcc& o) {
        for (size_t i = 0; i < best.size(); ++i)
            if (o.best[i] && (!best[i] || *o.best[i] < *best[i])) best[i] = o.best[i];
    }
};

}  // namespace

std::vector<std::optional<Rat>> min_eval_by_count(
    const ConvexDomain& omega, const Rat& budget, long long lmax,
    const std::function<Rat(const ConvexPolygon&)>& eval, const SearchLimits& limits,
    bool parallel) {
    PathSearch ps(omega, budget, limits);
    MinEvalAcc acc(lmax, eval);
    run_search(ps, acc, parallel);
    return acc.best;
}

void enumerate_path_domains(const ConvexDomain& omega, const Rat& budget,
                            const std::function<void(const ConvexPolygon&, const Rat&)>& visit,
                            const SearchLimits& limits) {
    PathSearch ps(omega, budget, limits);
    run_serial(ps, [&](const std::vector<Point2>& chain, const Rat& cost) {
        std::vector<Point2> pts = chain;
        pts.push_back({0, 0});
        visit(ConvexPolygon::from_points(pts), cost);
    });
}

CapacitySequence capacities_bruteforce(const ConvexDomain& omega, long long kmax,
                                       const SearchLimits& limits, bool parallel) {
    if (kmax < 0) throw std::invalid_argument("capacities_bruteforce: kmax < 0");
    Rat budget = 0;
    for (long long L = 1; L <= kmax + 1; ++L)
        budget = std::max(budget, incumbent_for_count(omega, L));
    PathSearch ps(omega, budget, limits);
    BestByCountAcc acc(kmax + 1);
    run_search(ps, acc, parallel);
    CapacitySequence seq;
    seq.source = CapacitySource::bruteforce;
    seq.values.reserve(static_cast<size_t>(kmax) + 1);
    for (long long k = 0; k <= kmax; ++k) {
        const auto& slot = acc.best[static_cast<size_t>(k) + 1];
        if (!slot) throw std::logic_error("capacities_bruteforce: missing count class");
        seq.values.push_back(*slot);
    }
    return seq;
}

Rat capacity_bruteforce(const ConvexDomain& omega, long long k, const SearchLimits& limits,
                        bool parallel) {
    return capacities_bruteforce(omega, k, limits, parallel).values.back();
}

Int cap_bruteforce(const ConvexDomain& omega, const Rat& r, const SearchLimits& limits,
                   bool parallel) {
    if (r < 0) throw std::invalid_argument("cap_bruteforce: r < 0");
    PathSearch ps(omega, r, limits);
    MaxCountAcc acc;
    run_search(ps, acc, parallel);
    return acc.best;
}

// ---------------------------------------------------------------------------
// weight-sequence optimization
// ---------------------------------------------------------------------------

namespace {

struct WeightOpt {
    Int c;
    std::vector<Int> ws;  // merged a- and b-weights
    Int w2 = 0;           // sum of squares
    Int lam = 0;          // c^2 - w2 = twice the domain area

    explicit WeightOpt(const WeightSequence& w) : c(w.c) {
        if (c < 1) throw std::invalid_argument("weight optimization: c < 1");
        ws.insert(ws.end(), w.a.begin(), w.a.end());
        ws.insert(ws.end(), w.b.begin(), w.b.end());
        for (const auto& x : ws) {
            if (x < 1) throw std::invalid_argument("weight optimization: weight < 1");
            w2 += x * x;
        }
        lam = c * c - w2;
        if (lam <= 0) throw std::invalid_argument("weight optimization: invalid sequence");
    }

    // max of sum alpha_i * w_i subject to sum tri(alpha_i) <= t.
    Int best_gain(const Int& t, const SearchLimits& limits) const {
        if (t <= 0 || ws.empty()) return 0;
        long long tl = to_ll(t);
        if (tl + 1 > limits.max_table)
            throw BudgetExceeded("weight optimization: DP table too large");
        std::vector<Int> g(static_cast<size_t>(tl) + 1, 0);
        for (const auto& w : ws) {
            std::vector<Int> ng = g;
            for (long long a = 1; tri(Int(a)) <= tl; ++a) {
                Int costa = tri(Int(a));
                Int gain = Int(a) * w;
                for (long long s = to_ll(costa); s <= tl; ++s) {
                    Int cand = g[static_cast<size_t>(s - to_ll(costa))] + gain;
                    if (cand > ng[static_cast<size_t>(s)]) ng[static_cast<size_t>(s)] = cand;
                }
            }
            g = std::move(ng);
        }
        return g.back();
    }

    // min of sum tri(alpha_i) subject to sum alpha_i * w_i >= s.
    Int min_cost_cover(const Int& s, const SearchLimits& limits) const {
        if (s <= 0) return 0;
        if (ws.empty()) return -1;  // infeasible
        long long sl = to_ll(s);
        if (sl + 1 > limits.max_table)
            throw BudgetExceeded("weight optimization: DP table too large");
        const Int inf = -1;
        std::vector<Int> dp(static_cast<size_t>(sl) + 1, inf);
        dp[0] = 0;
        for (const auto& w : ws) {
            std::vector<Int> ndp = dp;
            long long amax = (sl + to_ll(w) - 1) / to_ll(w);
            for (long long a = 1; a <= amax; ++a) {
                Int costa = tri(Int(a));
                long long reach = a * to_ll(w);
                for (long long t = 1; t <= sl; ++t) {
                    long long from = std::max<long long>(0, t - reach);
                    const Int& base = dp[static_cast<size_t>(from)];
                    if (base < 0) continue;
                    Int cand = base + costa;
                    auto& slot = ndp[static_cast<size_t>(t)];
                    if (slot < 0 || cand < slot) slot = cand;
                }
            }
            dp = std::move(ndp);
        }
        return dp.back();
    }
};

}  // namespace

Rat capacity_from_weights(const WeightSequence& w, const Int& k, const SearchLimits& limits) {
    if (k < 0) throw std::invalid_argument("capacity_from_weights: k < 0");
    WeightOpt opt(w);
    Int delta = 0;
    while (tri2(delta) < k) ++delta;
    std::optional<Int> inc;
    for (long long iter = 0;; ++iter, ++delta) {
        if (iter > limits.max_delta)
            throw BudgetExceeded("capacity_from_weights: iteration budget exceeded",
                                 inc ? std::optional<Rat>(Rat(*inc)) : std::nullopt);
        Int t = tri2(delta) - k;
        Int val = delta * opt.c - opt.best_gain(t, limits);
        if (!inc || val < *inc) inc = val;
        // Lower bound for this and later delta: delta*c - sqrt(2*t*w2).
        // Stop once it can no longer undercut the incumbent and is rising.
        Int dc = delta * opt.c;
        if (dc >= *inc) {
            Int phi = (dc - *inc) * (dc - *inc) - 2 * t * opt.w2;
            bool rising = 2 * delta * opt.lam >= 2 * *inc * opt.c + 3 * opt.w2;
            if (phi >= 0 && rising) break;
        }
    }
    return Rat(*inc);
}

CapacitySequence capacities_from_weights(const WeightSequence& w, long long kmax,
                                         const SearchLimits& limits) {
    CapacitySequence seq;
    seq.source = CapacitySource::weights;
    for (long long k = 0; k <= kmax; ++k)
        seq.values.push_back(capacity_from_weights(w, Int(k), limits));
    return seq;
}

Int cap_from_weights(const WeightSequence& w, const Rat& r, const SearchLimits& limits) {
    if (r < 0) throw std::invalid_argument("cap_from_weights: r < 0");
    WeightOpt opt(w);
    Int rr = floor_rat(r);
    Int best = -1;
    for (long long iter = 0;; ++iter) {
        if (iter > limits.max_delta)
            throw BudgetExceeded("cap_from_weights: iteration budget exceeded");
        Int delta = iter;
        Int s = delta * opt.c - rr;
        if (s <= 0) {
            if (tri2(delta) > best) best = tri2(delta);
            continue;
        }
        if (opt.ws.empty()) break;  // no gains possible past delta*c <= r
        Int cover = opt.min_cost_cover(s, limits);
        if (cover >= 0) {
            Int cand = tri2(delta) - cover;
            if (cand > best) best = cand;
        }
        // Upper bound 2*w2*C <= w2*delta*(delta+3) - s^2; stop once it is at
        // or below the incumbent and decreasing (it is eventually concave
        // decreasing since w2 < c^2).
        Int h2 = opt.w2 * delta * (delta + 3) - s * s;
        Int s1 = s + opt.c;
        Int h2next = opt.w2 * (delta + 1) * (delta + 4) - s1 * s1;
        if (h2 <= 2 * opt.w2 * best && h2next <= h2) break;
    }
    return best + 1;
}

CapTable cap_table(const WeightSequence& w, const Int& r_direct, const Int& r_max,
                   const SearchLimits& limits) {
    Int lam = weights_area2(w);
    Int lcount = weights_lattice_count(w);
    if (lam <= 0) throw std::invalid_argument("cap_table: invalid weight sequence");
    CapTable t;
    Int direct = std::min(r_direct, r_max);
    t.direct_limit = direct;
    for (Int r = 0; r <= direct; ++r) t.values.push_back(cap_from_weights(w, Rat(r), limits));
    if (r_max > direct) {
        if (direct < 2 * lam)
            throw std::invalid_argument("cap_table: direct window too short to verify period");
        // cap(s + lam) = cap(s) + s + L - 1 must already hold on the last
        // verified period before we extrapolate with it.
        for (Int s = direct - 2 * lam; s <= direct - lam; ++s) {
            size_t i = static_cast<size_t>(to_ll(s));
            size_t j = static_cast<size_t>(to_ll(s + lam));
            if (t.values[j] != t.values[i] + s + lcount - 1)
                throw std::logic_error("cap_table: difference relation fails on window");
        }
        for (Int r = direct + 1; r <= r_max; ++r) {
            Int s = r - lam;
            size_t i = static_cast<size_t>(to_ll(s));
            t.values.push_back(t.values[i] + s + lcount - 1);
        }
    }
    return t;
}

Int capacity_from_cap_table(const CapTable& t, const Int& k) {
    Int target = k + 1;
    long long lo = 0, hi = static_cast<long long>(t.values.size()) - 1;
    if (hi < 0 || t.values.back() < target)
        throw std::invalid_argument("capacity_from_cap_table: table too short");
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        if (t.values[static_cast<size_t>(mid)] >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return Int(lo);
}

TightReport is_tightly_constrained(const WeightSequence& w, const Int& r0, const Int& horizon,
                                   const SearchLimits& limits) {
    TightReport rep;
    rep.tight = true;
    Int start = r0 < 0 ? Int(0) : r0;
    Int prev = cap_from_weights(w, Rat(start), limits);
    for (Int r = start + 1; r <= horizon; ++r) {
        Int cur = cap_from_weights(w, Rat(r), limits);
        if (cur <= prev) {
            rep.tight = false;
            rep.first_violation = r;
            return rep;
        }
        prev = cur;
    }
    return rep;
}

Int cap_scale_reduce(const ConvexDomain& omega, const Int& q, const Rat& r,
                     const SearchLimits& limits) {
    if (q < 1) throw std::invalid_argument("cap_scale_reduce: q < 1");
    if (r < 0) throw std::invalid_argument("cap_scale_reduce: r < 0");
    ConvexPolygon shrunk = dilate(omega.polygon, Rat(1, q));
    if (!is_lattice_polygon(shrunk))
        throw std::invalid_argument("cap_scale_reduce: domain is not q times a lattice domain");
    ConvexDomain reduced = ConvexDomain::standard(shrunk);
    // Capacities of the scaled domain are q times integers, so the cap
    // function is constant between multiples of q.
    return cap_from_weights(weight_sequence(reduced), Rat(floor_rat(r / q)), limits);
}

std::vector<Rat> disjoint_union_capacities(const std::vector<CapacitySequence>& parts,
                                           long long kmax) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union_capacities: no parts");
    for (const auto& p : parts)
        if (static_cast<long long>(p.values.size()) < kmax + 1)
            throw std::invalid_argument("disjoint_union_capacities: part sequence too short");
    std::vector<Rat> acc(parts[0].values.begin(), parts[0].values.begin() + kmax + 1);
    for (size_t p = 1; p < parts.size(); ++p) {
        std::vector<Rat> next(static_cast<size_t>(kmax) + 1);
        for (long long k = 0; k <= kmax; ++k) {
            Rat best = acc[0] + parts[p].values[static_cast<size_t>(k)];
            for (long long i = 1; i <= k; ++i) {
                Rat cand = acc[static_cast<size_t>(i)] +
                           parts[p].values[static_cast<size_t>(k - i)];
                if (cand > best) best = cand;
            }
            next[static_cast<size_t>(k)] = best;
        }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// free domains
// ---------------------------------------------------------------------------

namespace {

// Integer model of the free-domain dual norm: the vertices of
// scale * (omega - centroid) have integer coordinates, and every edge cost is
// measured in 1/scale units so the search runs entirely on machine integers.
struct FreeGrid {
    std::vector<std::array<long long, 2>> verts;
    long long scale = 1;

    explicit FreeGrid(const ConvexDomain& omega) {
        Point2 cen = centroid(omega.polygon);
        std::vector<Point2> shifted;
        Int m = 1;
        for (const auto& u : omega.polygon.vertices()) {
            Point2 d = u - cen;
            m = boost::integer::lcm(m, Int(boost::integer::lcm(rat_den(d.x), rat_den(d.y))));
            shifted.push_back(d);
        }
        scale = m.convert_to<long long>();
        for (const auto& d : shifted)
            verts.push_back({(rat_num(d.x) * m / rat_den(d.x)).convert_to<long long>(),
                             (rat_num(d.y) * m / rat_den(d.y)).convert_to<long long>()});
    }
    long long lam(long long ex, long long ey) const {
        long long best = ex * verts[0][0] + ey * verts[0][1];
        for (size_t i = 1; i < verts.size(); ++i)
            best = std::max(best, ex * verts[i][0] + ey * verts[i][1]);
        return best;
    }
    // Width of the domain in direction e; a positive-definite even norm.
    long long width(long long ex, long long ey) const { return lam(ex, ey) + lam(-ex, -ey); }
};

// Angular order of edge directions, counterclockwise starting from (1,0).
bool angle_less(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
    auto half = [](const std::array<long long, 2>& p) {
        return (p[1] > 0 || (p[1] == 0 && p[0] > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

// The cheapest segment with k+1 lattice points among short primitive
// directions; a feasible upper bound for every count-(k+1) optimum.
long long free_segment_budget(const FreeGrid& g, long long k) {
    long long best = -1;
    for (long long x = -2; x <= 2; ++x)
        for (long long y = -2; y <= 2; ++y) {
            if (boost::integer::gcd(std::abs(x), std::abs(y)) != 1) continue;
            long long c = k * g.width(x, y);
            if (best < 0 || c < best) best = c;
        }
    return best;
}

// Enumerates every closed convex loop of lattice edge vectors whose scaled
// dual-norm length is at most `budget`, as chains of vertices starting at
// (0,0).  Convex polygons are exactly the closed chains of edge vectors in
// strictly increasing angular order: each primitive direction appears at most
// once, with a positive multiplicity.  Pruning uses the exact cost so far plus
// the subadditive closing bound lam(-position); the callback may tighten
// `budget` whenever it finds a better feasible incumbent.
void for_each_free_loop(
    const FreeGrid& g, long long& budget, const SearchLimits& limits,
    const std::function<void(const std::vector<std::array<long long, 2>>&, long long)>& on_loop) {
    // Bound the edge vectors: width(v) >= |dot(v, d)| for any difference d of
    // two vertices, and two independent differences confine v to a
    // parallelogram, hence to a box.
    std::array<long long, 2> d1 = {g.verts[1][0] - g.verts[0][0], g.verts[1][1] - g.verts[0][1]};
    std::array<long long, 2> d2 = d1;
    long long det = 0;
    for (size_t i = 2; i < g.verts.size(); ++i) {
        std::array<long long, 2> d = {g.verts[i][0] - g.verts[0][0],
                                      g.verts[i][1] - g.verts[0][1]};
        long long c = d1[0] * d[1] - d1[1] * d[0];
        if (std::abs(c) > std::abs(det)) {
            d2 = d;
            det = c;
        }
    }
    if (det == 0) throw std::logic_error("free enumeration: degenerate vertex differences");
    long long bx = budget * (std::abs(d1[1]) + std::abs(d2[1])) / std::abs(det);
    long long by = budget * (std::abs(d1[0]) + std::abs(d2[0])) / std::abs(det);

    // Usable primitive edge directions, in angular order.
    std::vector<std::array<long long, 2>> dirs;
    for (long long x = -bx; x <= bx; ++x)
        for (long long y = -by; y <= by; ++y) {
            if (boost::integer::gcd(std::abs(x), std::abs(y)) != 1) continue;
            if (g.width(x, y) <= budget) dirs.push_back({x, y});
        }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    std::vector<long long> lams;
    lams.reserve(dirs.size());
    for (const auto& p : dirs) lams.push_back(g.lam(p[0], p[1]));

    long long nodes = 0;
    std::vector<std::array<long long, 2>> chain = {{0, 0}};
    std::function<void(size_t, long long, long long, long long)> rec =
        [&](size_t idx, long long sx, long long sy, long long cost) {
            for (size_t i = idx; i < dirs.size(); ++i) {
                long long x = sx, y = sy, c = cost;
                for (;;) {
                    c += lams[i];
                    if (c > budget) break;
                    x += dirs[i][0];
                    y += dirs[i][1];
                    if (++nodes > limits.max_nodes)
                        throw BudgetExceeded("free enumeration: node budget exceeded");
                    if (x == 0 && y == 0) {
                        on_loop(chain, c);
                        break;
                    }
                    if (c + g.lam(-x, -y) > budget) continue;
                    chain.push_back({x, y});
                    rec(i + 1, x, y, c);
                    chain.pop_back();
                }
            }
        };
    rec(0, 0, 0, 0);
}

// Lattice point count of the loop through `chain` and back to the origin, by
// Pick's identity: L = area2/2 + boundary/2 + 1.
long long loop_lattice_count(const std::vector<std::array<long long, 2>>& chain) {
    long long area2 = 0, boundary = 0;
    size_t n = chain.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = chain[i];
        const auto& b = chain[(i + 1) % n];
        area2 += a[0] * b[1] - a[1] * b[0];
        boundary += boost::integer::gcd(std::abs(b[0] - a[0]), std::abs(b[1] - a[1]));
    }
    return (std::abs(area2) + boundary) / 2 + 1;
}


void check_free_domain(const ConvexDomain& omega, long long k) {
    if (!omega.is_free || omega.polygon.is_degenerate())
        throw std::invalid_argument("free enumeration: requires a non-degenerate free domain");
    if (k < 0) throw std::invalid_argument("free enumeration: k < 0");
}

}  // namespace

std::vector<FreeCandidate> free_candidate_loops(const ConvexDomain& omega, long long k,
                                                const SearchLimits& limits) {
    check_free_domain(omega, k);
    std::vector<FreeCandidate> out;
    out.push_back({{{0, 0}}, 1});  // the single lattice point
    if (k == 0) return out;
    FreeGrid g(omega);
    // Best cost seen per count class (class = min(count, k+1)), seeded with
    // segment incumbents.  Loops costing more than their class incumbent are
    // dominated: only the dual-norm minimizers per class (with ties) matter to
    // any caller, so the global budget can shrink to the largest incumbent.
    std::vector<long long> class_best(static_cast<size_t>(k) + 2);
    for (long long c = 1; c <= k + 1; ++c)
        class_best[static_cast<size_t>(c)] = free_segment_budget(g, c - 1);
    long long budget = *std::max_element(class_best.begin() + 1, class_best.end());
    std::vector<long long> costs = {0};
    for_each_free_loop(
        g, budget, limits,
        [&](const std::vector<std::array<long long, 2>>& chain, long long cost) {
            long long count = loop_lattice_count(chain);
            size_t cls = static_cast<size_t>(std::min(count, k + 1));
            if (cost > class_best[cls]) return;
            if (cost < class_best[cls]) {
                class_best[cls] = cost;
                budget = *std::max_element(class_best.begin() + 1, class_best.end());
            }
            long long xmin = 0, ymin = 0;
            for (const auto& q : chain) {
                xmin = std::min(xmin, q[0]);
                ymin = std::min(ymin, q[1]);
            }
            FreeCandidate c;
            c.chain.reserve(chain.size());
            for (const auto& q : chain) c.chain.push_back({q[0] - xmin, q[1] - ymin});
            c.lattice_count = count;
            out.push_back(std::move(c));
            costs.push_back(cost);
        });
    // Drop candidates whose class incumbent improved after they were kept.
    std::vector<FreeCandidate> kept;
    for (size_t i = 0; i < out.size(); ++i) {
        size_t cls = static_cast<size_t>(std::min(out[i].lattice_count, k + 1));
        if (costs[i] <= class_best[cls]) kept.push_back(std::move(out[i]));
    }
    return kept;
}

ConvexPolygon free_candidate_polygon(const FreeCandidate& cand) {
    std::vector<Point2> pts;
    pts.reserve(cand.chain.size());
    for (const auto& q : cand.chain) pts.push_back({q[0], q[1]});
    return ConvexPolygon::from_points(pts);
}

std::vector<ConvexPolygon> free_candidate_polygons(const ConvexDomain& omega, long long k,
                                                   const SearchLimits& limits) {
    std::vector<ConvexPolygon> out;
    for (const auto& c : free_candidate_loops(omega, k, limits))
        out.push_back(free_candidate_polygon(c));
    return out;
}

Rat free_capacity_bruteforce(const ConvexDomain& omega, long long k, const SearchLimits& limits) {
    check_free_domain(omega, k);
    if (k == 0) return 0;  // a single lattice point costs nothing
    FreeGrid g(omega);
    // The segment bound is itself attained by a feasible loop with exactly k+1
    // lattice points, so the budget always holds the best feasible cost.
    long long budget = free_segment_budget(g, k);
    for_each_free_loop(g, budget, limits,
                       [&](const std::vector<std::array<long long, 2>>& chain, long long cost) {
                           if (cost < budget && loop_lattice_count(chain) == k + 1) budget = cost;
                       });
    return Rat(Int(budget)) / Rat(Int(g.scale));
}

}  // namespace ech
