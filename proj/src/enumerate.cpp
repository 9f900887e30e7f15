#include "ehrhart/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#include "ehrhart/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehrhart {

long long scan_point_cap() {
    static const long long cap = [] {
        const char* env = std::getenv("EHRHART_MAX_POINTS");
        if (env && *env) {
            long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return 10'000'000LL;
    }();
    return cap;
}

namespace {

long long effective_cap(const ScanOptions& opts) {
    return opts.max_candidates > 0 ? opts.max_candidates : scan_point_cap();
}

// Scan-ordered view of the inequality system of m*P. Coordinates are
// permuted so that the most facet-covered coordinate is scanned first;
// pruning bounds then bite as early as possible.
template <class I>
struct ScanProblem {
    int d = 0;
    std::vector<int> order; // order[k] = original coordinate
    std::vector<I> lo, hi;  // bbox of m*P, scan order
    std::vector<std::vector<I>> normal; // [facet][k], scan order
    std::vector<I> rhs;                 // m * offset
    std::vector<std::vector<I>> suffix_min; // [facet][k]: min contribution of coords > k
};

template <class I>
I floor_div_i(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) {
        long long q = a / b, r = a % b;
        return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
    } else {
        return floor_div(a, b);
    }
}

template <class I>
I ceil_div_i(const I& a, const I& b) {
    return -floor_div_i<I>(-a, b);
}

template <class I>
I to_scalar(const Int& v);

template <>
long long to_scalar<long long>(const Int& v) {
    return v.convert_to<long long>();
}

template <>
Int to_scalar<Int>(const Int& v) {
    return v;
}

template <class I>
ScanProblem<I> build_problem(const LatticePolytope& p, const Int& m) {
    const int d = p.rank();
    const auto& facets = p.facets();
    ScanProblem<I> pr;
    pr.d = d;

    std::vector<int> coverage(d, 0);
    for (const auto& f : facets)
        for (int j = 0; j < d; ++j)
            if (f.normal[j] != 0) ++coverage[j];
    pr.order.resize(d);
    std::iota(pr.order.begin(), pr.order.end(), 0);
    std::stable_sort(pr.order.begin(), pr.order.end(),
                     [&](int a, int b) { return coverage[a] > coverage[b]; });

    pr.lo.resize(d);
    pr.hi.resize(d);
    for (int k = 0; k < d; ++k) {
        const auto& [lo, hi] = p.bounding_box()[pr.order[k]];
        pr.lo[k] = to_scalar<I>(lo * m);
        pr.hi[k] = to_scalar<I>(hi * m);
    }
    pr.normal.resize(facets.size());
    pr.rhs.resize(facets.size());
    pr.suffix_min.resize(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        pr.normal[f].resize(d);
        for (int k = 0; k < d; ++k) pr.normal[f][k] = to_scalar<I>(facets[f].normal[pr.order[k]]);
        pr.rhs[f] = to_scalar<I>(m * facets[f].offset);
        pr.suffix_min[f].assign(d, I(0));
        I acc = 0;
        for (int k = d - 1; k >= 1; --k) {
            I a = pr.normal[f][k] * pr.lo[k];
            I b = pr.normal[f][k] * pr.hi[k];
            acc += std::min(a, b);
            pr.suffix_min[f][k - 1] = acc;
        }
    }
    return pr;
}

// Certifies that every partial sum, bound and product in the int64 kernel
// stays well inside the representable range.
bool fits_int64(const LatticePolytope& p, const Int& m) {
    const Int limit = Int(1) << 61;
    for (int j = 0; j < p.rank(); ++j) {
        const auto& [lo, hi] = p.bounding_box()[j];
        if (abs(lo * m) >= limit || abs(hi * m) >= limit) return false;
    }
    for (const auto& f : p.facets()) {
        Int bound = abs(m * f.offset);
        for (int j = 0; j < p.rank(); ++j) {
            const auto& [lo, hi] = p.bounding_box()[j];
            bound += std::max(abs(f.normal[j] * lo * m), abs(f.normal[j] * hi * m));
        }
        if (bound >= limit) return false;
    }
    return true;
}

struct ScanStats {
    std::atomic<long long> work{0};
    long long cap = 0;
    std::atomic<bool> over{false};

    bool add(long long n) {
        if (work.fetch_add(n, std::memory_order_relaxed) + n > cap) {
            over.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

// Leaf interval of the innermost coordinate: [lo,hi] of candidate points,
// [slo,shi] of strictly interior ones, any_tight for decided tight facets.
template <class I>
struct LeafInterval {
    I lo, hi, slo, shi;
    bool any_tight = false;
    bool feasible = false;
};

template <class I>
LeafInterval<I> leaf_interval(const ScanProblem<I>& pr, const std::vector<I>& partial) {
    const int k = pr.d - 1;
    LeafInterval<I> leaf;
    leaf.lo = pr.lo[k];
    leaf.hi = pr.hi[k];
    leaf.slo = pr.lo[k];
    leaf.shi = pr.hi[k];
    for (std::size_t f = 0; f < pr.normal.size(); ++f) {
        const I& c = pr.normal[f][k];
        I b = pr.rhs[f] - partial[f];
        if (c == 0) {
            if (b < 0) return leaf;
            if (b == 0) leaf.any_tight = true;
            continue;
        }
        if (c > 0) {
            leaf.hi = std::min(leaf.hi, floor_div_i<I>(b, c));
            leaf.shi = std::min(leaf.shi, ceil_div_i<I>(b, c) - 1);
        } else {
            leaf.lo = std::max(leaf.lo, ceil_div_i<I>(b, c));
            leaf.slo = std::max(leaf.slo, floor_div_i<I>(b, c) + 1);
        }
    }
    leaf.feasible = leaf.lo <= leaf.hi;
    return leaf;
}

// Bounds for the coordinate at depth k from facets relaxed over the
// bounding box of the remaining coordinates. Returns false when the whole
// subtree is infeasible.
template <class I>
bool depth_bounds(const ScanProblem<I>& pr, const std::vector<I>& partial, int k, I& lo, I& hi) {
    lo = pr.lo[k];
    hi = pr.hi[k];
    for (std::size_t f = 0; f < pr.normal.size(); ++f) {
        const I& c = pr.normal[f][k];
        I b = pr.rhs[f] - partial[f] - pr.suffix_min[f][k];
        if (c == 0) {
            if (b < 0) return false;
            continue;
        }
        if (c > 0) hi = std::min(hi, floor_div_i<I>(b, c));
        else lo = std::max(lo, ceil_div_i<I>(b, c));
    }
    return lo <= hi;
}

template <class I>
long long span_width(const I& lo, const I& hi) {
    if constexpr (std::is_same_v<I, long long>) return hi - lo + 1;
    else return Int(hi - lo + 1).template convert_to<long long>();
}

template <class I, class LeafFn>
void scan_rec(const ScanProblem<I>& pr, std::vector<I>& partial, std::vector<I>& prefix, int k,
              ScanStats& stats, LeafFn&& on_leaf) {
    if (stats.over.load(std::memory_order_relaxed)) return;
    const std::size_t nf = pr.normal.size();
    if (k == pr.d - 1) {
        LeafInterval<I> leaf = leaf_interval(pr, partial);
        if (!leaf.feasible) return;
        if (!stats.add(span_width(leaf.lo, leaf.hi))) return;
        on_leaf(prefix, leaf);
        return;
    }
    I lo, hi;
    if (!depth_bounds(pr, partial, k, lo, hi)) return;
    if (!stats.add(span_width(lo, hi))) return;
    for (std::size_t f = 0; f < nf; ++f) partial[f] += pr.normal[f][k] * lo;
    for (I x = lo;; ++x) {
        prefix[k] = x;
        scan_rec(pr, partial, prefix, k + 1, stats, on_leaf);
        if (x == hi) break;
        for (std::size_t f = 0; f < nf; ++f) partial[f] += pr.normal[f][k];
    }
    for (std::size_t f = 0; f < nf; ++f) partial[f] -= pr.normal[f][k] * hi;
}

// Runs the scan; LeafFn(thread_slot, prefix, leaf) must be thread-safe
// across slots. Top-level coordinate values are distributed over threads.
template <class I, class LeafFn>
void run_scan(const ScanProblem<I>& pr, bool parallel, ScanStats& stats, int& slots,
              LeafFn&& on_leaf) {
    const std::size_t nf = pr.normal.size();
    if (pr.d == 1) {
        std::vector<I> partial(nf, I(0)), prefix(1);
        slots = 1;
        scan_rec(pr, partial, prefix, 0, stats,
                 [&](const std::vector<I>& pf, const LeafInterval<I>& leaf) { on_leaf(0, pf, leaf); });
        return;
    }
    std::vector<I> zero(nf, I(0));
    I lo0, hi0;
    if (!depth_bounds(pr, zero, 0, lo0, hi0)) {
        slots = 1;
        return;
    }
    long long width = span_width(lo0, hi0);
    if (!stats.add(width)) return;
    slots = static_cast<int>(width);

#ifdef _OPENMP
    if (parallel && width > 1) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < width; ++i) {
            if (stats.over.load(std::memory_order_relaxed)) continue;
            I x0 = lo0 + I(i);
            std::vector<I> partial(nf);
            for (std::size_t f = 0; f < nf; ++f) partial[f] = pr.normal[f][0] * x0;
            std::vector<I> prefix(pr.d);
            prefix[0] = x0;
            scan_rec(pr, partial, prefix, 1, stats,
                     [&](const std::vector<I>& pf, const LeafInterval<I>& leaf) {
                         on_leaf(static_cast<int>(i), pf, leaf);
                     });
        }
        return;
    }
#else
    (void)parallel;
#endif
    for (long long i = 0; i < width; ++i) {
        if (stats.over.load(std::memory_order_relaxed)) break;
        I x0 = lo0 + I(i);
        std::vector<I> partial(nf);
        for (std::size_t f = 0; f < nf; ++f) partial[f] = pr.normal[f][0] * x0;
        std::vector<I> prefix(pr.d);
        prefix[0] = x0;
        scan_rec(pr, partial, prefix, 1, stats,
                 [&](const std::vector<I>& pf, const LeafInterval<I>& leaf) {
                     on_leaf(static_cast<int>(i), pf, leaf);
                 });
    }
}

template <class I>
int top_width(const ScanProblem<I>& pr) {
    if (pr.d < 2) return 1;
    std::vector<I> zero(pr.normal.size(), I(0));
    I lo0, hi0;
    if (!depth_bounds(pr, zero, 0, lo0, hi0)) return 1;
    return static_cast<int>(span_width(lo0, hi0));
}

template <class I>
LatticePointCounts count_impl(const LatticePolytope& p, const Int& m, const ScanOptions& opts) {
    ScanProblem<I> pr = build_problem<I>(p, m);
    ScanStats stats;
    stats.cap = effective_cap(opts);
    int slots = 0;
    std::vector<long long> acc_all(top_width(pr), 0), acc_int(acc_all.size(), 0);

    run_scan(pr, opts.parallel, stats, slots, [&](int slot, const std::vector<I>&, const LeafInterval<I>& leaf) {
        acc_all[slot] += span_width(leaf.lo, leaf.hi);
        if (!leaf.any_tight) {
            I s_lo = std::max(leaf.slo, leaf.lo);
            I s_hi = std::min(leaf.shi, leaf.hi);
            if (s_lo <= s_hi) acc_int[slot] += span_width(s_lo, s_hi);
        }
    });
    if (stats.over.load())
        throw EnumerationCapExceeded("lattice-point scan exceeded the point cap");

    LatticePointCounts counts;
    long long ta = 0, ti = 0;
    for (long long v : acc_all) ta += v;
    for (long long v : acc_int) ti += v;
    counts.all = ta;
    counts.interior = ti;
    counts.boundary = ta - ti;
    return counts;
}

template <class I>
std::vector<Point> points_impl(const LatticePolytope& p, const Int& m, PointFilter filter,
                               const ScanOptions& opts) {
    ScanProblem<I> pr = build_problem<I>(p, m);
    ScanStats stats;
    stats.cap = effective_cap(opts);
    int slots = 0;
    std::vector<std::vector<Point>> buckets(top_width(pr));

    run_scan(pr, opts.parallel, stats, slots, [&](int slot, const std::vector<I>& prefix, const LeafInterval<I>& leaf) {
        const int k = pr.d - 1;
        for (I x = leaf.lo; x <= leaf.hi; ++x) {
            bool inside = !leaf.any_tight && leaf.slo <= x && x <= leaf.shi;
            if (filter == PointFilter::Interior && !inside) continue;
            if (filter == PointFilter::Boundary && inside) continue;
            Point pt(pr.d);
            for (int i = 0; i < k; ++i) pt[pr.order[i]] = Int(prefix[i]);
            pt[pr.order[k]] = Int(x);
            buckets[slot].push_back(std::move(pt));
        }
    });
    if (stats.over.load())
        throw EnumerationCapExceeded("lattice-point scan exceeded the point cap");

    std::vector<Point> out;
    for (auto& b : buckets) {
        std::sort(b.begin(), b.end());
        out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool trivial_cases(const LatticePolytope& p, const Int& m, LatticePointCounts& counts,
                   std::vector<Point>* pts, PointFilter filter) {
    if (!p.full_dimensional())
        throw DegeneratePolytope("enumeration requires a full-dimensional polytope");
    if (m < 0) throw InternalError("negative dilate");
    if (p.rank() == 0) {
        counts.all = 1;
        counts.interior = 1;
        counts.boundary = 0;
        if (pts && filter != PointFilter::Boundary) pts->push_back(Point{});
        return true;
    }
    if (m == 0) {
        counts.all = 1;
        counts.interior = 0;
        counts.boundary = 0;
        if (pts && filter == PointFilter::All) pts->push_back(Point(p.rank(), Int(0)));
        return true;
    }
    return false;
}

} // namespace

LatticePointCounts count_lattice_points(const LatticePolytope& p, const Int& m,
                                        const ScanOptions& opts) {
    LatticePointCounts counts;
    if (trivial_cases(p, m, counts, nullptr, PointFilter::All)) return counts;
    if (fits_int64(p, m)) return count_impl<long long>(p, m, opts);
    return count_impl<Int>(p, m, opts);
}

std::vector<Point> lattice_points(const LatticePolytope& p, const Int& m, PointFilter filter,
                                  const ScanOptions& opts) {
    LatticePointCounts counts;
    std::vector<Point> pts;
    if (trivial_cases(p, m, counts, &pts, filter)) return pts;
    if (fits_int64(p, m)) return points_impl<long long>(p, m, filter, opts);
    return points_impl<Int>(p, m, filter, opts);
}

namespace reference {

LatticePointCounts count_lattice_points(const LatticePolytope& p, const Int& m,
                                        const ScanOptions& opts) {
    LatticePointCounts counts;
    if (trivial_cases(p, m, counts, nullptr, PointFilter::All)) return counts;

    Int volume = 1;
    const int d = p.rank();
    std::vector<Int> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = p.bounding_box()[j].first * m;
        hi[j] = p.bounding_box()[j].second * m;
        volume *= hi[j] - lo[j] + 1;
    }
    if (volume > effective_cap(opts))
        throw EnumerationCapExceeded("reference scan: bounding box exceeds the point cap");

    Point x = lo;
    while (true) {
        switch (locate(p, x, m)) {
            case PointLocation::Interior:
                ++counts.all;
                ++counts.interior;
                break;
            case PointLocation::Boundary:
                ++counts.all;
                ++counts.boundary;
                break;
            case PointLocation::Outside:
                break;
        }
        int j = d - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    return counts;
}

std::vector<Point> lattice_points(const LatticePolytope& p, const Int& m, PointFilter filter,
                                  const ScanOptions& opts) {
    LatticePointCounts counts;
    std::vector<Point> pts;
    if (trivial_cases(p, m, counts, &pts, filter)) return pts;

    Int volume = 1;
    const int d = p.rank();
    std::vector<Int> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = p.bounding_box()[j].first * m;
        hi[j] = p.bounding_box()[j].second * m;
        volume *= hi[j] - lo[j] + 1;
    }
    if (volume > effective_cap(opts))
        throw EnumerationCapExceeded("reference scan: bounding box exceeds the point cap");

    Point x = lo;
    while (true) {
        PointLocation loc = locate(p, x, m);
        bool keep = (filter == PointFilter::All && loc != PointLocation::Outside) ||
                    (filter == PointFilter::Interior && loc == PointLocation::Interior) ||
                    (filter == PointFilter::Boundary && loc == PointLocation::Boundary);
        if (keep) pts.push_back(x);
        int j = d - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    return pts;
}

} // namespace reference

} // namespace ehrhart
