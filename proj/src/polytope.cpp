#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <set>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

// ~2e6 hyperplane candidates is plenty for desk-scale vertex counts.
constexpr long long kMaxFacetSubsets = 2'000'000;

IntMatrix difference_matrix(const std::vector<Point>& pts) {
    const int n = pts.empty() ? 0 : static_cast<int>(pts[0].size());
    IntMatrix d(static_cast<int>(pts.size()) - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < n; ++j) d.at(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
    return d;
}

Int dot(const std::vector<Int>& a, const Point& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long subset_count_capped(int n, int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > kMaxFacetSubsets) return kMaxFacetSubsets + 1;
    }
    return c;
}

std::vector<Facet> enumerate_facets(const std::vector<Point>& pts, int d) {
    std::vector<Facet> out;
    if (d == 0) return out;
    const int np = static_cast<int>(pts.size());
    if (subset_count_capped(np, d) > kMaxFacetSubsets)
        throw EnumerationCapExceeded("facet enumeration: too many point subsets");

    std::set<std::pair<std::vector<Int>, Int>> seen;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        // hyperplane through pts[idx[0..d-1]]
        IntMatrix rows(d - 1, d);
        for (int i = 1; i < d; ++i)
            for (int j = 0; j < d; ++j) rows.at(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
        std::vector<Int> normal = hyperplane_normal(rows);
        bool nonzero = false;
        for (const auto& c : normal)
            if (c != 0) { nonzero = true; break; }
        if (nonzero) {
            Int c0 = dot(normal, pts[idx[0]]);
            int side = 0;
            bool facet = true;
            for (const auto& p : pts) {
                Int s = dot(normal, p) - c0;
                if (s == 0) continue;
                int sg = s > 0 ? 1 : -1;
                if (side == 0) side = sg;
                else if (side != sg) { facet = false; break; }
            }
            if (facet && side != 0) {
                if (side > 0) {
                    for (auto& c : normal) c = -c;
                    c0 = -c0;
                }
                if (seen.emplace(normal, c0).second) out.push_back(Facet{normal, c0});
            }
        }
        // next d-subset
        int i = d - 1;
        while (i >= 0 && idx[i] == np - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    return out;
}

} // namespace

AffineChart AffineChart::spanning(const std::vector<Point>& points, int ambient_rank) {
    if (points.empty()) throw InternalError("chart from empty point set");
    AffineChart chart;
    chart.ambient_rank_ = ambient_rank;
    chart.origin_ = *std::min_element(points.begin(), points.end());

    std::vector<Point> shifted;
    shifted.push_back(chart.origin_);
    for (const auto& p : points)
        if (p != chart.origin_) shifted.push_back(p);
    IntMatrix diffs = difference_matrix(shifted);

    // columns = difference vectors
    IntMatrix gen(ambient_rank, diffs.rows());
    for (int i = 0; i < diffs.rows(); ++i)
        for (int j = 0; j < ambient_rank; ++j) gen.at(j, i) = diffs.at(i, j);

    SmithForm snf = smith_normal_form(gen);
    chart.dim_ = snf.rank;
    chart.basis_ = IntMatrix(ambient_rank, snf.rank);
    for (int i = 0; i < ambient_rank; ++i)
        for (int j = 0; j < snf.rank; ++j) chart.basis_.at(i, j) = snf.uinv.at(i, j);
    chart.projector_ = IntMatrix(snf.rank, ambient_rank);
    chart.checker_ = IntMatrix(ambient_rank - snf.rank, ambient_rank);
    for (int i = 0; i < ambient_rank; ++i)
        for (int j = 0; j < ambient_rank; ++j) {
            if (i < snf.rank) chart.projector_.at(i, j) = snf.u.at(i, j);
            else chart.checker_.at(i - snf.rank, j) = snf.u.at(i, j);
        }
    return chart;
}

AffineChart AffineChart::identity(int rank) {
    AffineChart chart;
    chart.ambient_rank_ = rank;
    chart.dim_ = rank;
    chart.basis_ = IntMatrix::identity(rank);
    chart.projector_ = IntMatrix::identity(rank);
    chart.checker_ = IntMatrix(0, rank);
    chart.origin_.assign(rank, Int(0));
    return chart;
}

Point AffineChart::project(const Point& x) const {
    Point w(ambient_rank_);
    for (int i = 0; i < ambient_rank_; ++i) w[i] = x[i] - origin_[i];
    Point check = checker_.mul(w);
    for (const auto& c : check)
        if (c != 0) throw InternalError("point off the affine lattice of the chart");
    return projector_.mul(w);
}

Point AffineChart::lift(const Point& y) const {
    Point x = basis_.mul(y);
    for (int i = 0; i < ambient_rank_; ++i) x[i] += origin_[i];
    return x;
}

bool AffineChart::is_identity() const {
    if (dim_ != ambient_rank_) return false;
    for (const auto& c : origin_)
        if (c != 0) return false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (basis_.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

LatticePolytope LatticePolytope::from_points(int rank, std::vector<Point> points) {
    if (points.empty()) throw DegeneratePolytope("empty vertex list");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != rank) throw DegeneratePolytope("vertex rank mismatch");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope p;
    p.rank_ = rank;
    p.dim_ = rank == 0 ? 0 : ehrhart::rank(difference_matrix(points));
    p.vertices_ = std::move(points);

    if (p.dim_ == rank && rank > 0) {
        p.facets_ = enumerate_facets(p.vertices_, rank);
        // keep only true vertices: tight facet normals must span R^d
        std::vector<Point> verts;
        for (const auto& pt : p.vertices_) {
            std::vector<std::vector<Int>> rows;
            for (const auto& f : p.facets_) {
                Int s = 0;
                for (int j = 0; j < rank; ++j) s += f.normal[j] * pt[j];
                if (s == f.offset) rows.push_back(f.normal);
            }
            IntMatrix m(static_cast<int>(rows.size()), rank);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < rank; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
            if (ehrhart::rank(std::move(m)) == rank) verts.push_back(pt);
        }
        p.vertices_ = std::move(verts);
        if (p.vertices_.empty()) throw InternalError("vertex reduction removed all points");
    }

    p.bbox_.assign(rank, {Int(0), Int(0)});
    for (int j = 0; j < rank; ++j) {
        Int lo = p.vertices_[0][j], hi = p.vertices_[0][j];
        for (const auto& v : p.vertices_) {
            if (v[j] < lo) lo = v[j];
            if (v[j] > hi) hi = v[j];
        }
        p.bbox_[j] = {lo, hi};
    }
    return p;
}

const std::vector<Facet>& LatticePolytope::facets() const {
    if (!full_dimensional())
        throw DegeneratePolytope("facet description requires a full-dimensional polytope");
    return facets_;
}

LatticePolytope LatticePolytope::dilated(const Int& k) const {
    std::vector<Point> pts = vertices_;
    for (auto& p : pts)
        for (auto& c : p) c *= k;
    return from_points(rank_, std::move(pts));
}

LatticePolytope LatticePolytope::translated(const Point& w) const {
    std::vector<Point> pts = vertices_;
    for (auto& p : pts)
        for (int j = 0; j < rank_; ++j) p[j] += w[j];
    return from_points(rank_, std::move(pts));
}

PointLocation locate(const LatticePolytope& p, const Point& x, const Int& m) {
    if (!p.full_dimensional()) throw DegeneratePolytope("locate requires a full-dimensional polytope");
    if (m < 1) throw InternalError("locate requires m >= 1");
    bool tight = false;
    for (const auto& f : p.facets()) {
        Int s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += f.normal[j] * x[j];
        Int rhs = m * f.offset;
        if (s > rhs) return PointLocation::Outside;
        if (s == rhs) tight = true;
    }
    return tight ? PointLocation::Boundary : PointLocation::Interior;
}

std::pair<LatticePolytope, AffineChart> normalize_full_dimensional(const LatticePolytope& p) {
    if (p.full_dimensional()) return {p, AffineChart::identity(p.rank())};
    AffineChart chart = AffineChart::spanning(p.vertices(), p.rank());
    std::vector<Point> projected;
    projected.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) projected.push_back(chart.project(v));
    return {LatticePolytope::from_points(chart.dim(), std::move(projected)), chart};
}

} // namespace ehrhart
