#include "ehrhart/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

Int dot(const std::vector<Int>& a, const Point& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// A cell of the evolving subdivision of one facet, in the facet's reduced
// (d-1)-dimensional lattice coordinates.
struct Cell {
    std::vector<int> verts; // local point indices, sorted
    LatticePolytope poly;
};

Cell make_cell(std::vector<int> verts, const std::vector<Point>& pts, int k) {
    Cell c;
    std::sort(verts.begin(), verts.end());
    std::vector<Point> vp;
    vp.reserve(verts.size());
    for (int v : verts) vp.push_back(pts[v]);
    c.poly = LatticePolytope::from_points(k, std::move(vp));
    if (c.poly.vertices().size() != verts.size())
        throw InternalError("pulling produced a cell with redundant vertices");
    c.verts = std::move(verts);
    return c;
}

bool cell_contains(const Cell& c, const Point& x) {
    for (const auto& f : c.poly.facets())
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

// Iterated pulling of all points in the given order: each pull replaces
// every cell containing the point by cones from it over the cell facets
// that miss it. The result is a triangulation using every point as a
// vertex, and is regular (the pulls realise a lexicographic lifting).
std::vector<std::vector<int>> pull_triangulate(const std::vector<Point>& pts, int k,
                                               const std::vector<int>& order) {
    if (k == 0) {
        if (pts.size() != 1) throw InternalError("zero-dimensional facet with several points");
        return {{0}};
    }
    std::vector<Cell> cells;
    {
        LatticePolytope hull = LatticePolytope::from_points(k, pts);
        std::map<Point, int> index;
        for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int>(i));
        std::vector<int> verts;
        for (const auto& v : hull.vertices()) verts.push_back(index.at(v));
        cells.push_back(make_cell(std::move(verts), pts, k));
    }

    for (int a : order) {
        const Point& pa = pts[a];
        std::vector<Cell> next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (!cell_contains(cell, pa)) {
                next.push_back(std::move(cell));
                continue;
            }
            bool is_vertex = std::binary_search(cell.verts.begin(), cell.verts.end(), a);
            bool is_simplex = static_cast<int>(cell.verts.size()) == k + 1;
            if (is_vertex && is_simplex) {
                next.push_back(std::move(cell));
                continue;
            }
            for (const auto& f : cell.poly.facets()) {
                if (dot(f.normal, pa) == f.offset) continue; // a lies on this wall
                std::vector<int> verts{a};
                for (int v : cell.verts)
                    if (dot(f.normal, pts[v]) == f.offset) verts.push_back(v);
                next.push_back(make_cell(std::move(verts), pts, k));
            }
        }
        cells = std::move(next);
    }

    std::vector<std::vector<int>> out;
    out.reserve(cells.size());
    for (const auto& c : cells) {
        if (static_cast<int>(c.verts.size()) != k + 1)
            throw InternalError("pulling left a non-simplex cell");
        out.push_back(c.verts);
    }
    return out;
}

std::vector<Point> lifted_generators(const BoundaryTriangulation& t, const std::vector<int>& face) {
    std::vector<Point> gens;
    gens.reserve(face.size());
    for (int id : face) {
        Point g = t.points[id];
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    return gens;
}

IntPolynomial box_polynomial(const std::vector<BoxPoint>& box) {
    if (box.empty()) return IntPolynomial();
    int top = 0;
    for (const auto& b : box) top = std::max(top, b.height);
    std::vector<Int> coeffs(top + 1, Int(0));
    for (const auto& b : box) coeffs[b.height] += 1;
    return IntPolynomial(std::move(coeffs));
}

std::optional<std::vector<Rat>> simplex_coefficients(const std::vector<Point>& gens,
                                                     const Point& target) {
    const int k = static_cast<int>(gens[0].size());
    const int r = static_cast<int>(gens.size());
    // Gaussian elimination on the (k x r) system gens * lambda = target.
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(r + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = Rat(gens[j][i]);
        m[i][r] = Rat(target[i]);
    }
    std::vector<int> pivot_col(k, -1);
    int row = 0;
    for (int c = 0; c < r && row < k; ++c) {
        int pr = -1;
        for (int i = row; i < k; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int i = 0; i < k; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[row][c];
            for (int j = c; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = c;
        ++row;
    }
    if (row < r) throw DependentGenerators("simplex generators are linearly dependent");
    for (int i = row; i < k; ++i)
        if (m[i][r] != 0) return std::nullopt; // inconsistent: target off the span
    std::vector<Rat> lambda(r, Rat(0));
    for (int i = 0; i < row; ++i) lambda[pivot_col[i]] = m[i][r] / m[i][pivot_col[i]];
    return lambda;
}

} // namespace

std::vector<std::vector<int>> BoundaryTriangulation::face_closure() const {
    std::set<std::vector<int>> faces;
    faces.insert(std::vector<int>{});
    for (const auto& mf : maximal_faces) {
        const int n = static_cast<int>(mf.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(mf[i]);
            faces.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), std::cref(a)) < std::make_pair(b.size(), std::cref(b));
    });
    return out;
}

BoundaryTriangulation triangulate_boundary(const LatticePolytope& p, PullOrder order,
                                           const ScanOptions& opts) {
    if (!p.full_dimensional() || p.dim() == 0)
        throw DegeneratePolytope("boundary triangulation requires full dimension >= 1");

    BoundaryTriangulation t;
    t.d = p.dim();
    t.points = lattice_points(p, 1, PointFilter::Boundary, opts); // lex-sorted
    t.regular_by_construction = true;

    std::set<int> used;
    for (const auto& facet : p.facets()) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < t.points.size(); ++i)
            if (dot(facet.normal, t.points[i]) == facet.offset) ids.push_back(static_cast<int>(i));

        std::vector<Point> facet_pts;
        facet_pts.reserve(ids.size());
        for (int id : ids) facet_pts.push_back(t.points[id]);
        AffineChart chart = AffineChart::spanning(facet_pts, p.rank());
        if (chart.dim() != t.d - 1) throw InternalError("facet chart has wrong dimension");
        std::vector<Point> reduced;
        reduced.reserve(ids.size());
        for (const auto& q : facet_pts) reduced.push_back(chart.project(q));

        std::vector<int> pull(ids.size());
        for (std::size_t i = 0; i < pull.size(); ++i) pull[i] = static_cast<int>(i);
        if (order == PullOrder::LexDescending) std::reverse(pull.begin(), pull.end());

        for (auto& local : pull_triangulate(reduced, t.d - 1, pull)) {
            std::vector<int> global;
            global.reserve(local.size());
            for (int v : local) global.push_back(ids[v]);
            std::sort(global.begin(), global.end());
            for (int id : global) used.insert(id);
            t.maximal_faces.push_back(std::move(global));
        }
    }
    std::sort(t.maximal_faces.begin(), t.maximal_faces.end());
    if (std::adjacent_find(t.maximal_faces.begin(), t.maximal_faces.end()) != t.maximal_faces.end())
        throw InternalError("duplicate maximal face");
    if (used.size() != t.points.size())
        throw InternalError("boundary triangulation misses lattice points");
    return t;
}

IntPolynomial h_vector(const BoundaryTriangulation& t, const std::vector<int>& face) {
    std::vector<IntPolynomial> one_minus_t_pow(t.d + 1);
    one_minus_t_pow[0] = IntPolynomial::constant(1);
    IntPolynomial omt(std::vector<Int>{1, -1});
    for (int e = 1; e <= t.d; ++e) one_minus_t_pow[e] = one_minus_t_pow[e - 1] * omt;

    const int dim_f = static_cast<int>(face.size()) - 1;
    IntPolynomial h;
    for (const auto& g : t.face_closure()) {
        if (!std::includes(g.begin(), g.end(), face.begin(), face.end())) continue;
        const int dim_g = static_cast<int>(g.size()) - 1;
        h = h + IntPolynomial::monomial(dim_g - dim_f) * one_minus_t_pow[t.d - 1 - dim_g];
    }
    return h;
}

void check_h_vector(const IntPolynomial& h, int n) {
    if (h.coeff(0) != 1) throw HVectorInvariantViolation("h_0 != 1");
    if (h.degree() > n || !h.is_palindromic(n))
        throw HVectorInvariantViolation("h-vector is not symmetric of degree " + std::to_string(n));
    for (int i = 0; i + 1 <= n / 2; ++i)
        if (h.coeff(i) > h.coeff(i + 1))
            throw HVectorInvariantViolation("h-vector is not unimodal");
    for (int i = 1; i <= n; ++i)
        if (h.coeff(i) > binomial(h.coeff(1) + i - 1, Int(i)))
            throw HVectorInvariantViolation("h-vector violates the upper bound theorem");
}

Point choose_interior_point(const LatticePolytope& p, int l, InteriorPointPick pick,
                            const ScanOptions& opts) {
    std::vector<Point> interior = lattice_points(p, l, PointFilter::Interior, opts);
    if (interior.empty())
        throw NoInteriorPoint("no interior lattice point in the codegree dilate");
    return pick == InteriorPointPick::LexSmallest ? interior.front() : interior.back();
}

std::vector<BoxPoint> box_points(const std::vector<Point>& generators) {
    if (generators.empty()) return {};
    const int k = static_cast<int>(generators[0].size());
    const int r = static_cast<int>(generators.size());

    IntMatrix g(k, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) g.at(i, j) = generators[j][i];
    SmithForm snf = smith_normal_form(g);
    if (snf.rank != r) throw DependentGenerators("box generators are linearly dependent");

    std::vector<BoxPoint> out;
    std::vector<Int> y(r, Int(0));
    while (true) {
        // coefficients of the coset representative: V * (y_i / d_i), mod 1
        bool open = true;
        std::vector<Rat> coeffs(r);
        for (int i = 0; i < r && open; ++i) {
            Rat a = 0;
            for (int j = 0; j < r; ++j) a += Rat(snf.v.at(i, j) * y[j], snf.diag[j]);
            a -= Rat(floor_div(numerator(a), denominator(a)));
            if (a == 0) open = false;
            coeffs[i] = a;
        }
        if (open) {
            BoxPoint bp;
            bp.coeffs = coeffs;
            // v = sum coeff_j * g_j, integral by construction
            Point v(k);
            std::vector<Rat> acc(k, Rat(0));
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < k; ++i) acc[i] += coeffs[j] * Rat(generators[j][i]);
            for (int i = 0; i < k; ++i) {
                if (denominator(acc[i]) != 1) throw InternalError("box point is not integral");
                v[i] = numerator(acc[i]);
            }
            bp.v = std::move(v);
            bp.height = bp.v.back().convert_to<int>();
            out.push_back(std::move(bp));
        }
        int j = r - 1;
        while (j >= 0 && y[j] == snf.diag[j] - 1) {
            y[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++y[j];
    }
    std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) {
        return std::tie(a.height, a.v) < std::tie(b.height, b.v);
    });
    return out;
}

Int cone_index(const std::vector<Point>& generators) {
    if (generators.empty()) return 1;
    const int k = static_cast<int>(generators[0].size());
    const int r = static_cast<int>(generators.size());
    IntMatrix g(k, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) g.at(i, j) = generators[j][i];
    SmithForm snf = smith_normal_form(g);
    if (snf.rank != r) throw DependentGenerators("cone generators are linearly dependent");
    Int idx = 1;
    for (const auto& d : snf.diag) idx *= d;
    return idx;
}

BoxPoint box_involution(const std::vector<Point>& generators, const BoxPoint& p) {
    BoxPoint out;
    out.coeffs.resize(p.coeffs.size());
    const int k = static_cast<int>(generators[0].size());
    std::vector<Rat> acc(k, Rat(0));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        out.coeffs[j] = Rat(1) - p.coeffs[j];
        for (int i = 0; i < k; ++i) acc[i] += out.coeffs[j] * Rat(generators[j][i]);
    }
    out.v.resize(k);
    for (int i = 0; i < k; ++i) {
        if (denominator(acc[i]) != 1) throw InternalError("involution image is not integral");
        out.v[i] = numerator(acc[i]);
    }
    out.height = out.v.back().convert_to<int>();
    return out;
}

TriangulationDecomposition decompose_via_triangulation(const LatticePolytope& p,
                                                       const BoundaryTriangulation& t,
                                                       const Point& vbar,
                                                       const EhrhartProfile& profile) {
    const int d = profile.d, l = profile.l;
    if (t.d != d) throw DimensionMismatch("triangulation dimension disagrees with profile");
    for (const auto& pt : t.points)
        if (locate(p, pt, 1) != PointLocation::Boundary)
            throw InternalError("triangulation vertex is not a boundary lattice point of P");

    Point rho = vbar;
    rho.push_back(l);
    {
        Int g = 0;
        for (const auto& c : rho) g = gcd(g, c);
        if (g != 1) throw InternalError("(vbar, l) is not primitive");
    }

    std::vector<std::vector<int>> faces = t.face_closure();
    std::map<std::vector<int>, int> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], static_cast<int>(i));

    {
        std::set<int> used;
        for (const auto& mf : t.maximal_faces)
            for (int id : mf) used.insert(id);
        if (used.size() != t.points.size())
            throw InternalError("triangulation does not use every boundary lattice point");
    }

    // faces containing each face, for the h-vectors
    std::vector<std::vector<int>> super(faces.size());
    for (std::size_t gi = 0; gi < faces.size(); ++gi) {
        const auto& g = faces[gi];
        const int n = static_cast<int>(g.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(g[i]);
            super[face_index.at(sub)].push_back(static_cast<int>(gi));
        }
    }

    std::vector<IntPolynomial> one_minus_t_pow(d + 1);
    one_minus_t_pow[0] = IntPolynomial::constant(1);
    IntPolynomial omt(std::vector<Int>{1, -1});
    for (int e = 1; e <= d; ++e) one_minus_t_pow[e] = one_minus_t_pow[e - 1] * omt;

    TriangulationDecomposition td;
    td.faces.reserve(faces.size());
    IntPolynomial a, b_raw;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        FaceData fd;
        fd.face = faces[fi];
        fd.dim = static_cast<int>(fd.face.size()) - 1;

        for (int gi : super[fi]) {
            const int dim_g = static_cast<int>(faces[gi].size()) - 1;
            fd.h = fd.h + IntPolynomial::monomial(dim_g - fd.dim) * one_minus_t_pow[d - 1 - dim_g];
        }
        if (t.regular_by_construction) check_h_vector(fd.h, d - 1 - fd.dim);

        std::vector<Point> gens = lifted_generators(t, fd.face);
        if (fd.face.empty()) {
            fd.box_poly = IntPolynomial::constant(1); // BOX({0}) = {0}
        } else {
            fd.box = box_points(gens);
            for (const auto& bp : fd.box)
                if (bp.height < 2)
                    throw InternalError("unprimed box point below height 2: a boundary lattice "
                                        "point is missing from the triangulation");
            fd.box_poly = box_polynomial(fd.box);
        }
        gens.push_back(rho);
        fd.box_primed = box_points(gens);
        for (const auto& bp : fd.box_primed)
            if (bp.height < l) throw ShiftUnderflow("primed box point below height l");
        fd.box_poly_primed = box_polynomial(fd.box_primed);

        a = a + fd.box_poly * fd.h;
        b_raw = b_raw + fd.box_poly_primed * fd.h;
        td.faces.push_back(std::move(fd));
    }

    td.dec.a = a;
    td.dec.b = b_raw.shifted(-l);
    td.dec.d = d;
    td.dec.l = l;
    check_decomposition(td.dec, profile.delta_bar);
    return td;
}

bool lemma_ball_check(const FaceData& f, int l) {
    return f.box_poly.is_palindromic(f.dim + 1) && f.box_poly_primed.is_palindromic(f.dim + 1 + l);
}

bool lemma_upper_check(const TriangulationDecomposition& td, const EhrhartProfile& profile) {
    IntPolynomial sum;
    for (const auto& f : td.faces) sum = sum + (f.box_poly + f.box_poly_primed) * f.h;
    return sum == profile.delta_bar;
}

bool is_unimodular(const BoundaryTriangulation& t) {
    bool all_max_unimodular = true;
    for (const auto& mf : t.maximal_faces)
        if (cone_index(lifted_generators(t, mf)) != 1) {
            all_max_unimodular = false;
            break;
        }
    bool all_boxes_empty = true;
    for (const auto& face : t.face_closure()) {
        if (face.empty()) continue;
        if (!box_points(lifted_generators(t, face)).empty()) {
            all_boxes_empty = false;
            break;
        }
    }
    if (all_max_unimodular != all_boxes_empty)
        throw InternalError("determinant and box-emptiness unimodularity tests disagree");
    return all_max_unimodular;
}

void validate_triangulation(const LatticePolytope& p, const BoundaryTriangulation& t,
                            const ScanOptions& opts) {
    const int d = p.dim();
    const auto& facets = p.facets();

    // cells are simplices lying in facets of P; bucket them per facet
    std::vector<std::vector<const std::vector<int>*>> per_facet(facets.size());
    for (const auto& mf : t.maximal_faces) {
        if (static_cast<int>(mf.size()) != d)
            throw InternalError("maximal face is not a (d-1)-simplex");
        int home = -1;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            bool all_tight = true;
            for (int id : mf)
                if (dot(facets[fi].normal, t.points[id]) != facets[fi].offset) {
                    all_tight = false;
                    break;
                }
            if (all_tight) {
                if (home >= 0) throw InternalError("maximal face lies in two facets");
                home = static_cast<int>(fi);
            }
        }
        if (home < 0) throw InternalError("maximal face lies in no facet of P");
        per_facet[home].push_back(&mf);
    }

    // volume bookkeeping per facet: sum of cell volumes in the facet lattice
    // must match an Ehrhart-series volume of the facet polytope
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        std::vector<Point> facet_pts;
        for (std::size_t i = 0; i < t.points.size(); ++i)
            if (dot(facets[fi].normal, t.points[i]) == facets[fi].offset)
                facet_pts.push_back(t.points[i]);
        AffineChart chart = AffineChart::spanning(facet_pts, p.rank());
        Int cell_sum = 0;
        for (const auto* mf : per_facet[fi]) {
            IntMatrix diffs(d - 1, d - 1);
            Point base = chart.project(t.points[(*mf)[0]]);
            for (int i = 1; i < d; ++i) {
                Point q = chart.project(t.points[(*mf)[i]]);
                for (int j = 0; j < d - 1; ++j) diffs.at(i - 1, j) = q[j] - base[j];
            }
            Int vol = determinant(std::move(diffs));
            if (vol == 0) throw InternalError("degenerate maximal face");
            cell_sum += abs(vol);
        }
        std::vector<Point> reduced;
        for (const auto& q : facet_pts) reduced.push_back(chart.project(q));
        LatticePolytope fp = LatticePolytope::from_points(d - 1, std::move(reduced));
        EhrhartProfile prof = compute_profile(fp, opts, false);
        Int facet_vol = prof.delta.eval(1);
        if (cell_sum != facet_vol)
            throw InternalError("cell volumes (" + cell_sum.str() + ") do not add up to the facet volume (" +
                                facet_vol.str() + ")");
    }

    // sampled coverage and interior-disjointness on small dilates
    for (int m = 2; m <= 3; ++m) {
        for (const auto& x : lattice_points(p, m, PointFilter::Boundary, opts)) {
            Point target = x;
            target.push_back(m);
            int covering = 0, strict = 0;
            for (const auto& mf : t.maximal_faces) {
                auto lambda = simplex_coefficients(lifted_generators(t, mf), target);
                if (!lambda) continue;
                bool nonneg = true, positive = true;
                for (const auto& c : *lambda) {
                    if (c < 0) nonneg = false;
                    if (c <= 0) positive = false;
                }
                if (nonneg) ++covering;
                if (positive) ++strict;
            }
            if (covering < 1) throw InternalError("boundary point not covered by the triangulation");
            if (strict > 1) throw InternalError("cell interiors overlap");
        }
    }
}

} // namespace ehrhart
