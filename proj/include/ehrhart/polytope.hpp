#ifndef EHRHART_POLYTOPE_HPP
#define EHRHART_POLYTOPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ehrhart/linalg.hpp"
#include "ehrhart/numbers.hpp"

namespace ehrhart {

enum class PointLocation { Interior, Boundary, Outside };

// Inward-oriented facet inequality <normal, x> <= offset, normal primitive.
struct Facet {
    std::vector<Int> normal;
    Int offset;
};

// Affine lattice isomorphism between the lattice points of an affine
// subspace of Z^n and Z^dim: x = origin + basis * y.
class AffineChart {
public:
    // points must all lie in (and affinely span) the subspace; origin is the
    // lex-smallest point, the basis spans the saturated difference lattice.
    static AffineChart spanning(const std::vector<Point>& points, int ambient_rank);
    static AffineChart identity(int rank);

    int ambient_rank() const { return ambient_rank_; }
    int dim() const { return dim_; }
    const Point& origin() const { return origin_; }

    Point project(const Point& x) const; // throws InternalError off the lattice
    Point lift(const Point& y) const;
    bool is_identity() const;

private:
    int ambient_rank_ = 0;
    int dim_ = 0;
    IntMatrix basis_;     // ambient_rank x dim
    IntMatrix projector_; // first dim rows of U: projector_ * (x - origin) = y
    IntMatrix checker_;   // remaining rows of U; must annihilate x - origin
    Point origin_;
};

class LatticePolytope {
public:
    // Deduplicates, drops non-vertex points (full-dimensional input only),
    // computes the facet description. Lower-dimensional input is stored
    // as-is; use normalize_full_dimensional to reduce it.
    static LatticePolytope from_points(int rank, std::vector<Point> points);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == rank_; }

    const std::vector<Point>& vertices() const { return vertices_; }
    // Facet list, lex-sorted by (normal, offset). Throws DegeneratePolytope
    // unless full-dimensional.
    const std::vector<Facet>& facets() const;

    // Coordinate ranges of the vertices (empty for rank 0).
    const std::vector<std::pair<Int, Int>>& bounding_box() const { return bbox_; }

    LatticePolytope dilated(const Int& k) const;
    LatticePolytope translated(const Point& w) const;

private:
    int rank_ = 0;
    int dim_ = 0;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::pair<Int, Int>> bbox_;
};

// Classify x relative to the dilate m*P (P full-dimensional, m >= 1).
PointLocation locate(const LatticePolytope& p, const Point& x, const Int& m);

// Full-dimensionalize: affine lattice isomorphism onto a rank-d lattice.
// The identity (with an identity chart) when P is already full-dimensional.
std::pair<LatticePolytope, AffineChart> normalize_full_dimensional(const LatticePolytope& p);

} // namespace ehrhart

#endif
