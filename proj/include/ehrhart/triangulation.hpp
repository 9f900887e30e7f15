#ifndef EHRHART_TRIANGULATION_HPP
#define EHRHART_TRIANGULATION_HPP

#include <vector>

#include "ehrhart/decomposition.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

// Triangulation of the boundary of a full-dimensional polytope. The vertex
// set is exactly the set of boundary lattice points; maximal faces are
// (d-1)-simplices given as sorted index tuples into points.
struct BoundaryTriangulation {
    int d = 0;
    std::vector<Point> points;
    std::vector<std::vector<int>> maximal_faces;
    // Lifted (iterated pulling) constructions are regular; externally
    // supplied triangulations are accepted with regularity unchecked.
    bool regular_by_construction = false;

    // Closure of the maximal faces under subsets, including the empty face,
    // sorted. Built on demand; face lattices grow fast.
    std::vector<std::vector<int>> face_closure() const;
};

enum class PullOrder { LexAscending, LexDescending };
enum class InteriorPointPick { LexSmallest, LexLargest };

// Regular-by-construction lattice triangulation of the boundary using every
// boundary lattice point: per facet of P, iterated pulling of all lattice
// points in a global lex order.
BoundaryTriangulation triangulate_boundary(const LatticePolytope& p,
                                           PullOrder order = PullOrder::LexAscending,
                                           const ScanOptions& opts = {});

// h-vector of the face F: sum over faces G containing F of
// t^{dim G - dim F} (1 - t)^{d - 1 - dim G}.
IntPolynomial h_vector(const BoundaryTriangulation& t, const std::vector<int>& face);

// Lemma-grade invariants of an h-vector of expected degree n: h_0 = 1,
// symmetry, unimodality up to the middle, and h_i <= C(h_1 + i - 1, i).
void check_h_vector(const IntPolynomial& h, int n);

// Interior lattice point of l*P (throws NoInteriorPoint when l is wrong).
Point choose_interior_point(const LatticePolytope& p, int l,
                            InteriorPointPick pick = InteriorPointPick::LexSmallest,
                            const ScanOptions& opts = {});

struct BoxPoint {
    Point v;                // lattice point of the open parallelepiped
    int height;             // last coordinate (the projection u)
    std::vector<Rat> coeffs; // coefficients in (0,1)
};

// Lattice points of the open parallelepiped of linearly independent
// generators, by Smith-normal-form coset enumeration; sorted by
// (height, point). Throws DependentGenerators.
std::vector<BoxPoint> box_points(const std::vector<Point>& generators);

// Index of the sublattice spanned by the generators inside its saturation
// (product of the Smith invariant factors). 1 iff the cone is unimodular.
Int cone_index(const std::vector<Point>& generators);

// Coefficient-complement involution; fixed points allowed.
BoxPoint box_involution(const std::vector<Point>& generators, const BoxPoint& p);

struct FaceData {
    std::vector<int> face; // sorted point ids; empty for the empty face
    int dim = -1;
    IntPolynomial h;
    IntPolynomial box_poly;        // B_F
    IntPolynomial box_poly_primed; // B'_F
    std::vector<BoxPoint> box;
    std::vector<BoxPoint> box_primed;
};

struct TriangulationDecomposition {
    ABDecomposition dec;
    std::vector<FaceData> faces;
};

// a(t) = sum_F B_F h_F and b(t) = t^{-l} sum_F B'_F h_F over all faces of
// the triangulation, with sigma'_F adding the ray through (vbar, l).
// Structural assertions run against profile.delta_bar.
TriangulationDecomposition decompose_via_triangulation(const LatticePolytope& p,
                                                       const BoundaryTriangulation& t,
                                                       const Point& vbar,
                                                       const EhrhartProfile& profile);

// B_F(t) = t^{dim F + 1} B_F(1/t) and B'_F(t) = t^{dim F + l + 1} B'_F(1/t).
bool lemma_ball_check(const FaceData& f, int l);

// delta_bar = sum_F (B_F + B'_F) h_F.
bool lemma_upper_check(const TriangulationDecomposition& td, const EhrhartProfile& profile);

// Every maximal cone has index 1; cross-checked against emptiness of all
// non-empty-face boxes.
bool is_unimodular(const BoundaryTriangulation& t);

// Desk-scale validation: faces are simplices inside facets of P, per-facet
// normalized volumes add up (checked against an Ehrhart-series volume), and
// coverage/interior-disjointness sampled on lattice points of small dilates.
void validate_triangulation(const LatticePolytope& p, const BoundaryTriangulation& t,
                            const ScanOptions& opts = {});

} // namespace ehrhart

#endif
