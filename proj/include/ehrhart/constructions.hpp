#ifndef EHRHART_CONSTRUCTIONS_HPP
#define EHRHART_CONSTRUCTIONS_HPP

#include "ehrhart/polytope.hpp"

namespace ehrhart {

// conv{0, e_1, ..., e_d}
LatticePolytope standard_simplex(int d);

// conv{e_1, ..., e_d, -e_1 - ... - e_d}
LatticePolytope standard_reflexive_simplex(int d);

// [0, 1]^d
LatticePolytope unit_cube(int d);

LatticePolytope dilate(const LatticePolytope& p, const Int& k);

// conv(P x {1}, 0) in rank n + 1
LatticePolytope pyramid(const LatticePolytope& p);

// conv(P x {0} x {0}, {0} x Q x {1}); with Q the standard reflexive simplex
// of dimension l - 1 the delta-vector of the result is delta_bar of P.
LatticePolytope henk_tagami_tensor(const LatticePolytope& p, const LatticePolytope& q);

// The 5-dimensional simplex with vertices 0, e1, e1+e2, e2+2e3, 3e4+e5, e5;
// its delta-vector (1,2,1,2,0,0) separates delta_1 <= delta_i from the
// delta_d = 0 case.
LatticePolytope henk_tagami_example();

} // namespace ehrhart

#endif
