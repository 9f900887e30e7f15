#ifndef EHRHART_EHRHART_HPP
#define EHRHART_EHRHART_HPP

#include <vector>

#include "ehrhart/enumerate.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

struct EhrhartProfile {
    int d = 0;
    std::vector<Int> f;      // f(0..d)
    IntPolynomial delta;     // delta_0 = 1, coefficients >= 0
    int s = 0;               // deg delta
    int l = 1;               // codegree d + 1 - s
    IntPolynomial delta_bar; // (1 + t + ... + t^{l-1}) * delta
};

// [f(0), ..., f(d)] by direct enumeration.
std::vector<Int> ehrhart_counts(const LatticePolytope& p, const ScanOptions& opts = {});

// Alternating binomial transform: out_i = sum_j (-1)^j C(order, j) in_{i-j}.
std::vector<Int> delta_transform(const std::vector<Int>& counts, int order);

// delta-vector from f(0..d); throws NegativeDeltaCoefficient when the input
// is not the count sequence of a lattice polytope.
IntPolynomial delta_vector(const std::vector<Int>& f, int d);

std::pair<int, int> degree_codegree(const IntPolynomial& delta, int d);

IntPolynomial delta_bar(const IntPolynomial& delta, int l);

// Full pipeline with internal consistency checks. validate_codegree also
// confirms l against interior-point enumeration of the dilates.
EhrhartProfile compute_profile(const LatticePolytope& p, const ScanOptions& opts = {},
                               bool validate_codegree = true);

// Ehrhart reciprocity: interpolates f from f(0..d) and checks
// f(-m) = (-1)^d |interior(mP)| for m = 1..l. Non-integral interpolation
// values throw ReciprocityViolation.
bool reciprocity_check(const LatticePolytope& p, const EhrhartProfile& profile,
                       const ScanOptions& opts = {});

// Exact Lagrange evaluation of the degree-d interpolant of f(0..d).
Rat interpolate_counts(const std::vector<Int>& f, const Int& x);

} // namespace ehrhart

#endif
