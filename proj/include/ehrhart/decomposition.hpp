#ifndef EHRHART_DECOMPOSITION_HPP
#define EHRHART_DECOMPOSITION_HPP

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

// delta_bar = a + t^l b with a palindromic of degree d and b palindromic of
// degree d - l. b is stored trimmed; b == 0 iff delta is palindromic.
struct ABDecomposition {
    IntPolynomial a;
    IntPolynomial b;
    int l = 1;
    int d = 0;
};

// Coefficient conditions tied to the inequality families (one side of the
// equivalences the auditor cross-checks).
struct DecompositionConditions {
    bool a_nonneg = false;      // all a_i >= 0
    bool b_nonneg = false;      // all b_i >= 0
    bool a1_le_middle = false;  // a_1 <= a_i for i = 2..d-1
    bool dbar1_le_middle = false; // dbar_1 <= dbar_i for i = 2..d-1
    bool a_positive = false;    // all a_i >= 1
};

// Closed-form decomposition from the delta-vector alone:
//   a_{i+1} = delta_0 + ... + delta_{i+1} - delta_d - ... - delta_{d-i}
//   b_i     = -delta_0 - ... - delta_i + delta_s + ... + delta_{s-i}
// Throws DecompositionInvariantViolation when any structural property fails.
ABDecomposition decompose_closed_form(const IntPolynomial& delta, int d, int s, int l);

// Structural checks: palindromy, the sum identity against delta_bar,
// b >= 0 and 1 = a_0 <= a_1 <= a_i for 2 <= i <= d-1.
void check_decomposition(const ABDecomposition& dec, const IntPolynomial& delta_bar);

// True iff candidate satisfies both symmetry constraints, sums to delta_bar
// and equals the closed-form solution.
bool verify_uniqueness(const IntPolynomial& delta_bar, int d, int l,
                       const ABDecomposition& candidate);

// delta-polynomial of the pyramid over the boundary of P, computed from
// boundary counts of the dilates; equals a(t).
IntPolynomial delta_K_oracle(const LatticePolytope& p, const ScanOptions& opts = {});

// a_{i+1} - a_i for i = 0..floor(d/2)-1, computed both as consecutive
// differences of a and as delta_{i+1} - delta_{d-i}; the two must agree.
std::vector<Int> unimodality_bridge(const IntPolynomial& delta, int d);

DecompositionConditions decomposition_conditions(const ABDecomposition& dec,
                                                 const IntPolynomial& delta_bar);

// Exact division of delta_bar by 1 + t + ... + t^{l-1}.
IntPolynomial recover_delta(const IntPolynomial& delta_bar, int l);

} // namespace ehrhart

#endif
