#ifndef EHRHART_REFLEXIVITY_HPP
#define EHRHART_REFLEXIVITY_HPP

#include <optional>

#include "ehrhart/decomposition.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

struct ReflexivityReport {
    bool is_reflexive = false;              // P itself
    bool is_translate_of_reflexive = false; // lP
    std::optional<Point> translation;       // interior point of lP when it exists
    bool delta_symmetric = false;           // delta_i = delta_{s-i}
    bool b_is_zero = false;
};

// Origin is the unique interior lattice point and every facet inequality
// <u, x> <= c has c = 1.
bool is_reflexive(const LatticePolytope& p, const ScanOptions& opts = {});

// When P has exactly one interior lattice point w, tests P - w; otherwise
// (zero or several interior points) the answer is no.
std::pair<bool, std::optional<Point>> is_translate_of_reflexive(const LatticePolytope& p,
                                                                const ScanOptions& opts = {});

// The three equivalent predicates, each computed independently; disagreement
// throws TataViolation (it would mean a bug, not a math failure).
ReflexivityReport stanley_symmetry_check(const LatticePolytope& p, const EhrhartProfile& profile,
                                         const ABDecomposition& dec, const ScanOptions& opts = {});

} // namespace ehrhart

#endif
