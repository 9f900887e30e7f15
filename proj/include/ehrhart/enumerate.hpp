#ifndef EHRHART_ENUMERATE_HPP
#define EHRHART_ENUMERATE_HPP

#include <vector>

#include "ehrhart/numbers.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

enum class PointFilter { All, Interior, Boundary };

struct LatticePointCounts {
    Int all = 0;
    Int interior = 0;
    Int boundary = 0;
};

struct ScanOptions {
    // Cap on examined lattice-point candidates per call; <= 0 means the
    // EHRHART_MAX_POINTS environment default (10^7 when unset).
    long long max_candidates = 0;
    bool parallel = true;
};

// Effective cap: EHRHART_MAX_POINTS or 10^7.
long long scan_point_cap();

// Exact lattice-point counts of the dilate m*P (m >= 0), P full-dimensional.
// Facet-guided pruned scan; OpenMP across the outermost scan coordinate.
LatticePointCounts count_lattice_points(const LatticePolytope& p, const Int& m,
                                        const ScanOptions& opts = {});

// Lattice points of m*P matching the filter, lex-sorted.
std::vector<Point> lattice_points(const LatticePolytope& p, const Int& m, PointFilter filter,
                                  const ScanOptions& opts = {});

// Plain bounding-box scan classifying every candidate with locate(). Kept as
// the serial reference for the pruned kernels; tests and the benchmark
// compare against it.
namespace reference {
LatticePointCounts count_lattice_points(const LatticePolytope& p, const Int& m,
                                        const ScanOptions& opts = {});
std::vector<Point> lattice_points(const LatticePolytope& p, const Int& m, PointFilter filter,
                                  const ScanOptions& opts = {});
} // namespace reference

} // namespace ehrhart

#endif
