#ifndef EHRHART_REPORT_HPP
#define EHRHART_REPORT_HPP

#include <optional>
#include <string>

#include "ehrhart/io.hpp"

namespace ehrhart {

enum class Route { Closed, Triangulation, Both };

struct ReportOptions {
    Route route = Route::Closed;
    bool with_decomposition = false;
    bool with_reflexivity = false;
    bool with_inequalities = false;
    const BoundaryTriangulation* external_triangulation = nullptr;
    ScanOptions scan;
};

struct RunOutcome {
    json report;
    EhrhartProfile profile;
    std::optional<ABDecomposition> decomposition;
    bool routes_agree = true;
    bool unconditional_hold = true; // yoke + classical families
    bool magnify_consistent = true; // coefficient conditions match verdicts
};

// Runs the requested stages on a (possibly lower-dimensional) input
// polytope and assembles the JSON report. Deterministic: identical inputs
// and options produce byte-identical serialized reports.
RunOutcome run_pipeline(const LatticePolytope& input, const ReportOptions& opts);

// Human-readable rendering of a report.
std::string render_report(const json& report);

} // namespace ehrhart

#endif
