#include "ehrhart/report.hpp"

#include <sstream>

#include "ehrhart/errors.hpp"

namespace ehrhart {

RunOutcome run_pipeline(const LatticePolytope& input, const ReportOptions& opts) {
    RunOutcome out;
    out.report["input"] = {{"rank", input.rank()}, {"dim", input.dim()},
                           {"vertices", input.vertices().size()}};

    auto [p, chart] = normalize_full_dimensional(input);
    if (!chart.is_identity()) out.report["input"]["normalized_to_rank"] = p.rank();

    out.profile = compute_profile(p, opts.scan);
    out.report["profile"] = profile_to_json(out.profile);

    if (opts.with_decomposition) {
        ABDecomposition closed = decompose_closed_form(out.profile.delta, out.profile.d,
                                                       out.profile.s, out.profile.l);
        std::optional<TriangulationDecomposition> via_tri;
        if (opts.route != Route::Closed && p.dim() >= 1) {
            BoundaryTriangulation t = opts.external_triangulation
                                          ? *opts.external_triangulation
                                          : triangulate_boundary(p, PullOrder::LexAscending, opts.scan);
            Point vbar = choose_interior_point(p, out.profile.l, InteriorPointPick::LexSmallest,
                                               opts.scan);
            via_tri = decompose_via_triangulation(p, t, vbar, out.profile);
            json tri;
            tri["points"] = static_cast<int>(t.points.size());
            tri["maximal_faces"] = static_cast<int>(t.maximal_faces.size());
            tri["unimodular"] = is_unimodular(t);
            tri["regularity"] = t.regular_by_construction ? "by-construction" : "unchecked";
            out.report["triangulation"] = std::move(tri);
        }

        const ABDecomposition& shown =
            (opts.route == Route::Triangulation && via_tri) ? via_tri->dec : closed;
        out.decomposition = shown;
        out.report["decomposition"] = decomposition_to_json(shown);
        if (opts.route == Route::Both && via_tri) {
            out.routes_agree = via_tri->dec.a == closed.a && via_tri->dec.b == closed.b;
            out.report["decomposition"]["routes_agree"] = out.routes_agree;
        }
    }

    if (opts.with_reflexivity) {
        if (!out.decomposition) {
            out.decomposition = decompose_closed_form(out.profile.delta, out.profile.d,
                                                      out.profile.s, out.profile.l);
        }
        ReflexivityReport rr = stanley_symmetry_check(p, out.profile, *out.decomposition, opts.scan);
        out.report["reflexivity"] = reflexivity_to_json(rr);
    }

    if (opts.with_inequalities) {
        DeltaInput din;
        din.delta = out.profile.delta;
        din.d = out.profile.d;
        din.s = out.profile.s;
        din.l = out.profile.l;
        json arr = json::array();
        for (const auto& rep : check_yoke(din)) {
            if (!rep.holds) out.unconditional_hold = false;
            arr.push_back(inequality_to_json(rep));
        }
        for (const auto& rep : check_classical(din)) {
            if (!rep.holds) out.unconditional_hold = false;
            arr.push_back(inequality_to_json(rep));
        }
        for (const auto& rep : check_dwarf(din)) {
            json j = inequality_to_json(rep);
            j["conditional"] = "regular unimodular triangulation of the boundary";
            arr.push_back(std::move(j));
        }
        for (const auto& rep : check_athanasiadis(din)) {
            json j = inequality_to_json(rep);
            j["conditional"] = "regular unimodular triangulation of the polytope";
            arr.push_back(std::move(j));
        }
        out.report["inequalities"] = std::move(arr);

        if (!out.decomposition) {
            out.decomposition = decompose_closed_form(out.profile.delta, out.profile.d,
                                                      out.profile.s, out.profile.l);
        }
        DecompositionConditions cond =
            decomposition_conditions(*out.decomposition, out.profile.delta_bar);
        auto verdict = [&](InequalityFamily fam) {
            std::vector<InequalityReport> reps;
            switch (fam) {
                case InequalityFamily::Hibi_ineq1:
                case InequalityFamily::Stanley_ineq2:
                case InequalityFamily::Sum_ineq5: reps = check_classical(din); break;
                default: reps = check_yoke(din); break;
            }
            for (const auto& r : reps)
                if (r.family == fam) return r.holds;
            throw InternalError("family not found");
        };
        out.magnify_consistent =
            cond.a_nonneg == verdict(InequalityFamily::Hibi_ineq1) &&
            cond.b_nonneg == verdict(InequalityFamily::Stanley_ineq2) &&
            cond.b_nonneg == verdict(InequalityFamily::Yoke_I3) &&
            cond.a1_le_middle == verdict(InequalityFamily::Yoke_I2) &&
            cond.dbar1_le_middle == verdict(InequalityFamily::Yoke_I4) &&
            cond.a_positive == verdict(InequalityFamily::Sum_ineq5);
        out.report["magnify_consistent"] = out.magnify_consistent;
    }

    return out;
}

namespace {

std::string poly_line(const json& coeffs, const std::string& var) {
    IntPolynomial p;
    std::vector<Int> c;
    for (const auto& v : coeffs) c.push_back(Int(v.get<long long>()));
    return IntPolynomial(c).str(var);
}

} // namespace

std::string render_report(const json& report) {
    std::ostringstream os;
    if (report.contains("profile")) {
        const auto& pr = report["profile"];
        os << "d = " << pr["d"] << ", s = " << pr["s"] << ", l = " << pr["l"] << "\n";
        os << "f(0.." << pr["d"] << ")  = " << pr["f"].dump() << "\n";
        os << "delta      = " << pr["delta"].dump() << "   (" << poly_line(pr["delta"], "t") << ")\n";
        os << "delta_bar  = " << pr["delta_bar"].dump() << "   (" << poly_line(pr["delta_bar"], "t")
           << ")\n";
    }
    if (report.contains("decomposition")) {
        const auto& d = report["decomposition"];
        os << "a = " << d["a"].dump() << "   (" << poly_line(d["a"], "t") << ")\n";
        os << "b = " << d["b"].dump() << "   ("
           << (d["b"].empty() ? std::string("0") : poly_line(d["b"], "t")) << ")\n";
        if (d.contains("routes_agree"))
            os << "closed-form and triangulation routes " << (d["routes_agree"].get<bool>() ? "agree" : "DISAGREE")
               << "\n";
    }
    if (report.contains("triangulation")) {
        const auto& t = report["triangulation"];
        os << "boundary triangulation: " << t["points"] << " points, " << t["maximal_faces"]
           << " maximal faces, " << (t["unimodular"].get<bool>() ? "unimodular" : "not unimodular")
           << " (regularity " << t["regularity"].get<std::string>() << ")\n";
    }
    if (report.contains("reflexivity")) {
        const auto& r = report["reflexivity"];
        os << "reflexive: " << (r["is_reflexive"].get<bool>() ? "yes" : "no")
           << "; lP translate of reflexive: "
           << (r["is_translate_of_reflexive"].get<bool>() ? "yes" : "no")
           << "; delta symmetric: " << (r["delta_symmetric"].get<bool>() ? "yes" : "no")
           << "; b = 0: " << (r["b_is_zero"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (report.contains("inequalities")) {
        os << "inequality audit:\n";
        for (const auto& rep : report["inequalities"]) {
            os << "  " << rep["family"].get<std::string>() << ": ";
            if (rep.contains("vacuous") && rep["vacuous"].get<bool>()) os << "vacuous";
            else if (rep["holds"].get<bool>()) os << "holds";
            else
                os << "FAILS at i = " << rep["first_violation"] << " (lhs " << rep["lhs"]
                   << ", rhs " << rep["rhs"] << ")";
            if (rep.contains("conditional"))
                os << "  [necessary given a " << rep["conditional"].get<std::string>() << "]";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace ehrhart
