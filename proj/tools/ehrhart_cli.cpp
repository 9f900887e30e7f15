// Command-line front end: profiles, decompositions and inequality audits of
// lattice polytopes given as {"rank": n, "vertices": [[...], ...]} JSON.
//
// Exit codes: 0 success / all unconditional families hold, 1 inequality
// violation, 2 parse error, 3 geometric degeneracy or enumeration cap,
// 4 internal cross-check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ehrhart/constructions.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/report.hpp"

namespace {

using namespace ehrhart;

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitCrossCheck = 4;

struct OutputOptions {
    bool as_json = false;
    std::string out_file;
};

void emit(const json& report, const OutputOptions& out, double elapsed_ms) {
    if (!out.out_file.empty()) {
        write_json_file(out.out_file, report);
        return;
    }
    if (out.as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << render_report(report);
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << elapsed_ms;
        std::cout << "elapsed: " << ms.str() << " ms\n";
    }
}

IntPolynomial parse_delta_list(const std::string& text) {
    std::vector<Int> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coeffs.push_back(Int(item));
        } catch (...) {
            throw ParseError("bad delta coefficient: " + item);
        }
    }
    if (coeffs.empty()) throw ParseError("empty delta vector");
    return IntPolynomial(std::move(coeffs));
}

int run(int argc, char** argv) {
    CLI::App app{"Ehrhart delta-vector toolkit"};
    app.require_subcommand(1);

    OutputOptions out;
    std::string file, route = "closed", tri_file, delta_list, construct_out, emit_tri;
    int dim = -1;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_flag("--json", out.as_json, "emit the JSON report on stdout");
        cmd->add_option("-o,--output", out.out_file, "write the JSON report to a file");
    };

    CLI::App* cmd_ehrhart = app.add_subcommand("ehrhart", "f-counts, delta, degree/codegree, delta_bar");
    cmd_ehrhart->add_option("file", file, "polytope JSON file")->required();
    add_output(cmd_ehrhart);

    CLI::App* cmd_decomp = app.add_subcommand("decompose", "delta_bar = a + t^l b decomposition");
    cmd_decomp->add_option("file", file, "polytope JSON file")->required();
    cmd_decomp->add_option("--route", route, "closed | triangulation | both")
        ->check(CLI::IsMember({"closed", "triangulation", "both"}));
    cmd_decomp->add_option("--triangulation", tri_file, "externally supplied boundary triangulation");
    cmd_decomp->add_option("--emit-triangulation", emit_tri, "write the constructed triangulation");
    add_output(cmd_decomp);

    CLI::App* cmd_check = app.add_subcommand("check", "inequality audit and reflexivity tests");
    cmd_check->add_option("file", file, "polytope JSON file");
    cmd_check->add_option("--delta", delta_list, "literal delta-vector, e.g. 1,2,1,2,0,0");
    cmd_check->add_option("--dim", dim, "dimension d for --delta");
    add_output(cmd_check);

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit a named polytope");
    std::string name;
    int carg = -1;
    long long kfactor = 1;
    std::string in_file, q_file;
    cmd_construct->add_option("name", name,
                              "simplex | reflexive-simplex | cube | dilate | pyramid | tensor | henk-tagami")
        ->required();
    cmd_construct->add_option("-d,--dim", carg, "dimension for simplex/reflexive-simplex/cube");
    cmd_construct->add_option("-k", kfactor, "dilation factor for dilate");
    cmd_construct->add_option("-i,--input", in_file, "input polytope for dilate/pyramid/tensor");
    cmd_construct->add_option("-q", q_file, "second factor for tensor (default: reflexive simplex of dim l-1)");
    cmd_construct->add_option("-o,--output", construct_out, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (cmd_construct->parsed()) {
        LatticePolytope p = [&] {
            if (name == "simplex") return standard_simplex(carg);
            if (name == "reflexive-simplex") return standard_reflexive_simplex(carg);
            if (name == "cube") return unit_cube(carg);
            if (name == "dilate") return dilate(read_polytope_file(in_file), Int(kfactor));
            if (name == "pyramid") return pyramid(read_polytope_file(in_file));
            if (name == "tensor" || name == "henk-tagami") {
                if (name == "henk-tagami" && in_file.empty()) return henk_tagami_example();
                LatticePolytope base = read_polytope_file(in_file);
                if (!q_file.empty()) return henk_tagami_tensor(base, read_polytope_file(q_file));
                auto [full, chart] = normalize_full_dimensional(base);
                EhrhartProfile prof = compute_profile(full);
                return henk_tagami_tensor(full, standard_reflexive_simplex(prof.l - 1));
            }
            if (name == "example") return henk_tagami_example();
            throw ParseError("unknown construction: " + name);
        }();
        write_json_file(construct_out, polytope_to_json(p));
        return 0;
    }

    ReportOptions ropts;
    if (cmd_ehrhart->parsed()) {
        ropts.route = Route::Closed;
    } else if (cmd_decomp->parsed()) {
        ropts.with_decomposition = true;
        if (route == "both") ropts.route = Route::Both;
        else if (route == "triangulation") ropts.route = Route::Triangulation;
        else ropts.route = Route::Closed;
    } else if (cmd_check->parsed()) {
        ropts.with_decomposition = true;
        ropts.with_reflexivity = true;
        ropts.with_inequalities = true;
        ropts.route = Route::Closed;
    }

    if (cmd_check->parsed() && !delta_list.empty()) {
        // literal delta-vector screening; no geometry available
        if (dim < 0) throw ParseError("--delta requires --dim");
        DeltaInput din = DeltaInput::from_delta(parse_delta_list(delta_list), dim);
        json report;
        report["input"] = {{"delta", poly_to_json(din.delta)}, {"d", din.d}, {"s", din.s},
                           {"l", din.l}};
        bool all_hold = true;
        json arr = json::array();
        for (const auto& rep : check_yoke(din)) {
            if (!rep.holds) all_hold = false;
            arr.push_back(inequality_to_json(rep));
        }
        for (const auto& rep : check_classical(din)) {
            if (!rep.holds) all_hold = false;
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
        report["inequalities"] = std::move(arr);
        emit(report, out, elapsed_ms());
        return all_hold ? 0 : kExitViolation;
    }

    LatticePolytope input = read_polytope_file(file);

    BoundaryTriangulation external;
    if (!tri_file.empty()) {
        std::ifstream in(tri_file);
        if (!in) throw ParseError("cannot open " + tri_file);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid triangulation JSON: ") + e.what());
        }
        auto [full, chart] = normalize_full_dimensional(input);
        external = triangulation_from_json(doc, full.dim());
        validate_triangulation(full, external, ropts.scan);
        ropts.external_triangulation = &external;
        if (ropts.route == Route::Closed) ropts.route = Route::Both;
    }

    RunOutcome outcome = run_pipeline(input, ropts);

    if (cmd_decomp->parsed() && !emit_tri.empty()) {
        auto [full, chart] = normalize_full_dimensional(input);
        write_json_file(emit_tri, triangulation_to_json(triangulate_boundary(full)));
    }

    emit(outcome.report, out, elapsed_ms());
    if (!outcome.routes_agree || !outcome.magnify_consistent) return kExitCrossCheck;
    if (cmd_check->parsed() && !outcome.unconditional_hold) return kExitViolation;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegeneratePolytope& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCrossCheck;
    }
}
