// Acceptance suite: each criterion prints one PASS/FAIL line. Run with no
// arguments for all criteria, or pass criterion numbers to run a subset.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ehrhart/constructions.hpp"
#include "ehrhart/decomposition.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/inequalities.hpp"
#include "ehrhart/reflexivity.hpp"
#include "ehrhart/report.hpp"
#include "ehrhart/triangulation.hpp"
#include "test_support.hpp"

using namespace ehrhart;

namespace {

struct Criterion {
    int id;
    std::string summary;
    std::function<void(std::ostream&)> run; // throws on failure
};

#define ACCEPT(cond, msg)                                         \
    do {                                                          \
        if (!(cond)) {                                            \
            std::ostringstream os_;                               \
            os_ << msg;                                           \
            throw std::runtime_error(os_.str());                  \
        }                                                         \
    } while (0)

std::vector<LatticePolytope> full_corpus() {
    std::vector<LatticePolytope> corpus = testing::random_corpus();
    for (auto& [name, p] : testing::named_polytopes()) corpus.push_back(p);
    return corpus;
}

struct Routes {
    EhrhartProfile profile;
    ABDecomposition closed;
    TriangulationDecomposition tri;
    BoundaryTriangulation t;
};

Routes run_both_routes(const LatticePolytope& p) {
    Routes r;
    r.profile = compute_profile(p);
    r.closed = decompose_closed_form(r.profile.delta, r.profile.d, r.profile.s, r.profile.l);
    r.t = triangulate_boundary(p);
    Point vbar = choose_interior_point(p, r.profile.l);
    r.tri = decompose_via_triangulation(p, r.t, vbar, r.profile);
    return r;
}

void criterion_1(std::ostream&) {
    LatticePolytope p = henk_tagami_example();
    Routes r = run_both_routes(p);
    ACCEPT(r.profile.delta == IntPolynomial(std::vector<Int>{1, 2, 1, 2}),
           "delta != (1,2,1,2,0,0): " << r.profile.delta.str());
    ACCEPT(r.profile.s == 3 && r.profile.l == 3, "expected s = l = 3");
    ACCEPT(r.profile.delta_bar == IntPolynomial(std::vector<Int>{1, 3, 4, 5, 3, 2}),
           "delta_bar mismatch: " << r.profile.delta_bar.str());
    ACCEPT(r.closed.a == IntPolynomial(std::vector<Int>{1, 3, 4, 4, 3, 1}),
           "a mismatch: " << r.closed.a.str());
    ACCEPT(r.closed.b == IntPolynomial(std::vector<Int>{1, 0, 1}), "b mismatch: " << r.closed.b.str());
    ACCEPT(r.tri.dec.a == r.closed.a && r.tri.dec.b == r.closed.b, "routes disagree");
}

void criterion_2(std::ostream&) {
    for (int d = 1; d <= 6; ++d) {
        LatticePolytope p = standard_simplex(d);
        EhrhartProfile prof = compute_profile(p);
        ACCEPT(prof.delta == IntPolynomial::constant(1), "simplex delta != 1 at d = " << d);
        ACCEPT(prof.delta_bar == IntPolynomial::ones(d + 1), "delta_bar != 1 + ... + t^d");
        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        ACCEPT(dec.a == prof.delta_bar, "a != delta_bar at d = " << d);
        ACCEPT(dec.b.is_zero(), "b != 0 at d = " << d);

        // every yoke inequality holds with equality
        DeltaInput in = DeltaInput::from_delta(prof.delta, d);
        for (const auto& rep : check_yoke(in)) ACCEPT(rep.holds, "yoke family fails on the simplex");
        auto sum = [&](int from, int to) {
            Int acc = 0;
            for (int j = from; j <= to; ++j) acc += prof.delta.coeff(j);
            return acc;
        };
        ACCEPT(prof.delta.coeff(1) == prof.delta.coeff(d), "I1 not an equality");
        for (int i = 0; i + 1 <= d / 2; ++i)
            ACCEPT(sum(2, i + 1) == sum(d - i, d - 1), "I2 not an equality at i = " << i);
        for (int i = 0; i <= d; ++i)
            ACCEPT(sum(0, i) == sum(prof.s - i, prof.s), "I3 not an equality at i = " << i);
        for (int i = 2; i <= d - 1; ++i)
            ACCEPT(sum(2 - prof.l, 1) == sum(i - prof.l + 1, i), "I4 not an equality at i = " << i);
    }
}

void criterion_3(std::ostream&) {
    for (int d = 1; d <= 4; ++d) {
        LatticePolytope p = standard_reflexive_simplex(d);
        EhrhartProfile prof = compute_profile(p);
        ACCEPT(prof.delta == IntPolynomial::ones(d + 1), "delta != 1 + ... + t^d at d = " << d);
        ACCEPT(is_reflexive(p), "is_reflexive false at d = " << d);
        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        ACCEPT(dec.b.is_zero(), "b != 0 at d = " << d);
        ReflexivityReport rep = stanley_symmetry_check(p, prof, dec);
        ACCEPT(rep.delta_symmetric && rep.b_is_zero && rep.is_translate_of_reflexive,
               "three-way agreement fails at d = " << d);
    }
}

void criterion_4(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0;
    for (const auto& p : corpus) {
        Routes r = run_both_routes(p);
        ACCEPT(r.tri.dec.a == r.closed.a && r.tri.dec.b == r.closed.b,
               "route mismatch on corpus entry " << n);
        ACCEPT(lemma_upper_check(r.tri, r.profile), "sum (B_F + B'_F) h_F != delta_bar at " << n);
        ++n;
    }
    log << n << " polytopes";
}

void criterion_5(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0;
    for (const auto& p : corpus) {
        EhrhartProfile prof = compute_profile(p);
        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        ACCEPT(delta_K_oracle(p) == dec.a, "delta_K != a on corpus entry " << n);
        ++n;
    }
    log << n << " polytopes";
}

void criterion_6(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0;
    for (const auto& p : corpus) {
        EhrhartProfile prof = compute_profile(p);
        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        const int d = prof.d;
        ACCEPT(dec.a.is_palindromic(d), "a not palindromic at " << n);
        ACCEPT(dec.b.is_zero() || dec.b.is_palindromic(d - prof.l), "b not palindromic at " << n);
        ACCEPT(dec.b.min_coeff() >= 0, "negative b coefficient at " << n);
        ACCEPT(dec.a.coeff(0) == 1, "a_0 != 1 at " << n);
        if (d >= 1) ACCEPT(dec.a.coeff(0) <= dec.a.coeff(1), "a_0 > a_1 at " << n);
        for (int i = 2; i <= d - 1; ++i)
            ACCEPT(dec.a.coeff(1) <= dec.a.coeff(i), "a_1 > a_i at " << n);
        if (d <= 5)
            for (int i = 0; i + 1 <= d / 2; ++i)
                ACCEPT(dec.a.coeff(i) <= dec.a.coeff(i + 1), "a not unimodal (d <= 5) at " << n);
        ++n;
    }
    log << n << " polytopes";
}

void criterion_7(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0;
    for (const auto& p : corpus) {
        EhrhartProfile prof = compute_profile(p);
        DeltaInput in = DeltaInput::from_delta(prof.delta, prof.d);
        auto yoke = check_yoke(in);
        auto classical = check_classical(in);
        for (const auto& rep : yoke)
            ACCEPT(rep.holds, family_name(rep.family) << " fails on corpus entry " << n);

        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        DecompositionConditions cond = decomposition_conditions(dec, prof.delta_bar);
        auto verdict = [&](InequalityFamily fam) -> bool {
            for (const auto& r : yoke)
                if (r.family == fam) return r.holds;
            for (const auto& r : classical)
                if (r.family == fam) return r.holds;
            throw std::runtime_error("family missing");
        };
        ACCEPT(cond.a_nonneg == verdict(InequalityFamily::Hibi_ineq1), "magnify (ineq1) at " << n);
        ACCEPT(cond.b_nonneg == verdict(InequalityFamily::Stanley_ineq2), "magnify (ineq2) at " << n);
        ACCEPT(cond.b_nonneg == verdict(InequalityFamily::Yoke_I3), "magnify (I3) at " << n);
        ACCEPT(cond.a1_le_middle == verdict(InequalityFamily::Yoke_I2), "magnify (I2) at " << n);
        ACCEPT(cond.dbar1_le_middle == verdict(InequalityFamily::Yoke_I4), "magnify (I4) at " << n);
        ACCEPT(cond.a_positive == verdict(InequalityFamily::Sum_ineq5), "magnify (ineq5) at " << n);
        ++n;
    }
    log << n << " polytopes";
}

void criterion_8(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0;
    for (const auto& p : corpus) {
        EhrhartProfile prof = compute_profile(p);
        ABDecomposition dec = decompose_closed_form(prof.delta, prof.d, prof.s, prof.l);
        // throws TataViolation when the three predicates disagree
        stanley_symmetry_check(p, prof, dec);
        ++n;
    }
    log << n << " polytopes";
}

void criterion_9(std::ostream& log) {
    auto corpus = full_corpus();
    int n = 0, checked = 0;
    for (const auto& p : corpus) {
        if (p.dim() <= 3 && p.dim() >= 1) {
            BoundaryTriangulation t = triangulate_boundary(p);
            ACCEPT(is_unimodular(t), "d <= 3 boundary triangulation not unimodular at " << n);
            EhrhartProfile prof = compute_profile(p);
            DeltaInput in = DeltaInput::from_delta(prof.delta, prof.d);
            for (const auto& rep : check_dwarf(in))
                ACCEPT(rep.holds, family_name(rep.family) << " fails with unimodular boundary at " << n);
            ++checked;
        }
        ++n;
    }
    // regular simplex: both families with equality
    for (int d = 1; d <= 6; ++d) {
        IntPolynomial delta = IntPolynomial::constant(1);
        for (int i = 0; i + 1 <= d / 2; ++i) {
            ACCEPT(delta.coeff(i + 1) == delta.coeff(d - i), "cuatro not an equality");
            Int lhs = 1, rhs = 0 + binomial(Int(i + 1), Int(i + 1));
            ACCEPT(lhs == rhs, "cinco not an equality at d = " << d << ", i = " << i);
        }
    }
    log << checked << " low-dimensional polytopes";
}

void criterion_10(std::ostream& log) {
    auto corpus = full_corpus();
    long long faces = 0;
    for (const auto& p : corpus) {
        if (p.dim() < 1) continue;
        BoundaryTriangulation t = triangulate_boundary(p);
        for (const auto& face : t.face_closure()) {
            IntPolynomial h = h_vector(t, face);
            check_h_vector(h, t.d - 1 - (static_cast<int>(face.size()) - 1));
            ++faces;
        }
    }
    log << faces << " h-vectors";
}

void criterion_11(std::ostream& log) {
    struct Case {
        std::string name;
        LatticePolytope p;
    };
    std::vector<Case> cases;
    cases.push_back({"segment", standard_simplex(1)});
    cases.push_back({"2-simplex", standard_simplex(2)});
    cases.push_back({"henk-tagami", henk_tagami_example()});
    for (const auto& c : cases) {
        EhrhartProfile base = compute_profile(c.p);
        LatticePolytope t = henk_tagami_tensor(c.p, standard_reflexive_simplex(base.l - 1));
        ACCEPT(t.dim() == base.d + base.l, "tensor dimension mismatch for " << c.name);
        EhrhartProfile prof = compute_profile(t); // aborts beyond the point cap
        ACCEPT(prof.delta == base.delta_bar,
               "delta of the tensor != delta_bar of " << c.name << ": " << prof.delta.str());
    }
    log << "dimension-8 case under the default point cap";
}

void criterion_12(std::ostream& log) {
    auto corpus = full_corpus();
    ReportOptions opts;
    opts.route = Route::Both;
    opts.with_decomposition = true;
    opts.with_reflexivity = true;
    opts.with_inequalities = true;

    auto sweep = [&] {
        std::string all;
        for (const auto& p : corpus) all += run_pipeline(p, opts).report.dump() + "\n";
        return all;
    };
    std::string first = sweep();
    std::string second = sweep();
    ACCEPT(first == second, "corpus reports are not byte-identical across runs");
    log << corpus.size() << " reports, " << first.size() << " bytes";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "Henk-Tagami golden values (delta, s, l, delta_bar, a, b)", criterion_1},
        {2, "standard simplices d = 1..6", criterion_2},
        {3, "standard reflexive simplices d = 1..4", criterion_3},
        {4, "cross-route decomposition equality on the corpus", criterion_4},
        {5, "delta_K oracle equals a on the corpus", criterion_5},
        {6, "decomposition property suite on the corpus", criterion_6},
        {7, "inequality audit and coefficient equivalences on the corpus", criterion_7},
        {8, "symmetry/b=0/reflexive-translate agreement on the corpus", criterion_8},
        {9, "unimodularity in low dimension and its necessary criterion", criterion_9},
        {10, "h-vector property suite on corpus triangulations", criterion_10},
        {11, "tensor product law, including the dimension-8 case", criterion_11},
        {12, "byte-identical reports across two corpus runs", criterion_12},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream log;
        try {
            c.run(log);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << "[criterion " << c.id << "] PASS: " << c.summary;
            if (!log.str().empty()) std::cout << " (" << log.str() << ")";
            std::cout << " [" << secs << " s]\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[criterion " << c.id << "] FAIL: " << c.summary << " -- " << e.what()
                      << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
