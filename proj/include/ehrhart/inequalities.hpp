#ifndef EHRHART_INEQUALITIES_HPP
#define EHRHART_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ehrhart/polynomial.hpp"

namespace ehrhart {

enum class InequalityFamily {
    Hibi_ineq1,
    Stanley_ineq2,
    HibiLower_ineq3,
    Yoke_I1,
    Yoke_I2,
    Yoke_I3,
    Yoke_I4,
    Sum_ineq5,
    Athanasiadis_un,
    Athanasiadis_mid,
    Athanasiadis_UBT,
    Dwarf_cuatro,
    Dwarf_cinco,
};

std::string family_name(InequalityFamily f);

struct InequalityReport {
    InequalityFamily family;
    bool holds = true;
    bool vacuous = false; // HibiLower_ineq3 with delta_d = 0
    std::optional<int> first_violation;
    Int lhs = 0, rhs = 0; // values at the violation (or 0 when none)
};

// A delta-vector together with its shape parameters. Out-of-range indices
// read as zero. Auditors accept raw vectors, not only polytope-derived ones.
struct DeltaInput {
    IntPolynomial delta;
    int d = 0;
    int s = 0;
    int l = 1;

    static DeltaInput from_delta(IntPolynomial delta, int d);
};

// Theorem families I1-I4 (unconditional for polytope delta-vectors).
std::vector<InequalityReport> check_yoke(const DeltaInput& in);

// Classical families: ineq1 (Hibi), ineq2 (Stanley), ineq3 (Hibi lower,
// vacuous when delta_d = 0), ineq5 (the consequence of I1 + I2).
std::vector<InequalityReport> check_classical(const DeltaInput& in);

// Necessary criterion when the boundary admits a regular unimodular
// triangulation: cuatro and cinco.
std::vector<InequalityReport> check_dwarf(const DeltaInput& in);

// Necessary criterion when P itself admits a regular unimodular
// triangulation: un, the middle descending chain, and the upper bound.
std::vector<InequalityReport> check_athanasiadis(const DeltaInput& in);

std::vector<InequalityReport> check_all(const DeltaInput& in);

} // namespace ehrhart

#endif
