#include "ehrhart/inequalities.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

std::string family_name(InequalityFamily f) {
    switch (f) {
        case InequalityFamily::Hibi_ineq1: return "Hibi_ineq1";
        case InequalityFamily::Stanley_ineq2: return "Stanley_ineq2";
        case InequalityFamily::HibiLower_ineq3: return "HibiLower_ineq3";
        case InequalityFamily::Yoke_I1: return "Yoke_I1";
        case InequalityFamily::Yoke_I2: return "Yoke_I2";
        case InequalityFamily::Yoke_I3: return "Yoke_I3";
        case InequalityFamily::Yoke_I4: return "Yoke_I4";
        case InequalityFamily::Sum_ineq5: return "Sum_ineq5";
        case InequalityFamily::Athanasiadis_un: return "Athanasiadis_un";
        case InequalityFamily::Athanasiadis_mid: return "Athanasiadis_mid";
        case InequalityFamily::Athanasiadis_UBT: return "Athanasiadis_UBT";
        case InequalityFamily::Dwarf_cuatro: return "Dwarf_cuatro";
        case InequalityFamily::Dwarf_cinco: return "Dwarf_cinco";
    }
    return "?";
}

DeltaInput DeltaInput::from_delta(IntPolynomial delta, int d) {
    if (delta.is_zero() || delta.degree() > d || delta.coeff(0) != 1)
        throw InternalError("not a delta-vector shape: need delta_0 = 1 and degree <= d");
    DeltaInput in;
    in.delta = std::move(delta);
    in.d = d;
    in.s = in.delta.degree();
    in.l = d + 1 - in.s;
    return in;
}

namespace {

// sum of delta_j for j = from..to (empty when from > to); out-of-range zero
Int range_sum(const DeltaInput& in, int from, int to) {
    Int acc = 0;
    for (int j = from; j <= to; ++j) acc += in.delta.coeff(j);
    return acc;
}

struct Checker {
    InequalityReport rep;
    explicit Checker(InequalityFamily fam) { rep.family = fam; }

    void le(int index, const Int& lhs, const Int& rhs) {
        if (rep.holds && lhs > rhs) {
            rep.holds = false;
            rep.first_violation = index;
            rep.lhs = lhs;
            rep.rhs = rhs;
        }
    }
    void ge(int index, const Int& lhs, const Int& rhs) {
        if (rep.holds && lhs < rhs) {
            rep.holds = false;
            rep.first_violation = index;
            rep.lhs = lhs;
            rep.rhs = rhs;
        }
    }
};

} // namespace

std::vector<InequalityReport> check_yoke(const DeltaInput& in) {
    const int d = in.d, s = in.s, l = in.l;
    std::vector<InequalityReport> out;

    Checker i1(InequalityFamily::Yoke_I1);
    i1.ge(0, in.delta.coeff(1), in.delta.coeff(d));
    out.push_back(i1.rep);

    Checker i2(InequalityFamily::Yoke_I2);
    for (int i = 0; i + 1 <= d / 2; ++i)
        i2.ge(i, range_sum(in, 2, i + 1), range_sum(in, d - i, d - 1));
    out.push_back(i2.rep);

    Checker i3(InequalityFamily::Yoke_I3);
    for (int i = 0; i <= d; ++i)
        i3.le(i, range_sum(in, 0, i), range_sum(in, s - i, s));
    out.push_back(i3.rep);

    Checker i4(InequalityFamily::Yoke_I4);
    Int lhs4 = range_sum(in, 2 - l, 1);
    for (int i = 2; i <= d - 1; ++i)
        i4.le(i, lhs4, range_sum(in, i - l + 1, i));
    out.push_back(i4.rep);

    return out;
}

std::vector<InequalityReport> check_classical(const DeltaInput& in) {
    const int d = in.d, s = in.s;
    std::vector<InequalityReport> out;

    Checker h1(InequalityFamily::Hibi_ineq1);
    for (int i = 0; i + 1 <= d / 2; ++i)
        h1.ge(i, range_sum(in, 0, i + 1), range_sum(in, d - i, d));
    out.push_back(h1.rep);

    Checker st(InequalityFamily::Stanley_ineq2);
    for (int i = 0; i <= d; ++i)
        st.le(i, range_sum(in, 0, i), range_sum(in, s - i, s));
    out.push_back(st.rep);

    Checker h3(InequalityFamily::HibiLower_ineq3);
    if (in.delta.coeff(d) == 0) {
        h3.rep.vacuous = true;
    } else {
        h3.ge(1, in.delta.coeff(1), Int(1));
        for (int i = 2; i <= d - 1; ++i)
            h3.le(i, in.delta.coeff(1), in.delta.coeff(i));
    }
    out.push_back(h3.rep);

    Checker s5(InequalityFamily::Sum_ineq5);
    for (int i = 0; i + 1 <= d / 2; ++i)
        s5.ge(i, range_sum(in, 1, i + 1), range_sum(in, d - i, d));
    out.push_back(s5.rep);

    return out;
}

std::vector<InequalityReport> check_dwarf(const DeltaInput& in) {
    const int d = in.d;
    std::vector<InequalityReport> out;

    Checker c4(InequalityFamily::Dwarf_cuatro);
    for (int i = 0; i + 1 <= d / 2; ++i)
        c4.ge(i, in.delta.coeff(i + 1), in.delta.coeff(d - i));
    out.push_back(c4.rep);

    Checker c5(InequalityFamily::Dwarf_cinco);
    for (int i = 0; i + 1 <= d / 2; ++i) {
        Int bound = binomial(in.delta.coeff(1) - in.delta.coeff(d) + i + 1, Int(i + 1));
        c5.le(i, range_sum(in, 0, i + 1), range_sum(in, d - i, d) + bound);
    }
    out.push_back(c5.rep);

    return out;
}

std::vector<InequalityReport> check_athanasiadis(const DeltaInput& in) {
    const int d = in.d;
    std::vector<InequalityReport> out;

    Checker un(InequalityFamily::Athanasiadis_un);
    for (int i = 0; i + 1 <= d / 2; ++i)
        un.ge(i, in.delta.coeff(i + 1), in.delta.coeff(d - i));
    out.push_back(un.rep);

    Checker mid(InequalityFamily::Athanasiadis_mid);
    for (int i = (d + 1) / 2; i <= d - 1; ++i)
        mid.ge(i, in.delta.coeff(i), in.delta.coeff(i + 1));
    out.push_back(mid.rep);

    Checker ubt(InequalityFamily::Athanasiadis_UBT);
    for (int i = 0; i <= d; ++i)
        ubt.le(i, in.delta.coeff(i), binomial(in.delta.coeff(1) + i - 1, Int(i)));
    out.push_back(ubt.rep);

    return out;
}

std::vector<InequalityReport> check_all(const DeltaInput& in) {
    std::vector<InequalityReport> out = check_yoke(in);
    for (auto&& r : check_classical(in)) out.push_back(r);
    for (auto&& r : check_dwarf(in)) out.push_back(r);
    for (auto&& r : check_athanasiadis(in)) out.push_back(r);
    return out;
}

} // namespace ehrhart
