#include "ehrhart/ehrhart.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

std::vector<Int> ehrhart_counts(const LatticePolytope& p, const ScanOptions& opts) {
    if (!p.full_dimensional()) throw DegeneratePolytope("ehrhart_counts requires full dimension");
    std::vector<Int> f;
    f.reserve(p.dim() + 1);
    for (int m = 0; m <= p.dim(); ++m) f.push_back(count_lattice_points(p, m, opts).all);
    return f;
}

std::vector<Int> delta_transform(const std::vector<Int>& counts, int order) {
    std::vector<Int> out(counts.size(), Int(0));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Int b = binomial(order, static_cast<int>(j));
            if (b == 0) continue;
            if (j % 2 == 0) acc += b * counts[i - j];
            else acc -= b * counts[i - j];
        }
        out[i] = acc;
    }
    return out;
}

IntPolynomial delta_vector(const std::vector<Int>& f, int d) {
    if (static_cast<int>(f.size()) != d + 1) throw InternalError("delta_vector expects f(0..d)");
    if (f[0] != 1) throw InternalError("f(0) must be 1");
    std::vector<Int> delta = delta_transform(f, d + 1);
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (delta[i] < 0)
            throw NegativeDeltaCoefficient("delta_" + std::to_string(i) + " = " + delta[i].str() +
                                           " < 0: input is not a lattice-polytope count sequence");
    return IntPolynomial(delta);
}

std::pair<int, int> degree_codegree(const IntPolynomial& delta, int d) {
    if (delta.is_zero() || delta.degree() > d) throw InternalError("invalid delta-vector");
    int s = delta.degree();
    return {s, d + 1 - s};
}

IntPolynomial delta_bar(const IntPolynomial& delta, int l) {
    if (l < 1) throw InternalError("codegree must be >= 1");
    return IntPolynomial::ones(l) * delta;
}

EhrhartProfile compute_profile(const LatticePolytope& p, const ScanOptions& opts,
                               bool validate_codegree) {
    EhrhartProfile prof;
    prof.d = p.dim();
    prof.f = ehrhart_counts(p, opts);
    prof.delta = delta_vector(prof.f, prof.d);
    std::tie(prof.s, prof.l) = degree_codegree(prof.delta, prof.d);

    if (prof.delta.coeff(0) != 1) throw InternalError("delta_0 != 1");
    if (prof.d >= 1 && prof.delta.coeff(1) != prof.f[1] - (prof.d + 1))
        throw InternalError("delta_1 != f(1) - (d + 1)");

    if (validate_codegree && prof.d >= 1) {
        // l is the least dilate with an interior lattice point
        for (int m = 1; m <= prof.l; ++m) {
            Int interior = count_lattice_points(p, m, opts).interior;
            bool expect_empty = m < prof.l;
            if (expect_empty != (interior == 0))
                throw InternalError("codegree mismatch with interior-point enumeration at m = " +
                                    std::to_string(m));
        }
    }

    prof.delta_bar = delta_bar(prof.delta, prof.l);
    if (prof.delta_bar.degree() != prof.d || prof.delta_bar.min_coeff() < 1)
        throw InternalError("delta_bar must have degree d and positive coefficients");
    return prof;
}

Rat interpolate_counts(const std::vector<Int>& f, const Int& x) {
    const int d = static_cast<int>(f.size()) - 1;
    Rat acc = 0;
    for (int i = 0; i <= d; ++i) {
        Rat term(f[i]);
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            term *= Rat(x - j) / Rat(i - j);
        }
        acc += term;
    }
    return acc;
}

bool reciprocity_check(const LatticePolytope& p, const EhrhartProfile& profile,
                       const ScanOptions& opts) {
    for (int m = 1; m <= profile.l; ++m) {
        Rat value = interpolate_counts(profile.f, Int(-m));
        if (denominator(value) != 1)
            throw ReciprocityViolation("f(-" + std::to_string(m) + ") is not an integer");
        Int expected = count_lattice_points(p, m, opts).interior;
        if (profile.d % 2 == 1) expected = -expected;
        if (numerator(value) != expected) return false;
    }
    return true;
}

} // namespace ehrhart
