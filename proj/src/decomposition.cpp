#include "ehrhart/decomposition.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

ABDecomposition decompose_closed_form(const IntPolynomial& delta, int d, int s, int l) {
    if (s + l != d + 1) throw InternalError("degree/codegree mismatch");
    auto prefix = [&](int i) { // delta_0 + ... + delta_i, empty for i < 0
        Int acc = 0;
        for (int j = 0; j <= i; ++j) acc += delta.coeff(j);
        return acc;
    };

    std::vector<Int> a(d + 1);
    for (int i = 0; i <= d; ++i) {
        Int tail = 0; // delta_d + ... + delta_{d-i+1}
        for (int j = d - i + 1; j <= d; ++j) tail += delta.coeff(j);
        a[i] = prefix(i) - tail;
    }
    std::vector<Int> b(std::max(d - l + 1, 0));
    for (int i = 0; i <= d - l; ++i) {
        Int head = 0; // delta_s + ... + delta_{s-i}
        for (int j = s - i; j <= s; ++j)
            if (j >= 0) head += delta.coeff(j);
        b[i] = head - prefix(i);
    }

    ABDecomposition dec;
    dec.a = IntPolynomial(std::move(a));
    dec.b = IntPolynomial(std::move(b));
    dec.d = d;
    dec.l = l;
    check_decomposition(dec, delta_bar(delta, l));
    return dec;
}

void check_decomposition(const ABDecomposition& dec, const IntPolynomial& dbar) {
    const int d = dec.d, l = dec.l;
    if (!dec.a.is_palindromic(d))
        throw DecompositionInvariantViolation("a(t) != t^d a(1/t)");
    if (!dec.b.is_zero() && !dec.b.is_palindromic(d - l))
        throw DecompositionInvariantViolation("b(t) != t^{d-l} b(1/t)");
    if (dec.a + dec.b.shifted(l) != dbar)
        throw DecompositionInvariantViolation("a + t^l b != delta_bar");
    if (dec.a.coeff(0) != 1) throw DecompositionInvariantViolation("a_0 != 1");
    if (dec.b.min_coeff() < 0) throw DecompositionInvariantViolation("negative b coefficient");
    if (d >= 1 && dec.a.coeff(0) > dec.a.coeff(1))
        throw DecompositionInvariantViolation("a_0 > a_1");
    for (int i = 2; i <= d - 1; ++i)
        if (dec.a.coeff(1) > dec.a.coeff(i))
            throw DecompositionInvariantViolation("a_1 > a_" + std::to_string(i));
}

bool verify_uniqueness(const IntPolynomial& dbar, int d, int l, const ABDecomposition& candidate) {
    if (!candidate.a.is_palindromic(d)) return false;
    if (!candidate.b.is_zero() && !candidate.b.is_palindromic(d - l)) return false;
    if (candidate.a + candidate.b.shifted(l) != dbar) return false;
    IntPolynomial delta = recover_delta(dbar, l);
    ABDecomposition closed = decompose_closed_form(delta, d, d + 1 - l, l);
    return candidate.a == closed.a && candidate.b == closed.b;
}

IntPolynomial recover_delta(const IntPolynomial& dbar, int l) {
    if (l == 1) return dbar;
    // synthetic division by 1 + t + ... + t^{l-1}
    std::vector<Int> rem(dbar.coeffs());
    if (rem.empty()) return IntPolynomial();
    std::vector<Int> q(rem.size(), Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= l - 1; --i) {
        Int c = rem[i];
        if (c == 0) continue;
        q[i - (l - 1)] = c;
        for (int j = 0; j < l; ++j) rem[i - j] -= c;
    }
    for (const auto& r : rem)
        if (r != 0) throw InternalError("delta_bar is not divisible by 1 + t + ... + t^{l-1}");
    return IntPolynomial(std::move(q));
}

IntPolynomial delta_K_oracle(const LatticePolytope& p, const ScanOptions& opts) {
    if (!p.full_dimensional()) throw DegeneratePolytope("delta_K_oracle requires full dimension");
    const int d = p.dim();
    std::vector<Int> fk(d + 2);
    fk[0] = 1;
    for (int m = 1; m <= d + 1; ++m)
        fk[m] = fk[m - 1] + count_lattice_points(p, m, opts).boundary;
    std::vector<Int> dk = delta_transform(fk, d + 1);
    if (dk.back() != 0)
        throw InternalError("delta_K transform does not terminate at degree d");
    dk.pop_back();
    for (const auto& c : dk)
        if (c < 0) throw InternalError("negative delta_K coefficient");
    return IntPolynomial(std::move(dk));
}

std::vector<Int> unimodality_bridge(const IntPolynomial& delta, int d) {
    auto [s, l] = degree_codegree(delta, d);
    ABDecomposition dec = decompose_closed_form(delta, d, s, l);
    std::vector<Int> gaps;
    for (int i = 0; i + 1 <= d / 2; ++i) {
        Int from_a = dec.a.coeff(i + 1) - dec.a.coeff(i);
        Int from_delta = delta.coeff(i + 1) - delta.coeff(d - i);
        if (from_a != from_delta)
            throw InternalError("a-gap and delta-gap disagree at i = " + std::to_string(i));
        gaps.push_back(from_a);
    }
    return gaps;
}

DecompositionConditions decomposition_conditions(const ABDecomposition& dec,
                                                 const IntPolynomial& dbar) {
    DecompositionConditions c;
    c.a_nonneg = dec.a.min_coeff() >= 0;
    c.b_nonneg = dec.b.min_coeff() >= 0;
    c.a1_le_middle = true;
    c.dbar1_le_middle = true;
    for (int i = 2; i <= dec.d - 1; ++i) {
        if (dec.a.coeff(1) > dec.a.coeff(i)) c.a1_le_middle = false;
        if (dbar.coeff(1) > dbar.coeff(i)) c.dbar1_le_middle = false;
    }
    c.a_positive = true;
    for (int i = 0; i <= dec.d; ++i)
        if (dec.a.coeff(i) < 1) c.a_positive = false;
    return c;
}

} // namespace ehrhart
