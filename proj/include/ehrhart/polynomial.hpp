#ifndef EHRHART_POLYNOMIAL_HPP
#define EHRHART_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ehrhart/numbers.hpp"

namespace ehrhart {

// Dense integer polynomial. Stored trimmed: the top coefficient is non-zero
// unless the polynomial is zero, in which case coeffs is empty and the
// degree is -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(int k, Int c = 1);

    // 1 + t + ... + t^{k-1}; the zero polynomial for k == 0.
    static IntPolynomial ones(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of t^i; zero outside the stored range (any i accepted).
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

    // t^k * p; requires the result to have no negative exponents.
    IntPolynomial shifted(int k) const;

    // t^n * p(1/t) as a coefficient-list reversal against reference degree n.
    // Requires n >= degree().
    IntPolynomial reversed(int n) const;

    bool is_palindromic(int n) const { return *this == reversed(n); }

    Int eval(const Int& x) const;
    Int min_coeff() const; // over indices 0..degree(); 0 for the zero polynomial

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Int> coeffs_;
    void trim();
};

} // namespace ehrhart

#endif
