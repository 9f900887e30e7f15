#ifndef EHRHART_LINALG_HPP
#define EHRHART_LINALG_HPP

#include <vector>

#include "ehrhart/numbers.hpp"

namespace ehrhart {

// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Int(0)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Int> row(int r) const;
    std::vector<Int> col(int c) const;

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> mul(const std::vector<Int>& v) const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

// Rank over Q via fraction-free elimination.
int rank(IntMatrix m);

// Determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(IntMatrix m);

// Smith normal form: D = U * A * V with U, V unimodular and D diagonal
// with d_1 | d_2 | ... | d_r > 0, zeros after. Uinv and Vinv satisfy
// A = Uinv * D * Vinv.
struct SmithForm {
    IntMatrix d;
    IntMatrix u, uinv;
    IntMatrix v, vinv;
    int rank = 0;
    std::vector<Int> diag; // the r non-zero invariant factors
};

SmithForm smith_normal_form(const IntMatrix& a);

// Exact solve A x = b for square non-singular A; returns x as rationals.
std::vector<Rat> solve(const IntMatrix& a, const std::vector<Int>& b);

// Primitive normal of the hyperplane spanned by the rows of an
// (n-1) x n matrix of full row rank, via cofactor expansion. Zero vector
// when the rows are dependent.
std::vector<Int> hyperplane_normal(const IntMatrix& rows);

// Divide out the gcd of the entries; flips nothing. No-op on the zero vector.
void make_primitive(std::vector<Int>& v);

} // namespace ehrhart

#endif
