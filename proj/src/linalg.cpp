#include "ehrhart/linalg.hpp"

#include <algorithm>

#include "ehrhart/errors.hpp"

namespace ehrhart {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(int r) const {
    std::vector<Int> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Int> IntMatrix::col(int c) const {
    std::vector<Int> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::mul(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InternalError("matrix-vector shape mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

int rank(IntMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Int a = m.at(r, c), b = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * a - m.at(r, j) * b;
        }
        ++r;
    }
    return r;
}

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMatrix a;
    IntMatrix u, uinv, v, vinv;

    void row_swap(int i, int j) {
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    // row i += q * row j
    void row_add(int i, int j, const Int& q) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
        for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, j) -= q * uinv.at(r, i);
    }
    void row_negate(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    // col i += q * col j
    void col_add(int i, int j, const Int& q) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) += q * a.at(r, j);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
        for (int c = 0; c < vinv.cols(); ++c) vinv.at(j, c) -= q * vinv.at(i, c);
    }
    void col_negate(int i) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) = -a.at(r, i);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) = -v.at(r, i);
        for (int c = 0; c < vinv.cols(); ++c) vinv.at(i, c) = -vinv.at(i, c);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    SnfWork w;
    w.a = input;
    const int m = input.rows(), n = input.cols();
    w.u = IntMatrix::identity(m);
    w.uinv = IntMatrix::identity(m);
    w.v = IntMatrix::identity(n);
    w.vinv = IntMatrix::identity(n);

    int t = 0;
    while (t < std::min(m, n)) {
        // find a non-zero pivot in the trailing block
        int pr = -1, pc = -1;
        for (int i = t; i < m && pr < 0; ++i)
            for (int j = t; j < n; ++j)
                if (w.a.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        // clear row t and column t by gcd reduction
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i) {
                while (w.a.at(i, t) != 0) {
                    Int q = floor_div(w.a.at(i, t), w.a.at(t, t));
                    w.row_add(i, t, -q);
                    if (w.a.at(i, t) != 0) { w.row_swap(t, i); dirty = true; }
                }
            }
            for (int j = t + 1; j < n; ++j) {
                while (w.a.at(t, j) != 0) {
                    Int q = floor_div(w.a.at(t, j), w.a.at(t, t));
                    w.col_add(j, t, -q);
                    if (w.a.at(t, j) != 0) { w.col_swap(t, j); dirty = true; }
                }
            }
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);

        // enforce divisibility d_t | a_ij on the trailing block
        bool restart = false;
        for (int i = t + 1; i < m && !restart; ++i)
            for (int j = t + 1; j < n; ++j)
                if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                    w.row_add(t, i, 1);
                    restart = true;
                    break;
                }
        if (!restart) ++t;
    }

    SmithForm out;
    out.d = w.a;
    out.u = w.u;
    out.uinv = w.uinv;
    out.v = w.v;
    out.vinv = w.vinv;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.diag.push_back(w.a.at(i, i));
    return out;
}

std::vector<Rat> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
        throw InternalError("solve expects a square system");
    const int n = a.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
        m[i][n] = Rat(b[i]);
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) throw InternalError("singular system");
        std::swap(m[c], m[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

std::vector<Int> hyperplane_normal(const IntMatrix& rows) {
    const int n = rows.cols();
    if (rows.rows() != n - 1) throw InternalError("hyperplane_normal expects (n-1) x n");
    std::vector<Int> normal(n);
    for (int j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (int r = 0; r < n - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r, cc++) = rows.at(r, c);
            }
        }
        Int d = determinant(std::move(minor));
        normal[j] = (j % 2 == 0) ? d : -d;
    }
    make_primitive(normal);
    return normal;
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

} // namespace ehrhart
