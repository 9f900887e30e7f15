#include "ehrhart/polynomial.hpp"

#include <sstream>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(Int c) {
    return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(int k, Int c) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::ones(int k) {
    return IntPolynomial(std::vector<Int>(k, Int(1)));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return IntPolynomial();
    if (k < 0) {
        for (int i = 0; i < std::min(-k, degree() + 1); ++i)
            if (coeffs_[i] != 0) throw ShiftUnderflow("negative exponent produced by shift");
        if (-k > degree()) return IntPolynomial();
        return IntPolynomial(std::vector<Int>(coeffs_.begin() - k, coeffs_.end()));
    }
    std::vector<Int> out(coeffs_.size() + k, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed(int n) const {
    if (is_zero()) return IntPolynomial();
    if (n < degree()) throw InternalError("reversal degree below polynomial degree");
    std::vector<Int> out(n + 1, Int(0));
    for (int i = 0; i <= degree(); ++i) out[n - i] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::min_coeff() const {
    if (is_zero()) return 0;
    Int m = coeffs_[0];
    for (const auto& c : coeffs_)
        if (c < m) m = c;
    return m;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (i == 0) os << a.str();
        else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace ehrhart
