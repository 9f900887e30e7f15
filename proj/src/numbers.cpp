#include "ehrhart/numbers.hpp"

namespace ehrhart {

Int binomial(const Int& n, const Int& k) {
    if (k < 0) return 0;
    if (k == 0) return 1; // C(n, 0) = 1 for every n, negative included
    if (n < 0 || n < k) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int result = 1;
    for (Int i = 1; i <= kk; ++i) {
        result = result * (n - kk + i) / i;
    }
    return result;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

} // namespace ehrhart
