#ifndef EHRHART_NUMBERS_HPP
#define EHRHART_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ehrhart {

// All geometry and series arithmetic is exact. Int/Rat never round.
// Expression templates are off so these behave as plain value types.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using Point = std::vector<Int>;

// C(n, k), with C(n, k) = 0 for k < 0, n < 0 or n < k.
Int binomial(const Int& n, const Int& k);

// Floor of a/b for exact integers (b != 0).
Int floor_div(const Int& a, const Int& b);

// Ceiling of a/b for exact integers (b != 0).
Int ceil_div(const Int& a, const Int& b);

} // namespace ehrhart

#endif
