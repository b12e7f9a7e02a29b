#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weylext {

// Exact integer used for all matrix entries and coefficients.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

} // namespace weylext
