#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hingerot {

// Arbitrary-precision signed integer used throughout the exact kernel.
// Comparator intermediates grow like order^8, so fixed-width types are not an
// option; cpp_int keeps values below 2^128 in inline storage, which covers
// every magnitude reached at practical table radii.
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace hingerot
