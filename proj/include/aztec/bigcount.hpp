#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace aztec {

// Exact signed integer of unbounded size; every count and determinant in the
// library is one of these. Streams as plain decimal.
using BigCount = boost::multiprecision::cpp_int;

// 2^e, e >= 0.
inline BigCount pow2(unsigned long long e) { return BigCount(1) << e; }

}  // namespace aztec
