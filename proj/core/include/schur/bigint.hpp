#ifndef SCHUR_BIGINT_HPP
#define SCHUR_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace schur {

// Bound values must stay exact for equation lengths up to 10^3 and up to
// 8 colors, which overflows 64 bits (1000^8 ~ 1e24). All bound arithmetic
// therefore runs on an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

} // namespace schur

#endif
