#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace swb {

// Index values grow like n * C(n-1, k-1); keep them exact at any scale.
using BigInt = boost::multiprecision::cpp_int;

// Normalized fraction of two BigInts. Used for betweenness sums and the
// fractional terms of the edge-based SW_3 formulas.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

}  // namespace swb
