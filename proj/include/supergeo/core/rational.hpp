#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace supergeo {

// Exact arbitrary-precision rational coefficients.  cpp_rational keeps
// itself in lowest terms with a positive denominator, which is exactly
// the canonical form the normalization layer relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string toString(const Rational& r) { return r.str(); }

}  // namespace supergeo
