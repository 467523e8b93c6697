#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctraffic {

/// Exact signed integer used for every coefficient and count in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace ctraffic
