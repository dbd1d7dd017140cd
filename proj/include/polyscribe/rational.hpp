#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace polyscribe {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p", "-p", or "p/q".
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace polyscribe
