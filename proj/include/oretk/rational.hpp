#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace oretk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "31/30", or just "31" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Parses "a" or "a/b"; throws ParseError on malformed input or b == 0.
Rational rational_from_string(const std::string& text);

}  // namespace oretk
