#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace wiretap {

// Exact arbitrary-precision arithmetic. All weights, cut-rates and game
// values in this library are Rational; nothing in the core ever touches
// floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders r as "p/q" in lowest terms with q > 0 (e.g. "1/2", "0/1", "-3/22").
std::string to_fraction_string(const Rational& r);

/// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input
/// or a zero denominator.
std::optional<Rational> parse_fraction(std::string_view text);

}  // namespace wiretap
