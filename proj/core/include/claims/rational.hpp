#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace claims {

// Exact arbitrary-precision scalars. Every quantity handled by the library
// (claims, estates, waterlines, baselines, awards) is a Rational; nothing in
// core ever rounds. Expression templates are disabled so the types behave as
// plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

Rational sum(const std::vector<Rational>& values);

/// Parses "42", "-3.25" or "100/13" into an exact Rational.
/// Returns std::nullopt on anything else (no exponents, no repeating forms).
std::optional<Rational> parse_number(std::string_view text);

/// Parses a finite decimal expansion only ("10", "38.75"). Fractions such as
/// "1/3" are rejected, which is what input files require.
std::optional<Rational> parse_decimal(std::string_view text);

/// Renders with round-half-even at `precision` fractional digits. With
/// `trim_zeros` the fractional part loses trailing zeros ("42.500" -> "42.5",
/// "10.000" -> "10"), matching table output.
std::string decimal_string(const Rational& value, unsigned precision, bool trim_zeros = true);

/// Renders "p/q", or just "p" when the value is an integer. Round-trips
/// exactly through parse_number.
std::string exact_string(const Rational& value);

}  // namespace claims
