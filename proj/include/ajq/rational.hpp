#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ajq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for all time and load values. Never rounded;
/// instability gadgets depend on exact phase alignments.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4" or "0.25" (decimal literals convert exactly).
/// Returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, else "p/q" reduced.
std::string format_rational(const Rational& value);

/// Display-only decimal approximation.
double to_double(const Rational& value);

} // namespace ajq
