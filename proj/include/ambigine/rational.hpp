#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ambigine {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "a/b", plain integers ("-3") and finite decimal literals ("0.25").
Rat parse_rational(const std::string& text);
std::optional<Rat> try_parse_rational(const std::string& text);

// Canonical form: "a/b", or just "a" when the denominator is 1.
std::string format_rational(const Rat& value);

double to_double(const Rat& value);

// Exact conversion of a finite double into a dyadic rational.
Rat rational_from_double(double value);

// value^exponent, exponent >= 0.
Rat rational_pow(const Rat& value, unsigned long exponent);

}  // namespace ambigine
