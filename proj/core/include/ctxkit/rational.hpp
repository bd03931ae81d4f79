#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ctxkit {

// All probabilities and certificate weights are exact rationals. Verdicts such
// as "feasible" or "these marginals are equal" are computed without tolerance.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or "p" with optional leading minus on p; q must be a positive
// integer. Result is in lowest terms. Throws input_error on anything else.
Rat parse_rational(const std::string& text);

// Lowest-terms decimal rendering: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& r);

}  // namespace ctxkit
