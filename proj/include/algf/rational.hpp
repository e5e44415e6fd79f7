#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace algf {

// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q".  Throws Error(syntax_error) on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Returns r >= 0 with r*r == q when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Small nonzero rational: numerator in [-9, 9] \ {0}, denominator in [1, 6].
Rational random_nonzero_rational(std::mt19937_64& rng);

/// Small positive rational, same ranges as above.
Rational random_positive_rational(std::mt19937_64& rng);

}  // namespace algf
