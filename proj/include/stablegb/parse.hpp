#pragma once

// Ideal text format:
//
//   # comment
//   ring: x1 x2 x3
//   x1*x3
//   x1*x2 + x2^2
//   3/2*x1^2 - x2^2
//
// The first non-comment line declares the variables; each further non-empty
// line is one generator.

#include <string>
#include <string_view>
#include <vector>

#include "stablegb/ring.hpp"

namespace stablegb {

struct IdealInput {
  RingContext ring;
  std::vector<Polynomial> generators;
};

/// Throws ParseError (with line/column) on malformed text, unknown variables
/// or zero generators.
IdealInput parse_ideal(std::string_view text);
IdealInput read_ideal_file(const std::string& path);

/// Parses a single polynomial over the given ring. `line` is used for error positions.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring, int line = 1);

std::string format_rational(const Rational& c);
std::string format_term(const Term& t, const RingContext& ring);
/// Terms in descending degrevlex order, same syntax as the input format.
std::string format_polynomial(const Polynomial& f, const RingContext& ring);
std::string format_ideal(const IdealInput& ideal);

}  // namespace stablegb
