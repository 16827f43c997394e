#pragma once

// Standard monomials N(I), the recursively defined finite sets F(I) and
// Mora's variant F~(I), and the inequalities relating consecutive restrictions.

#include <span>
#include <vector>

#include "stablegb/ring.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

/// Terms of degree <= up_to_degree outside J, ascending.
std::vector<Term> standard_monomials(const MonomialIdeal& j, int up_to_degree);

/// The full (finite) set of standard terms of a zero-dimensional J.
std::vector<Term> all_standard_monomials(const MonomialIdeal& j);

struct FSetLevel {
  int arity = 0;
  int dim = 0;
  /// deg(I_level, degrevlex)
  int degree = 0;
  std::vector<Term> f;
  std::vector<Term> f_tilde;
};

struct FSetReport {
  /// levels[0] is I itself, levels[k] is I with the last k variables set to zero;
  /// the last level is zero-dimensional.
  std::vector<FSetLevel> levels;
  /// F~ only reproduces a flawed variant of the construction.
  bool f_tilde_is_variant = true;

  const std::vector<Term>& f() const { return levels.front().f; }
  const std::vector<Term>& f_tilde() const { return levels.front().f_tilde; }
};

/// From the reduced Groebner basis of an ideal in strongly stable position.
/// Throws DomainError if the leading ideal is not strongly stable.
FSetReport f_set(std::span<const Polynomial> reduced_gb);
std::vector<Term> f_tilde_set(std::span<const Polynomial> reduced_gb);

struct MoraCheck {
  /// The inequalities only make sense when dim > 0 (then I_n is one level down).
  bool applicable = false;
  int d = 0;
  // deg(I) <= max{d, deg(I_n)} + #F(I_n)
  long a_lhs = 0;
  long a_rhs = 0;
  bool holds_a = false;
  // #F(I) <= max{d, #F(I_n)}^2
  long b_lhs = 0;
  long b_rhs = 0;
  bool holds_b = false;
  // Variant: deg(I) <= deg(I_n) + #F~(I_n) and #F~(I) <= #F~(I_n)^2
  long variant_a_lhs = 0;
  long variant_a_rhs = 0;
  bool variant_holds_a = false;
  long variant_b_lhs = 0;
  long variant_b_rhs = 0;
  bool variant_holds_b = false;
};

/// d is the maximal degree of the original generators.
MoraCheck lemma_mora_check(const FSetReport& report, int d);
MoraCheck lemma_mora_check(std::span<const Polynomial> reduced_gb, int d);

}  // namespace stablegb
