#pragma once

// Monomial ideals given by their minimal generating set, and the stability
// predicates used to certify generic positions.

#include <optional>
#include <span>
#include <vector>

#include "stablegb/ring.hpp"

namespace stablegb {

class MonomialIdeal {
 public:
  /// The zero ideal in `arity` variables.
  explicit MonomialIdeal(int arity);
  /// Minimalizes `terms`; generators are stored in ascending degrevlex order.
  MonomialIdeal(int arity, std::vector<Term> terms);

  int arity() const { return arity_; }
  const std::vector<Term>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Term& t) const;
  /// Largest total degree of a minimal generator; -1 for the zero ideal.
  int max_degree() const;

  /// J : t
  MonomialIdeal quotient(const Term& t) const;
  /// J + <t>
  MonomialIdeal plus(const Term& t) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int arity_;
  std::vector<Term> gens_;
};

MonomialIdeal minimal_generators(int arity, std::span<const Term> terms);
/// <LT(g) : g in gens>
MonomialIdeal leading_ideal(std::span<const Polynomial> gens);

bool is_strongly_stable(const MonomialIdeal& j);
bool is_stable(const MonomialIdeal& j);
bool is_quasi_stable(const MonomialIdeal& j);

/// A witness that the quasi-stability condition fails: no power of x_to times
/// generator / x_from^s lies in the ideal. Indices are 1-based.
struct QuasiStableObstruction {
  Term generator;
  int from;
  int to;
};
std::optional<QuasiStableObstruction> quasi_stable_obstruction(const MonomialIdeal& j);

/// Sets the last `count` variables to zero: generators involving them are dropped.
MonomialIdeal restrict_last(const MonomialIdeal& j, int count);
/// Polynomial version; zero images are dropped.
std::vector<Polynomial> restrict_last(std::span<const Polynomial> gens, int count);

/// Largest exponent of x_i (1-based) among the minimal generators.
int deg_i(const MonomialIdeal& j, int i);

/// Krull dimension of P/J: largest set of variables supporting no minimal generator.
int dimension(const MonomialIdeal& j);

/// LT(I) contains a pure power of x_i for every i <= n - D.
bool is_noether_position(const MonomialIdeal& lt_ideal);

/// For every s >= d with no minimal generator in degree s+1, there is none beyond s.
bool cp_gap_check(const MonomialIdeal& j, int d);

/// Class of a term: largest index (1-based) with positive exponent.
/// Throws DomainError for the unit term.
int cls(const Term& t);

}  // namespace stablegb
