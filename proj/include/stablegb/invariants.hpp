#pragma once

// Hilbert function, series, polynomial and regularity of monomial ideals, and
// the ideal invariants built on them: dimension, depth, Castelnuovo-Mumford
// regularity, regular sequences and the generic initial ideal.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stablegb/groebner.hpp"
#include "stablegb/ring.hpp"
#include "stablegb/stability.hpp"
#include "stablegb/transform.hpp"

namespace stablegb {

/// Univariate polynomial, coefficient of t^k at index k.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

/// Numerator N with HS(t) = N(t) / (1-t)^n, not reduced. Zero for the unit ideal.
IntPoly hilbert_numerator(const MonomialIdeal& j);

struct HilbertData {
  /// p with p(1) != 0 and HS(t) = p(t) / (1-t)^D.
  IntPoly numerator;
  int dim = 0;
  /// HF(0), HF(1), ..., at least up to max(hilb, deg p) + 1.
  std::vector<BigInt> hf_table;
  /// HP(s) = sum hp[k] s^k.
  RatPoly hp;
  int hilb = 0;

  BigInt hf(int s) const;
  Rational hp_at(int s) const;
};

/// Throws DomainError for the unit ideal.
HilbertData hilbert_series(const MonomialIdeal& j, int table_up_to = -1);

/// Number of standard terms of degree t.
BigInt hilbert_function(const MonomialIdeal& j, int t);
int hilbert_regularity(const MonomialIdeal& j);

struct StabilizationReport {
  int from_degree = 0;  // sum d_i - n + 1
  int checked_up_to = 0;
  bool holds = false;
};

/// HF of <gens> is constant from sum d_i - n + 1 on. Throws DomainError if dim > 1.
StabilizationReport stabilization_check(std::span<const Polynomial> generators);

struct RegularSequenceReport {
  bool by_series = false;     // HS = prod (1 - t^d_i) / (1-t)^n
  bool by_dimension = false;  // D = n - k
};

RegularSequenceReport regular_sequence_report(std::span<const Polynomial> fs);
bool is_regular_sequence(std::span<const Polynomial> fs);

struct GinOptions {
  std::uint64_t seed = 0;
  int trials = 2;
  int coefficient_bound = 1000;
  int max_retries = 3;
};

/// LT of the transformed ideal once `trials` random changes agree; the
/// coefficient range doubles after each disagreement. Throws InconclusiveError.
MonomialIdeal gin(std::span<const Polynomial> generators, const GinOptions& options = {});

struct InvariantOptions {
  TransformOptions transform;
  /// Also compare reg with the maximal generator degree of gin.
  bool gin_cross_check = false;
  GinOptions gin;
};

struct IdealInvariants {
  int dim = 0;
  int depth = 0;
  int reg = 0;
  HilbertData hilbert;
  int transform_attempts = 0;
  std::optional<bool> gin_agrees;
};

/// reg and depth come from the Pommaret basis in quasi stable position.
IdealInvariants compute_invariants(std::span<const Polynomial> generators, const InvariantOptions& options = {});

int regularity(std::span<const Polynomial> generators, const InvariantOptions& options = {});
int depth(std::span<const Polynomial> generators, const InvariantOptions& options = {});

}  // namespace stablegb
