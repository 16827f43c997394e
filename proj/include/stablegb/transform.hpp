#pragma once

// Randomized linear changes of coordinates into quasi stable or strongly
// stable position, verified exactly on the leading ideal.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "stablegb/groebner.hpp"
#include "stablegb/ring.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

enum class Position { quasi_stable, strongly_stable };

std::string_view position_name(Position p);
bool satisfies(Position p, const MonomialIdeal& lt_ideal);

/// Dense integer matrix with entries in [-bound, bound], resampled until invertible.
LinearChange random_linear_change(int n, std::mt19937_64& rng, int bound);

struct TransformOptions {
  std::uint64_t seed = 0;
  int coefficient_bound = 10;
  int max_retries = 8;
  /// Try the identity before any random change.
  bool allow_identity = true;
  GroebnerOptions groebner;
};

struct PositionedIdeal {
  LinearChange change = LinearChange::identity(1);
  std::vector<Polynomial> generators;
  GroebnerBasis basis;
  /// Random changes tried (0 when the identity was accepted).
  int attempts = 0;
};

/// Throws InconclusiveError naming the last obstruction when the retries run out.
PositionedIdeal transform_to_position(std::span<const Polynomial> generators, Position target,
                                      const TransformOptions& options = {});

}  // namespace stablegb
