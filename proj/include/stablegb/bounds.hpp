#pragma once

// Closed-form degree and regularity bounds, evaluated exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablegb/ring.hpp"

namespace stablegb {

enum class Formula {
  moller_mora,
  giusti,
  dube,
  caviglia_sbarra,
  mayr_ritscher,
  hs_A,
  hs_A_depth,
  hs_C,
  hs_C_depth,
  macaulay_0dim,
  lazard,
  lazard_affine,
  cm_noether,
  fset_bound,
};

inline constexpr Formula kAllFormulas[] = {
    Formula::moller_mora, Formula::giusti,     Formula::dube,          Formula::caviglia_sbarra, Formula::mayr_ritscher,
    Formula::hs_A,        Formula::hs_A_depth, Formula::hs_C,          Formula::hs_C_depth,      Formula::macaulay_0dim,
    Formula::lazard,      Formula::lazard_affine, Formula::cm_noether, Formula::fset_bound,
};

std::string_view formula_name(Formula f);
std::optional<Formula> formula_from_name(std::string_view name);

struct BoundInputs {
  int n = 0;
  int d = 0;
  std::optional<int> dim;
  std::optional<int> depth;
  /// Generator degrees; sorted descending and padded with 1 where a formula needs them.
  std::vector<int> degrees;
};

/// The value is coefficient * base^(exponent / root). It is materialized when
/// its size stays under the bit cap, otherwise only the power form is kept.
struct BoundValue {
  Formula formula = Formula::giusti;
  BoundInputs inputs;
  Rational coefficient = 1;
  Rational base = 1;
  BigInt exponent = 1;
  int root = 1;
  /// Exact value when it is rational and materialized.
  std::optional<Rational> exact;
  /// Materialized integer bound: the ceiling of a rational value, or the floor
  /// of an irrational one (bounds on integers survive either rounding).
  std::optional<BigInt> value;
  bool irrational = false;

  bool symbolic() const { return !value.has_value(); }
  double log2() const;
  std::string to_string() const;
};

/// Bit size above which values stay symbolic: STABLEGB_BIT_CAP or 10^6.
std::uint64_t bit_cap();

/// Evaluates one formula. Throws DomainError naming the violated precondition.
BoundValue bound(Formula f, const BoundInputs& in, std::optional<std::uint64_t> cap = std::nullopt);

/// -1, 0, 1 as a < b, a = b, a > b. Exact when both are materialized.
int compare(const BoundValue& a, const BoundValue& b);

/// All formulas applicable to the inputs, ascending. Without explicit degrees
/// the generic case of n generators of degree d is assumed.
std::vector<BoundValue> compare_bounds(const BoundInputs& in, std::optional<std::uint64_t> cap = std::nullopt);

/// d_1 + ... + d_r - r + 1 with degrees sorted descending and padded by 1.
int lazard_sum(std::vector<int> degrees, int r);

}  // namespace stablegb
