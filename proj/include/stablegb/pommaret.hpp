#pragma once

// Pommaret division, involutive normal forms and involutive completion.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stablegb/ring.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

struct PommaretElement {
  Polynomial poly;
  int cls;                          // class of the leading term (1-based)
  std::vector<int> multiplicative;  // {cls, ..., n}, 1-based
};

struct PommaretBasis {
  int arity = 0;
  std::vector<PommaretElement> elements;
  int max_degree = -1;
  int max_class = 0;

  std::vector<Polynomial> polynomials() const;
  std::vector<Term> leading_terms() const;
};

/// Builds a basis record (classes, multiplicative sets, maxima) from polynomials.
PommaretBasis make_pommaret_basis(int arity, std::vector<Polynomial> polys);

/// b |_P a: b divides a and a/b only involves x_cls(b), ..., x_n.
bool pommaret_divides(const Term& b, const Term& a);

enum class ReductionOrder { leading_first, trailing_first };

struct InvolutiveReduction {
  Polynomial remainder;
  /// quotients[k] lies in k[multiplicative variables of element k].
  std::vector<Polynomial> quotients;
};

InvolutiveReduction involutive_reduce(const Polynomial& f, const PommaretBasis& h,
                                      ReductionOrder order = ReductionOrder::leading_first);
Polynomial involutive_normal_form(const Polynomial& f, const PommaretBasis& h);

struct NotQuasiStable {
  std::optional<QuasiStableObstruction> witness;
  bool cap_reached = false;
  int cap = 0;
};

using PommaretCompletion = std::variant<PommaretBasis, NotQuasiStable>;

/// Involutive completion of a reduced Groebner basis. The leading ideal is
/// first tested for quasi-stability, so the cap only guards runaway loops.
PommaretCompletion pommaret_completion(std::span<const Polynomial> reduced_gb, int degree_cap = 64);

/// Pommaret basis of a quasi-stable monomial ideal (the leading-term route).
PommaretCompletion monomial_pommaret_basis(const MonomialIdeal& j, int degree_cap = 64);

int reg_from_pommaret(const PommaretBasis& h);
int depth_from_pommaret(const PommaretBasis& h);

/// Sets the last `lambda` variables to zero; requires lambda <= depth.
PommaretBasis restrict_basis(const PommaretBasis& h, int lambda);

/// Every term of the leading ideal in degrees <= up_to lies in exactly one
/// involutive cone, and no standard term lies in any.
bool cones_partition_leading_ideal(const PommaretBasis& h, const MonomialIdeal& lt_ideal, int up_to);

}  // namespace stablegb
