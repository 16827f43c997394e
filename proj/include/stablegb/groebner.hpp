#pragma once

// Degree-by-degree Buchberger algorithm (normal strategy) for homogeneous
// ideals under degrevlex, with the Gebauer-Moeller pair criteria.

#include <optional>
#include <span>
#include <vector>

#include "stablegb/error.hpp"
#include "stablegb/ring.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

struct GroebnerOptions {
  /// Stop once the leading ideal is strongly stable and a full degree above
  /// the input degree produced no new generator.
  bool early_stop_if_stable = false;
  int degree_cap = 64;
};

struct DegreeStep {
  int degree;
  int pairs;           // S-polynomials reduced in this degree
  int inputs;          // input generators reduced in this degree
  int new_generators;  // elements added to the basis
  int surviving_pairs; // S-polynomials with a nonzero remainder
};

struct BuchbergerTrace {
  std::vector<DegreeStep> steps;
  std::optional<int> early_stop_degree;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  bool reduced = false;
  int max_degree = -1;

  std::vector<Term> leading_terms() const;
  MonomialIdeal leading_ideal() const;
};

struct GroebnerResult {
  GroebnerBasis basis;
  BuchbergerTrace trace;
};

/// Thrown when pairs remain above the configured degree cap.
class DegreeCapExceeded : public ResourceCapError {
 public:
  DegreeCapExceeded(int cap, GroebnerResult partial)
      : ResourceCapError("degree cap " + std::to_string(cap) + " exceeded"), partial_(std::move(partial)) {}
  const GroebnerResult& partial() const { return partial_; }

 private:
  GroebnerResult partial_;
};

/// Full reduction: no term of the result is divisible by a leading term of `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Monic-monic S-polynomial: (l/LT f) f/LC f - (l/LT g) g/LC g with l = lcm.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of <F>. All generators must be nonzero and homogeneous.
/// Throws DegreeCapExceeded when the cap is hit.
GroebnerResult buchberger(std::span<const Polynomial> generators, const GroebnerOptions& options = {});

/// deg(I, degrevlex): maximal degree of the reduced Groebner basis.
int max_gb_degree(std::span<const Polynomial> generators, const GroebnerOptions& options = {});

struct TruncatedBasis {
  std::vector<Polynomial> generators;
  int t;
  /// Every S-polynomial of degree t+1 among the generators reduces to zero.
  bool certified;
};

/// All S-polynomials of degree <= t treated; certification checks degree t+1.
TruncatedBasis truncated_gb(std::span<const Polynomial> generators, int t);
/// truncated_gb for t = 0, ..., up_to from a single run.
std::vector<TruncatedBasis> truncated_gbs(std::span<const Polynomial> generators, int up_to);

/// Interreduces a Groebner basis (homogeneous or not) into the reduced one,
/// sorted by ascending leading term.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis);

/// Buchberger's criterion with every pair checked (no pair criteria).
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Reduced degrevlex Groebner basis of a possibly inhomogeneous ideal, obtained
/// by homogenizing the generators, computing there and dehomogenizing.
std::vector<Polynomial> affine_reduced_gb(std::span<const Polynomial> generators, const GroebnerOptions& options = {});

}  // namespace stablegb
