#include "stablegb/invariants.hpp"

#include <algorithm>

#include "stablegb/bounds.hpp"
#include "stablegb/error.hpp"
#include "stablegb/pommaret.hpp"

namespace stablegb {

namespace {

std::vector<int> degrees_of(std::span<const Polynomial> fs) {
  std::vector<int> out;
  for (const auto& f : fs) out.push_back(f.degree());
  return out;
}

}  // namespace

StabilizationReport stabilization_check(std::span<const Polynomial> generators) {
  const MonomialIdeal lt = buchberger(generators).basis.leading_ideal();
  const HilbertData h = hilbert_series(lt);
  if (h.dim > 1) throw DomainError("stabilization_check: needs dim <= 1");
  StabilizationReport report;
  report.from_degree = lazard_sum(degrees_of(generators), lt.arity());
  report.checked_up_to = std::max(report.from_degree, h.hilb) + 1;
  report.holds = true;
  for (int l = std::max(0, report.from_degree); l < report.checked_up_to; ++l) {
    report.holds = report.holds && h.hf(l) == h.hf(l + 1);
  }
  return report;
}

RegularSequenceReport regular_sequence_report(std::span<const Polynomial> fs) {
  if (fs.empty()) throw UsageError("is_regular_sequence: empty sequence");
  const int n = fs.front().arity();
  if (static_cast<int>(fs.size()) > n) throw UsageError("is_regular_sequence: more polynomials than variables");
  const MonomialIdeal lt = buchberger(fs).basis.leading_ideal();

  IntPoly expected{BigInt(1)};
  for (const auto& f : fs) {
    IntPoly next(expected.size() + static_cast<std::size_t>(f.degree()), BigInt(0));
    for (std::size_t k = 0; k < expected.size(); ++k) {
      next[k] += expected[k];
      next[k + static_cast<std::size_t>(f.degree())] -= expected[k];
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    expected = std::move(next);
  }

  RegularSequenceReport report;
  report.by_series = hilbert_numerator(lt) == expected;
  report.by_dimension = !lt.is_unit() && hilbert_series(lt).dim == n - static_cast<int>(fs.size());
  return report;
}

bool is_regular_sequence(std::span<const Polynomial> fs) { return regular_sequence_report(fs).by_series; }

MonomialIdeal gin(std::span<const Polynomial> generators, const GinOptions& options) {
  if (generators.empty()) throw UsageError("gin: no generators");
  if (options.trials < 2) throw UsageError("gin: needs at least two trials");
  const int n = generators.front().arity();
  std::mt19937_64 rng(options.seed);
  int bound = options.coefficient_bound;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt, bound *= 2) {
    std::vector<MonomialIdeal> found;
    for (int t = 0; t < options.trials; ++t) {
      const LinearChange a = random_linear_change(n, rng, bound);
      found.push_back(buchberger(apply_linear_change(a, generators)).basis.leading_ideal());
    }
    if (std::all_of(found.begin(), found.end(), [&](const MonomialIdeal& j) { return j == found.front(); })) {
      return found.front();
    }
  }
  throw InconclusiveError("gin: random changes still disagree after " + std::to_string(options.max_retries) +
                          " retries");
}

IdealInvariants compute_invariants(std::span<const Polynomial> generators, const InvariantOptions& options) {
  const PositionedIdeal positioned = transform_to_position(generators, Position::quasi_stable, options.transform);
  const auto completion = pommaret_completion(positioned.basis.generators);
  const auto* h = std::get_if<PommaretBasis>(&completion);
  if (h == nullptr) throw ResourceCapError("compute_invariants: Pommaret completion hit its degree cap");

  IdealInvariants out;
  out.hilbert = hilbert_series(positioned.basis.leading_ideal());
  out.dim = out.hilbert.dim;
  out.reg = reg_from_pommaret(*h);
  out.depth = depth_from_pommaret(*h);
  out.transform_attempts = positioned.attempts;
  if (options.gin_cross_check) out.gin_agrees = gin(generators, options.gin).max_degree() == out.reg;
  return out;
}

int regularity(std::span<const Polynomial> generators, const InvariantOptions& options) {
  return compute_invariants(generators, options).reg;
}

int depth(std::span<const Polynomial> generators, const InvariantOptions& options) {
  return compute_invariants(generators, options).depth;
}

}  // namespace stablegb
