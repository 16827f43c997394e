#include "stablegb/transform.hpp"

#include "stablegb/error.hpp"
#include "stablegb/parse.hpp"

namespace stablegb {

std::string_view position_name(Position p) {
  return p == Position::quasi_stable ? "quasi_stable" : "strongly_stable";
}

bool satisfies(Position p, const MonomialIdeal& lt_ideal) {
  return p == Position::quasi_stable ? is_quasi_stable(lt_ideal) : is_strongly_stable(lt_ideal);
}

LinearChange random_linear_change(int n, std::mt19937_64& rng, int bound) {
  if (n < 1 || n > kMaxVars) throw UsageError("random_linear_change: bad number of variables");
  if (bound < 1) throw UsageError("random_linear_change: coefficient bound must be positive");
  std::uniform_int_distribution<int> entry(-bound, bound);
  for (;;) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : m) {
      for (auto& a : row) a = entry(rng);
    }
    if (determinant(m) != 0) return LinearChange(std::move(m));
  }
}

PositionedIdeal transform_to_position(std::span<const Polynomial> generators, Position target,
                                      const TransformOptions& options) {
  if (generators.empty()) throw UsageError("transform_to_position: no generators");
  const int n = generators.front().arity();
  const RingContext ring(n);
  std::string obstruction;

  auto attempt = [&](const LinearChange& a, int attempts) -> std::optional<PositionedIdeal> {
    PositionedIdeal out;
    out.change = a;
    out.generators = a.is_identity() ? std::vector<Polynomial>(generators.begin(), generators.end())
                                     : apply_linear_change(a, generators);
    out.basis = buchberger(out.generators, options.groebner).basis;
    out.attempts = attempts;
    if (out.basis.leading_ideal().is_unit()) throw DomainError("transform_to_position: unit ideal");
    const MonomialIdeal lt = out.basis.leading_ideal();
    if (satisfies(target, lt)) return out;
    if (auto w = quasi_stable_obstruction(lt)) {
      obstruction = "generator " + format_term(w->generator, ring) + " lacks a power of x" + std::to_string(w->to) +
                    " replacing x" + std::to_string(w->from);
    } else {
      obstruction = "leading ideal is not strongly stable";
    }
    return std::nullopt;
  };

  if (options.allow_identity) {
    if (auto found = attempt(LinearChange::identity(n), 0)) return std::move(*found);
  }
  std::mt19937_64 rng(options.seed);
  for (int k = 1; k <= options.max_retries; ++k) {
    if (auto found = attempt(random_linear_change(n, rng, options.coefficient_bound), k)) return std::move(*found);
  }
  throw InconclusiveError("no " + std::string(position_name(target)) + " position found after " +
                          std::to_string(options.max_retries) + " random changes; last obstruction: " + obstruction);
}

}  // namespace stablegb
