#include "stablegb/groebner.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "integral.hpp"

namespace stablegb {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Term lcm;
};

bool pair_before(const CriticalPair& a, const CriticalPair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  auto order = degrevlex_cmp(a.lcm, b.lcm);
  if (order != 0) return order < 0;
  return std::tie(a.j, a.i) < std::tie(b.j, b.i);
}

const Polynomial* find_reducer(const Term& t, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (g.lt().divides(t)) return &g;
  }
  return nullptr;
}

using detail::make_primitive;

Rational reduce_integral(Polynomial& p, std::span<const Polynomial> basis, std::size_t pos) {
  return detail::reduce_integral(p, pos, [&](const Term& t) { return find_reducer(t, basis); });
}

// S-polynomial of two integer polynomials, up to a nonzero scalar.
Polynomial integral_s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term l = f.lt().lcm(g.lt());
  BigInt h;
  mpz_gcd(h.get_mpz_t(), f.lc().get_num_mpz_t(), g.lc().get_num_mpz_t());
  Polynomial s = f.mul_term(Rational(BigInt(g.lc().get_num() / h)), l / f.lt());
  s.sub_mul(Rational(BigInt(f.lc().get_num() / h)), l / g.lt(), g);
  return s;
}

// Gebauer-Moeller update after appending basis element `h`.
void update_pairs(std::vector<CriticalPair>& pairs, const std::vector<Term>& lts, std::size_t h) {
  const Term& lh = lts[h];
  struct Candidate {
    std::size_t i;
    Term lcm;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t i = 0; i < h; ++i) fresh.push_back({i, lts[i].lcm(lh), lts[i].coprime(lh)});

  std::vector<Candidate> kept;
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    const auto& p = fresh[k];
    if (!p.coprime) {
      bool dominated = false;
      for (std::size_t q = k + 1; q < fresh.size() && !dominated; ++q) dominated = fresh[q].lcm.divides(p.lcm);
      for (const auto& q : kept) dominated = dominated || q.lcm.divides(p.lcm);
      if (dominated) continue;
    }
    kept.push_back(p);
  }

  std::erase_if(pairs, [&](const CriticalPair& p) {
    return lh.divides(p.lcm) && !(lts[p.i].lcm(lh) == p.lcm) && !(lts[p.j].lcm(lh) == p.lcm);
  });
  for (const auto& c : kept) {
    if (!c.coprime) pairs.push_back({c.i, h, c.lcm});
  }
}

struct BuchbergerState {
  std::vector<Polynomial> basis;
  std::vector<Term> lts;
  BuchbergerTrace trace;
};

void validate_input(std::span<const Polynomial> generators) {
  if (generators.empty()) throw UsageError("buchberger: no generators");
  const int n = generators.front().arity();
  for (const auto& f : generators) {
    if (f.arity() != n) throw UsageError("buchberger: generators have different arities");
    if (f.is_zero()) throw DomainError("buchberger: zero generator");
    if (!f.is_homogeneous()) throw DomainError("buchberger: generator is not homogeneous");
  }
}

int max_basis_degree(const std::vector<Polynomial>& basis) {
  int d = -1;
  for (const auto& g : basis) d = std::max(d, g.degree());
  return d;
}

// Runs the normal strategy up to and including degree `stop_after` (if set).
BuchbergerState run(std::span<const Polynomial> generators, const GroebnerOptions& options,
                    std::optional<int> stop_after) {
  validate_input(generators);
  std::vector<Polynomial> inputs(generators.begin(), generators.end());
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  const int input_degree = inputs.back().degree();

  BuchbergerState state;
  std::vector<CriticalPair> pairs;
  std::size_t next_input = 0;

  while (next_input < inputs.size() || !pairs.empty()) {
    int s = next_input < inputs.size() ? inputs[next_input].degree() : std::numeric_limits<int>::max();
    for (const auto& p : pairs) s = std::min(s, p.lcm.degree());

    if (options.early_stop_if_stable && next_input == inputs.size()) {
      const int settled = std::max(input_degree, max_basis_degree(state.basis)) + 1;
      if (s > settled && is_strongly_stable(MonomialIdeal(generators.front().arity(), state.lts))) {
        state.trace.early_stop_degree = settled;
        break;
      }
    }
    if (stop_after && s > *stop_after) break;
    if (s > options.degree_cap) {
      GroebnerResult partial;
      partial.basis.generators = interreduce(state.basis);
      partial.basis.max_degree = max_basis_degree(partial.basis.generators);
      partial.trace = state.trace;
      throw DegreeCapExceeded(options.degree_cap, std::move(partial));
    }

    std::vector<CriticalPair> current;
    std::erase_if(pairs, [&](const CriticalPair& p) {
      if (p.lcm.degree() != s) return false;
      current.push_back(p);
      return true;
    });
    std::sort(current.begin(), current.end(), pair_before);

    std::vector<Polynomial> candidates;
    for (const auto& p : current) candidates.push_back(integral_s_polynomial(state.basis[p.i], state.basis[p.j]));
    int input_count = 0;
    while (next_input < inputs.size() && inputs[next_input].degree() == s) {
      candidates.push_back(inputs[next_input++]);
      ++input_count;
    }

    int added = 0;
    int survived = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      Polynomial r = std::move(candidates[k]);
      reduce_integral(r, state.basis, 0);
      if (r.is_zero()) continue;
      // pairs come first, so a surviving pair is always seen against the unchanged basis
      if (k < current.size()) ++survived;
      state.lts.push_back(r.lt());
      state.basis.push_back(std::move(r));
      update_pairs(pairs, state.lts, state.basis.size() - 1);
      ++added;
    }
    state.trace.steps.push_back({s, static_cast<int>(current.size()), input_count, added, survived});

    if (options.early_stop_if_stable && added == 0 && next_input == inputs.size() && !pairs.empty() &&
        s >= std::max(input_degree, max_basis_degree(state.basis)) &&
        is_strongly_stable(MonomialIdeal(generators.front().arity(), state.lts))) {
      state.trace.early_stop_degree = s;
      break;
    }
  }
  return state;
}

// Reduces every term of p from index `pos` on.
Polynomial reduce_from(Polynomial p, std::span<const Polynomial> basis, std::size_t pos) {
  std::vector<Polynomial> integral(basis.begin(), basis.end());
  for (auto& g : integral) make_primitive(g);
  const Rational scale = reduce_integral(p, integral, pos);
  if (!p.is_zero()) p *= 1 / scale;
  return p;
}

}  // namespace

namespace detail {

Rational make_primitive(Polynomial& p) {
  if (p.is_zero()) return 1;
  BigInt den = 1;
  BigInt num = 0;
  for (const auto& m : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), m.coeff.get_num_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(p.lc()) < 0) factor = -factor;
  if (factor != 1) p *= factor;
  return factor;
}

}  // namespace detail

std::vector<Term> GroebnerBasis::leading_terms() const {
  std::vector<Term> out;
  for (const auto& g : generators) out.push_back(g.lt());
  return out;
}

MonomialIdeal GroebnerBasis::leading_ideal() const {
  if (generators.empty()) throw UsageError("leading ideal of an empty basis has no arity");
  return MonomialIdeal(generators.front().arity(), leading_terms());
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) { return reduce_from(f, basis, 0); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial of the zero polynomial");
  Term l = f.lt().lcm(g.lt());
  Polynomial s = f.mul_term(1 / f.lc(), l / f.lt());
  s.sub_mul(1 / g.lc(), l / g.lt(), g);
  return s;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return degrevlex_cmp(a.lt(), b.lt()) < 0; });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Polynomial& h) { return h.lt().divides(g.lt()); });
    if (redundant) continue;
    make_primitive(g);
    minimal.push_back(std::move(g));
  }
  // A multiple of LT(g) is never smaller than LT(g), so g cannot reduce its own tail.
  // Reducing a tail only rescales g, so the monic result is exact.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    Polynomial r = g;
    reduce_integral(r, minimal, 1);
    reduced.push_back(r.monic());
  }
  return reduced;
}

GroebnerResult buchberger(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  BuchbergerState state = run(generators, options, std::nullopt);
  GroebnerResult result;
  result.basis.generators = interreduce(std::move(state.basis));
  result.basis.reduced = true;
  result.basis.max_degree = max_basis_degree(result.basis.generators);
  result.trace = std::move(state.trace);
  return result;
}

int max_gb_degree(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  return buchberger(generators, options).basis.max_degree;
}

std::vector<TruncatedBasis> truncated_gbs(std::span<const Polynomial> generators, int up_to) {
  GroebnerOptions options;
  options.degree_cap = std::max(options.degree_cap, up_to + 2);
  const BuchbergerState state = run(generators, options, up_to + 1);
  std::vector<TruncatedBasis> out;
  for (int t = 0; t <= up_to; ++t) {
    TruncatedBasis tb;
    tb.t = t;
    // Pairs dropped by the criteria reduce to zero once the kept ones do.
    tb.certified = true;
    for (const auto& step : state.trace.steps) {
      if (step.degree == t + 1) tb.certified = step.surviving_pairs == 0;
    }
    std::vector<Polynomial> low;
    for (const auto& g : state.basis) {
      if (g.degree() <= t) low.push_back(g);
    }
    tb.generators = interreduce(std::move(low));
    out.push_back(std::move(tb));
  }
  return out;
}

TruncatedBasis truncated_gb(std::span<const Polynomial> generators, int t) {
  if (t < 0) throw UsageError("truncated_gb: negative degree");
  return std::move(truncated_gbs(generators, t).back());
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> affine_reduced_gb(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  std::vector<Polynomial> homogeneous;
  for (const auto& f : generators) {
    if (f.is_zero()) throw DomainError("affine_reduced_gb: zero generator");
    homogeneous.push_back(homogenize(f));
  }
  auto gb = buchberger(homogeneous, options).basis.generators;
  std::vector<Polynomial> affine;
  for (const auto& g : gb) affine.push_back(dehomogenize(g));
  return interreduce(std::move(affine));
}

}  // namespace stablegb
