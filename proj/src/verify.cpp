#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "stablegb/bounds.hpp"
#include "stablegb/error.hpp"
#include "stablegb/fset.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/harness.hpp"
#include "stablegb/invariants.hpp"
#include "stablegb/pommaret.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

namespace {

std::string str(long x) { return std::to_string(x); }
std::string str(const BigInt& x) { return x.get_str(); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

bool at_most(const BigInt& x, const BoundValue& b) {
  if (!b.value) return true;  // symbolic values exceed 2^(bit cap)
  if (b.exact) return Rational(x) <= *b.exact;
  return x <= *b.value;
}

class CheckList {
 public:
  explicit CheckList(std::vector<TheoremCheck>& out) : out_(out) {}

  void skip(std::string id, std::string reason) {
    TheoremCheck c;
    c.id = std::move(id);
    c.reason = std::move(reason);
    out_.push_back(std::move(c));
  }

  void add(std::string id, std::string lhs, std::string relation, std::string rhs, bool holds) {
    TheoremCheck c;
    c.id = std::move(id);
    c.applicable = true;
    c.lhs = std::move(lhs);
    c.relation = std::move(relation);
    c.rhs = std::move(rhs);
    c.holds = holds;
    out_.push_back(std::move(c));
  }

  void bound(std::string id, long lhs, const BoundValue& b) { add(std::move(id), str(lhs), "<=", b.to_string(), at_most(lhs, b)); }

 private:
  std::vector<TheoremCheck>& out_;
};

int max_degree(std::span<const Polynomial> fs) {
  int d = -1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  return d;
}

PommaretBasis complete(std::span<const Polynomial> reduced_gb) {
  auto result = pommaret_completion(reduced_gb);
  if (auto* h = std::get_if<PommaretBasis>(&result)) return std::move(*h);
  throw ResourceCapError("Pommaret completion did not finish");
}

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto by_lt = [](const Polynomial& x, const Polynomial& y) { return degrevlex_cmp(x.lt(), y.lt()) < 0; };
  std::sort(a.begin(), a.end(), by_lt);
  std::sort(b.begin(), b.end(), by_lt);
  return a == b;
}

void truncated_checks(CheckList& checks, std::span<const Polynomial> gens, int deg, int d) {
  const int top = std::max(deg, d);
  bool consistent = true;
  bool certified_at_top = false;
  // reduced bases are unique, so a certified G_t must equal the one of <I_<=t>
  std::map<std::size_t, std::vector<Polynomial>> reference;
  const std::vector<TruncatedBasis> all = truncated_gbs(gens, top);
  for (int t = 1; t <= top; ++t) {
    const TruncatedBasis& tb = all[static_cast<std::size_t>(t)];
    if (t == top) certified_at_top = tb.certified;
    if (!tb.certified) continue;
    std::vector<Polynomial> low;
    for (const auto& f : gens) {
      if (f.degree() <= t) low.push_back(f);
    }
    if (low.empty()) {
      consistent = consistent && tb.generators.empty();
      continue;
    }
    auto it = reference.find(low.size());
    if (it == reference.end()) it = reference.emplace(low.size(), buchberger(low).basis.generators).first;
    consistent = consistent && tb.generators == it->second;
  }
  checks.add("truncated_gb.certified_is_basis", "certified G_t are bases of <I_<=t> for t in 1.." + str(top),
             "==", "true", consistent);
  checks.add("truncated_gb.certified_at_top", "certified at t=" + str(top), "==", "true", certified_at_top);
}

struct Core {
  GroebnerBasis gb;
  MonomialIdeal lt{1};
  HilbertData hilbert;
  int reg = 0;
  int depth = 0;
  std::optional<PommaretBasis> pommaret;
};

}  // namespace

bool VerificationReport::passed() const {
  if (incomplete) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck& c) { return !c.applicable || c.holds.value_or(false); });
}

std::vector<const TheoremCheck*> VerificationReport::failures() const {
  std::vector<const TheoremCheck*> out;
  for (const auto& c : checks) {
    if (c.applicable && !c.holds.value_or(false)) out.push_back(&c);
  }
  return out;
}

BigInt macaulay_hilbert_function(std::span<const Polynomial> generators, int s) {
  if (generators.empty()) throw UsageError("macaulay_hilbert_function: no generators");
  const int n = generators.front().arity();
  const std::vector<Term> columns = terms_of_degree(n, s);
  std::unordered_map<Term, std::size_t, TermHash> index;
  for (std::size_t c = 0; c < columns.size(); ++c) index.emplace(columns[c], c);

  std::vector<std::vector<Rational>> pivot_rows(columns.size());
  std::size_t rank = 0;
  for (const auto& f : generators) {
    if (f.is_zero() || f.degree() > s) continue;
    if (!f.is_homogeneous()) throw DomainError("macaulay_hilbert_function: generator is not homogeneous");
    for (const auto& m : terms_of_degree(n, s - f.degree())) {
      if (rank == columns.size()) return 0;
      std::vector<Rational> row(columns.size());
      for (const auto& mono : f.terms()) row[index.at(mono.term * m)] = mono.coeff;
      std::optional<std::size_t> pivot;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (row[c] == 0) continue;
        if (pivot_rows[c].empty()) {
          if (!pivot) pivot = c;
          continue;
        }
        if (pivot) continue;
        const Rational factor = row[c];
        const auto& p = pivot_rows[c];
        for (std::size_t k = c; k < columns.size(); ++k) {
          if (p[k] != 0) row[k] -= factor * p[k];
        }
      }
      if (!pivot) continue;
      // Finish reducing the tail so the stored row is zero in every other pivot column below it.
      const Rational lead = row[*pivot];
      for (std::size_t k = *pivot; k < columns.size(); ++k) row[k] /= lead;
      pivot_rows[*pivot] = std::move(row);
      ++rank;
    }
  }
  return BigInt(static_cast<unsigned long>(columns.size() - rank));
}

VerificationReport verify_theorems(std::string id, std::span<const Polynomial> generators,
                                   const VerifyOptions& options) {
  if (generators.empty()) throw UsageError("verify_theorems: no generators");
  VerificationReport r;
  r.id = std::move(id);
  r.seed = options.seed;
  r.n = generators.front().arity();
  for (const auto& f : generators) r.degrees.push_back(f.degree());
  std::sort(r.degrees.begin(), r.degrees.end(), std::greater<>());
  r.d = r.degrees.front();

  CheckList checks(r.checks);
  InvariantOptions inv_options;
  inv_options.transform.seed = options.seed;
  inv_options.transform.coefficient_bound = options.coefficient_bound;

  try {
    Core core;
    core.gb = buchberger(generators).basis;
    core.lt = core.gb.leading_ideal();
    if (core.lt.is_unit()) throw DomainError("verify_theorems: unit ideal");
    const MonomialIdeal& J = core.lt;
    const auto& G = core.gb.generators;
    r.deg = core.gb.max_degree;
    r.quasi_stable = is_quasi_stable(J);
    r.stable = is_stable(J);
    r.strongly_stable = is_strongly_stable(J);
    r.noether = is_noether_position(J);
    core.hilbert = hilbert_series(J, r.deg + 3);
    r.hilb = core.hilbert.hilb;
    r.dim = dimension(J);

    if (r.quasi_stable) {
      core.pommaret = complete(G);
      core.reg = reg_from_pommaret(*core.pommaret);
      core.depth = depth_from_pommaret(*core.pommaret);
    } else {
      const IdealInvariants inv = compute_invariants(generators, inv_options);
      core.reg = inv.reg;
      core.depth = inv.depth;
    }
    r.reg = core.reg;
    r.depth = core.depth;

    const int n = r.n;
    const int d = r.d;
    const int D = r.dim;
    const int lambda = r.depth;
    const bool ss = r.strongly_stable;
    const bool qs = r.quasi_stable;
    const BoundInputs in{n, d, D, lambda, r.degrees};
    const std::string not_ss = "leading ideal is not strongly stable";
    const std::string not_qs = "leading ideal is not quasi stable";

    std::optional<FSetReport> fsets;
    if (ss) {
      fsets = f_set(G);
      r.f_size = static_cast<long>(fsets->f().size());
    }

    // Dimension and position cross-checks.
    checks.add("dimension.pole_order", str(D), "==", str(core.hilbert.dim), D == core.hilbert.dim);
    if (ss && D >= 1) {
      const int below = dimension(restrict_last(J, 1));
      checks.add("dimension.restriction", str(D), "==", str(below) + "+1", D == below + 1);
    } else {
      checks.skip("dimension.restriction", ss ? "dimension is zero" : not_ss);
    }
    checks.add("stability.chain", "strongly=" + yes_no(ss) + " stable=" + yes_no(r.stable), "=>",
               "quasi=" + yes_no(qs), (!ss || r.stable) && (!r.stable || qs));
    checks.add("noether.from_quasi_stable", "quasi=" + yes_no(qs), "=>", "noether=" + yes_no(r.noether),
               !qs || r.noether);
    if (D <= 1) {
      checks.add("noether.equivalence", "noether=" + yes_no(r.noether), "<=>", "quasi=" + yes_no(qs),
                 r.noether == qs);
    } else {
      checks.skip("noether.equivalence", "dimension exceeds 1");
    }

    // Hilbert data.
    const int closed_form = std::max(0, static_cast<int>(core.hilbert.numerator.size()) - 1 - D + 1);
    checks.add("hilb.closed_form", str(r.hilb), "==", "max{0,deg p-D+1}=" + str(closed_form), r.hilb == closed_form);
    {
      const int top = std::min(options.macaulay_max_degree, r.deg + 1);
      bool equal = true;
      for (int s = 0; s <= top && equal; ++s) equal = macaulay_hilbert_function(generators, s) == core.hilbert.hf(s);
      checks.add("macaulay.hf", "HF by linear algebra, degrees 0.." + str(top), "==", "HF of LT(I)", equal);
    }
    if (static_cast<int>(generators.size()) <= n) {
      const RegularSequenceReport rs = regular_sequence_report(generators);
      checks.add("regular_sequence.criteria", "series=" + yes_no(rs.by_series), "==",
                 "dimension=" + yes_no(rs.by_dimension), rs.by_series == rs.by_dimension);
    } else {
      checks.skip("regular_sequence.criteria", "more generators than variables");
    }

    // Degree versus regularity.
    if (qs) {
      checks.add("deg_le_reg", str(r.deg), "<=", str(r.reg), r.deg <= r.reg);
    } else {
      checks.skip("deg_le_reg", not_qs);
    }
    if (ss) {
      checks.add("deg_eq_reg", str(r.deg), "==", str(r.reg), r.deg == r.reg);
    } else {
      checks.skip("deg_eq_reg", not_ss);
    }

    // Pommaret basis.
    if (qs) {
      const PommaretBasis& h = *core.pommaret;
      const bool cones = cones_partition_leading_ideal(h, J, h.max_degree + 3);
      const bool same_lt = MonomialIdeal(n, h.leading_terms()) == J;
      checks.add("pommaret.cones", "cones of LT(H) up to degree " + str(h.max_degree + 3), "partition",
                 "LT(I)", cones && same_lt);
      if (r.stable) {
        checks.add("pommaret.stable_equals_gb", "H", "==", "reduced GB", same_set(h.polynomials(), G));
      } else {
        checks.skip("pommaret.stable_equals_gb", "leading ideal is not stable");
      }
    } else {
      checks.skip("pommaret.cones", not_qs);
      checks.skip("pommaret.stable_equals_gb", not_qs);
    }

    // Main bounds in strongly stable position.
    if (ss) {
      checks.bound("mainthm1.deg", r.deg, bound(Formula::hs_A, in));
      checks.bound("mainthm1.fset", *r.f_size, bound(Formula::fset_bound, in));
      if (n >= 2) {
        checks.bound("mainthm2", r.reg, bound(Formula::caviglia_sbarra, in));
      } else {
        checks.skip("mainthm2", "needs n >= 2");
      }
      if (D >= 1) {
        const BoundValue c = bound(Formula::hs_C, in);
        checks.add("mainthm3", "deg=" + str(r.deg) + ", reg=" + str(r.reg), "<=", c.to_string(),
                   r.deg == r.reg && at_most(r.reg, c));
      } else {
        checks.skip("mainthm3", "dimension is zero");
      }
      checks.add("popstrong.cp", "CP gaps of LT(I) above d=" + str(d), "==", "none", cp_gap_check(J, d));
      truncated_checks(checks, generators, r.deg, d);
    } else {
      for (const char* id : {"mainthm1.deg", "mainthm1.fset", "mainthm2", "mainthm3", "popstrong.cp",
                             "truncated_gb.certified_is_basis", "truncated_gb.certified_at_top"}) {
        checks.skip(id, not_ss);
      }
    }

    // Depth-refined corollaries.
    const bool refined = D > 1 && D > lambda;
    const std::string not_refined = "needs D > 1 and D > depth";
    if (ss && refined) {
      const BoundValue a = bound(Formula::hs_A_depth, in);
      checks.bound("cor2.deg", r.deg, a);
      checks.bound("cor2.reg", r.reg, a);
    } else {
      checks.skip("cor2.deg", ss ? not_refined : not_ss);
      checks.skip("cor2.reg", ss ? not_refined : not_ss);
    }
    if (qs && refined) {
      const BoundValue a = bound(Formula::hs_A_depth, in);
      checks.add("cor2.pommaret", "deg=" + str(r.deg) + " <= deg(H)=" + str(core.pommaret->max_degree), "<=",
                 a.to_string(), r.deg <= core.pommaret->max_degree && at_most(core.pommaret->max_degree, a));
    } else {
      checks.skip("cor2.pommaret", qs ? not_refined : not_qs);
    }
    if (ss && D >= 1 && D > lambda) {
      const BoundValue c = bound(Formula::hs_C_depth, in);
      checks.add("cavag", "deg=" + str(r.deg) + ", reg=" + str(r.reg), "<=", c.to_string(),
                 r.deg == r.reg && at_most(r.reg, c));
    } else {
      checks.skip("cavag", ss ? "needs D >= 1 and D > depth" : not_ss);
    }

    // Lemma on F-sets.
    if (ss && D >= 1) {
      const MoraCheck m = lemma_mora_check(*fsets, d);
      checks.add("mora.a", str(m.a_lhs), "<=", str(m.a_rhs), m.holds_a);
      checks.add("mora.b", str(m.b_lhs), "<=", str(m.b_rhs), m.holds_b);
    } else {
      checks.skip("mora.a", ss ? "dimension is zero" : not_ss);
      checks.skip("mora.b", ss ? "dimension is zero" : not_ss);
    }

    // Zero-dimensional and Cohen-Macaulay bounds.
    if (D == 0) {
      checks.bound("maincor", r.deg, bound(Formula::macaulay_0dim, in));
      BigInt product = 1;
      std::vector<int> padded = r.degrees;
      padded.resize(std::max(padded.size(), static_cast<std::size_t>(n)), 1);
      for (int i = 0; i < n; ++i) product *= padded[static_cast<std::size_t>(i)];
      const BigInt standard = std::accumulate(core.hilbert.numerator.begin(), core.hilbert.numerator.end(), BigInt(0));
      checks.add("lem0dim.b", "#N=" + str(standard), "<=", str(product), standard <= product);
    } else {
      checks.skip("maincor", "dimension is positive");
      checks.skip("lem0dim.b", "dimension is positive");
    }
    if (D == lambda && r.noether) {
      checks.bound("cm_noether", r.deg, bound(Formula::cm_noether, in));
    } else {
      checks.skip("cm_noether", D != lambda ? "not Cohen-Macaulay (D > depth)" : "not in Noether position");
    }

    // Lazard-type statements for dim <= 1.
    if (D <= 1) {
      const BoundValue laz = bound(Formula::lazard, in);
      if (qs) {
        checks.bound("laz3", r.deg, laz);
      } else {
        checks.skip("laz3", not_qs);
      }
      checks.bound("laz4", r.reg, laz);
      const StabilizationReport st = stabilization_check(generators);
      checks.add("laz2", "HF constant from degree " + str(st.from_degree), "==", "true", st.holds);
      checks.add("laz2.hilb", str(r.hilb), "<=", str(lazard_sum(r.degrees, n)), r.hilb <= lazard_sum(r.degrees, n));
    } else {
      for (const char* id : {"laz3", "laz4", "laz2", "laz2.hilb"}) checks.skip(id, "dimension exceeds 1");
    }

    // Affine version on the dehomogenized generators.
    if (n >= 2) {
      std::vector<Polynomial> affine;
      std::vector<int> affine_degrees;
      for (const auto& g : generators) {
        affine.push_back(dehomogenize(g));
        affine_degrees.push_back(affine.back().degree());
      }
      const bool unit = std::any_of(affine.begin(), affine.end(), [](const Polynomial& f) { return f.degree() == 0; });
      if (unit) {
        checks.skip("laz5", "a dehomogenized generator is constant");
      } else {
        std::vector<Polynomial> tilde;
        for (const auto& f : affine) tilde.push_back(homogenize(f));
        const GroebnerBasis tilde_gb = buchberger(tilde).basis;
        const MonomialIdeal tilde_lt = tilde_gb.leading_ideal();
        const int tilde_dim = dimension(tilde_lt);
        if (!is_quasi_stable(tilde_lt)) {
          checks.skip("laz5", "homogenized ideal is not quasi stable");
        } else if (tilde_dim > 1) {
          checks.skip("laz5", "homogenized ideal has dimension above 1");
        } else {
          const int tilde_depth = depth_from_pommaret(complete(tilde_gb.generators));
          const BoundValue b = bound(Formula::lazard_affine, {n - 1, max_degree(affine), std::nullopt, tilde_depth,
                                                              affine_degrees});
          checks.bound("laz5", max_degree(affine_reduced_gb(affine)), b);
        }
      }
    } else {
      checks.skip("laz5", "needs at least two variables");
    }

    // Depth reduction.
    if (qs && lambda >= 1) {
      const std::vector<Polynomial> restricted = restrict_last(generators, lambda);
      const GroebnerBasis tilde = buchberger(restricted).basis;
      const PommaretBasis tilde_h = complete(tilde.generators);
      checks.add("propdepth.deg", str(r.deg), "==", str(tilde.max_degree), r.deg == tilde.max_degree);
      checks.add("propdepth.reg", str(r.reg), "==", str(reg_from_pommaret(tilde_h)),
                 r.reg == reg_from_pommaret(tilde_h) &&
                     restrict_basis(*core.pommaret, lambda).max_degree == core.pommaret->max_degree);
    } else {
      checks.skip("propdepth.deg", qs ? "depth is zero" : not_qs);
      checks.skip("propdepth.reg", qs ? "depth is zero" : not_qs);
    }

    // Invariance under a random change of coordinates.
    if (options.invariance) {
      std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
      const LinearChange a = random_linear_change(n, rng, options.coefficient_bound);
      const IdealInvariants moved = compute_invariants(apply_linear_change(a, generators), inv_options);
      bool same_hf = true;
      for (int s = 0; s <= r.deg + 3; ++s) same_hf = same_hf && moved.hilbert.hf(s) == core.hilbert.hf(s);
      checks.add("invariance", "dim,depth,reg=" + str(D) + "," + str(lambda) + "," + str(r.reg), "==",
                 str(moved.dim) + "," + str(moved.depth) + "," + str(moved.reg) + (same_hf ? "" : " (HF differs)"),
                 moved.dim == D && moved.depth == lambda && moved.reg == r.reg && same_hf);
    } else {
      checks.skip("invariance", "disabled");
    }
  } catch (const ResourceCapError& e) {
    r.incomplete = true;
    r.incomplete_reason = e.what();
  } catch (const InconclusiveError& e) {
    r.incomplete = true;
    r.incomplete_reason = e.what();
  }
  return r;
}

}  // namespace stablegb
