#include "stablegb/fset.hpp"

#include <algorithm>

#include "stablegb/error.hpp"
#include "stablegb/groebner.hpp"

namespace stablegb {

namespace {

int max_degree(std::span<const Polynomial> basis) {
  int d = -1;
  for (const auto& g : basis) d = std::max(d, g.degree());
  return d;
}

std::vector<Term> below_degree(const MonomialIdeal& j, int degree) {
  return degree <= 0 ? std::vector<Term>{} : standard_monomials(j, degree - 1);
}

}  // namespace

std::vector<Term> standard_monomials(const MonomialIdeal& j, int up_to_degree) {
  std::vector<Term> out;
  for (int s = 0; s <= up_to_degree; ++s) {
    auto terms = terms_of_degree(j.arity(), s);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!j.contains(*it)) out.push_back(*it);
    }
  }
  return out;
}

std::vector<Term> all_standard_monomials(const MonomialIdeal& j) {
  if (j.is_zero() || dimension(j) != 0) throw DomainError("all_standard_monomials: ideal is not zero-dimensional");
  std::vector<Term> out;
  // N(J) is closed under division, so it ends at the first empty degree.
  for (int s = 0;; ++s) {
    bool any = false;
    auto terms = terms_of_degree(j.arity(), s);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!j.contains(*it)) {
        out.push_back(*it);
        any = true;
      }
    }
    if (!any) return out;
  }
}

FSetReport f_set(std::span<const Polynomial> reduced_gb) {
  if (reduced_gb.empty()) throw UsageError("f_set: empty basis");
  std::vector<std::vector<Polynomial>> bases{interreduce({reduced_gb.begin(), reduced_gb.end()})};
  std::vector<MonomialIdeal> lts{leading_ideal(bases.back())};
  if (lts.back().is_unit()) throw DomainError("f_set: unit ideal");
  if (!is_strongly_stable(lts.back())) throw DomainError("f_set: leading ideal is not strongly stable");

  // Restrictions of a degrevlex basis are bases of the restricted ideals.
  while (dimension(lts.back()) > 0) {
    bases.push_back(interreduce(restrict_last(bases.back(), 1)));
    lts.push_back(leading_ideal(bases.back()));
  }

  FSetReport report;
  report.levels.resize(bases.size());
  for (std::size_t k = bases.size(); k-- > 0;) {
    FSetLevel& level = report.levels[k];
    const MonomialIdeal& lt = lts[k];
    level.arity = lt.arity();
    level.dim = dimension(lt);
    level.degree = max_degree(bases[k]);
    if (level.dim == 0) {
      level.f = all_standard_monomials(lt);
      level.f_tilde = level.f;
      continue;
    }
    for (const auto& tau : report.levels[k + 1].f) {
      for (int a = 0; tau.degree() + a < level.degree; ++a) {
        Term t = tau.extended(a);
        if (!lt.contains(t)) level.f.push_back(t);
      }
    }
    std::sort(level.f.begin(), level.f.end(), [](const Term& x, const Term& y) { return degrevlex_cmp(x, y) < 0; });
    // tau x_n^a outside LT(I) forces tau outside LT(I_n), so F~ is all standard terms below deg(I).
    level.f_tilde = below_degree(lt, level.degree);
  }
  return report;
}

std::vector<Term> f_tilde_set(std::span<const Polynomial> reduced_gb) { return f_set(reduced_gb).f_tilde(); }

MoraCheck lemma_mora_check(const FSetReport& report, int d) {
  MoraCheck c;
  c.d = d;
  if (report.levels.size() < 2) return c;
  c.applicable = true;
  const FSetLevel& top = report.levels[0];
  const FSetLevel& down = report.levels[1];
  const long f_down = static_cast<long>(down.f.size());
  const long tilde_down = static_cast<long>(down.f_tilde.size());

  c.a_lhs = top.degree;
  c.a_rhs = std::max<long>(d, down.degree) + f_down;
  c.holds_a = c.a_lhs <= c.a_rhs;
  c.b_lhs = static_cast<long>(top.f.size());
  c.b_rhs = std::max<long>(d, f_down) * std::max<long>(d, f_down);
  c.holds_b = c.b_lhs <= c.b_rhs;

  c.variant_a_lhs = top.degree;
  c.variant_a_rhs = down.degree + tilde_down;
  c.variant_holds_a = c.variant_a_lhs <= c.variant_a_rhs;
  c.variant_b_lhs = static_cast<long>(top.f_tilde.size());
  c.variant_b_rhs = tilde_down * tilde_down;
  c.variant_holds_b = c.variant_b_lhs <= c.variant_b_rhs;
  return c;
}

MoraCheck lemma_mora_check(std::span<const Polynomial> reduced_gb, int d) {
  return lemma_mora_check(f_set(reduced_gb), d);
}

}  // namespace stablegb
