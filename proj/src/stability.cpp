#include "stablegb/stability.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "stablegb/error.hpp"

namespace stablegb {

MonomialIdeal::MonomialIdeal(int arity) : arity_(arity) {}

MonomialIdeal::MonomialIdeal(int arity, std::vector<Term> terms) : arity_(arity) {
  for (const auto& t : terms) {
    if (t.arity() != arity) throw UsageError("monomial ideal: arity mismatch");
  }
  // Ascending degrevlex puts every divisor before its multiples.
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return degrevlex_cmp(a, b) < 0; });
  for (const auto& t : terms) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return g.divides(t); });
    if (!redundant) gens_.push_back(t);
  }
}

bool MonomialIdeal::is_unit() const { return !gens_.empty() && gens_.front().is_one(); }

bool MonomialIdeal::contains(const Term& t) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return g.divides(t); });
}

int MonomialIdeal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::quotient(const Term& t) const {
  std::vector<Term> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g / g.gcd(t));
  return MonomialIdeal(arity_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus(const Term& t) const {
  std::vector<Term> out;
  out.reserve(gens_.size() + 1);
  for (const auto& g : gens_) {
    if (!t.divides(g)) out.push_back(g);
  }
  if (!contains(t)) out.push_back(t);
  return MonomialIdeal(arity_, std::move(out));
}

MonomialIdeal minimal_generators(int arity, std::span<const Term> terms) {
  return MonomialIdeal(arity, std::vector<Term>(terms.begin(), terms.end()));
}

MonomialIdeal leading_ideal(std::span<const Polynomial> gens) {
  if (gens.empty()) throw UsageError("leading_ideal: empty generator list has no arity");
  std::vector<Term> lts;
  for (const auto& g : gens) {
    if (!g.is_zero()) lts.push_back(g.lt());
  }
  return MonomialIdeal(gens.front().arity(), std::move(lts));
}

int cls(const Term& t) {
  if (t.is_one()) throw DomainError("class of the unit term is undefined");
  return t.max_index();
}

bool is_strongly_stable(const MonomialIdeal& j) {
  for (const auto& m : j.generators()) {
    for (int i = 1; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      Term base = m.with(i, m[i] - 1);
      for (int k = 0; k < i; ++k) {
        if (!j.contains(base.with(k, base[k] + 1))) return false;
      }
    }
  }
  return true;
}

bool is_stable(const MonomialIdeal& j) {
  for (const auto& m : j.generators()) {
    if (m.is_one()) continue;
    int c = m.max_index() - 1;
    Term base = m.with(c, m[c] - 1);
    for (int k = 0; k < c; ++k) {
      if (!j.contains(base.with(k, base[k] + 1))) return false;
    }
  }
  return true;
}

std::optional<QuasiStableObstruction> quasi_stable_obstruction(const MonomialIdeal& j) {
  // Membership of x_k^t * w needs t <= deg(g) for the divisor g, so the
  // maximal generator degree bounds the search.
  const int bound = std::max(0, j.max_degree());
  for (const auto& m : j.generators()) {
    for (int i = 1; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      Term base = m.with(i, 0);
      for (int k = 0; k < i; ++k) {
        bool found = false;
        for (int t = 0; t <= bound && !found; ++t) found = j.contains(base.with(k, base[k] + t));
        if (!found) return QuasiStableObstruction{m, i + 1, k + 1};
      }
    }
  }
  return std::nullopt;
}

bool is_quasi_stable(const MonomialIdeal& j) { return !quasi_stable_obstruction(j).has_value(); }

MonomialIdeal restrict_last(const MonomialIdeal& j, int count) {
  if (count < 0 || count >= j.arity()) throw UsageError("restrict_last: need 0 <= j < n");
  const int keep = j.arity() - count;
  std::vector<Term> out;
  for (const auto& g : j.generators()) {
    if (g.max_index() <= keep) out.push_back(g.truncated(keep));
  }
  return MonomialIdeal(keep, std::move(out));
}

std::vector<Polynomial> restrict_last(std::span<const Polynomial> gens, int count) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (count < 0 || count >= g.arity()) throw UsageError("restrict_last: need 0 <= j < n");
    Polynomial r = g.restrict_last(count);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

int deg_i(const MonomialIdeal& j, int i) {
  if (i < 1 || i > j.arity()) throw UsageError("deg_i: index out of range");
  int d = 0;
  for (const auto& g : j.generators()) d = std::max(d, g[i - 1]);
  return d;
}

int dimension(const MonomialIdeal& j) {
  const int n = j.arity();
  if (j.is_unit()) throw DomainError("dimension of the unit ideal");
  std::vector<std::uint32_t> supports;
  for (const auto& g : j.generators()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (g[i] > 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [set](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool is_noether_position(const MonomialIdeal& lt_ideal) {
  const int limit = lt_ideal.arity() - dimension(lt_ideal);
  for (int i = 0; i < limit; ++i) {
    bool has_power = std::any_of(lt_ideal.generators().begin(), lt_ideal.generators().end(),
                                 [i](const Term& g) { return g.max_index() == i + 1 && g[i] == g.degree(); });
    if (!has_power) return false;
  }
  return true;
}

bool cp_gap_check(const MonomialIdeal& j, int d) {
  std::set<int> degrees;
  for (const auto& g : j.generators()) degrees.insert(g.degree());
  if (degrees.empty()) return true;
  const int top = *degrees.rbegin();
  for (int s = d; s < top; ++s) {
    if (!degrees.contains(s + 1)) return false;
  }
  return true;
}

}  // namespace stablegb
