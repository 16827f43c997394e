#include "stablegb/pommaret.hpp"

#include <algorithm>
#include <set>

#include "integral.hpp"
#include "stablegb/error.hpp"

namespace stablegb {

namespace {

PommaretElement make_element(Polynomial p) {
  PommaretElement e;
  e.cls = cls(p.lt());
  for (int i = e.cls; i <= p.arity(); ++i) e.multiplicative.push_back(i);
  e.poly = std::move(p);
  return e;
}

const PommaretElement* find_involutive_divisor(const Term& t, const std::vector<PommaretElement>& elements,
                                               std::size_t* index = nullptr) {
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (pommaret_divides(elements[k].poly.lt(), t)) {
      if (index != nullptr) *index = k;
      return &elements[k];
    }
  }
  return nullptr;
}

// Involutive reduction of the terms of p starting at index `pos`, fraction-free
// on integer copies of the elements. With `exact` false the result is only
// correct up to a nonzero scalar.
Polynomial involutive_reduce_from(Polynomial p, const std::vector<PommaretElement>& elements, std::size_t pos,
                                  bool exact = true) {
  std::vector<Polynomial> integral;
  integral.reserve(elements.size());
  for (const auto& e : elements) {
    integral.push_back(e.poly);
    detail::make_primitive(integral.back());
  }
  const Rational scale = detail::reduce_integral(p, pos, [&](const Term& t) -> const Polynomial* {
    std::size_t k = 0;
    return find_involutive_divisor(t, elements, &k) ? &integral[k] : nullptr;
  });
  if (exact && !p.is_zero()) p *= 1 / scale;
  return p;
}

bool lt_less(const Polynomial& a, const Polynomial& b) { return degrevlex_cmp(a.lt(), b.lt()) < 0; }

struct Prolongation {
  Term lt;       // x_k * LT(h)
  int cls;       // class of h
  Term base_lt;  // LT(h)
  int variable;  // k, 0-based
};

class Completion {
 public:
  Completion(int arity, int cap) : arity_(arity), cap_(cap) {}

  void insert(Polynomial p) {
    pending_.push_back(std::move(p));
    settle();
  }

  // Returns false if the degree cap was hit.
  bool complete() {
    for (;;) {
      std::vector<Prolongation> candidates;
      for (const auto& e : elements_) {
        for (int k = 0; k + 1 < e.cls; ++k) {
          Term lt = e.poly.lt() * Term::variable(arity_, k);
          if (checked_.contains(key(e.poly.lt(), k))) continue;
          candidates.push_back({lt, e.cls, e.poly.lt(), k});
        }
      }
      if (candidates.empty()) return true;
      std::sort(candidates.begin(), candidates.end(), [](const Prolongation& a, const Prolongation& b) {
        auto order = degrevlex_cmp(a.lt, b.lt);
        if (order != 0) return order < 0;
        return a.cls < b.cls;
      });
      bool grew = false;
      for (const auto& c : candidates) {
        const PommaretElement* base = nullptr;
        for (const auto& e : elements_) {
          if (e.poly.lt() == c.base_lt) base = &e;
        }
        Polynomial prolonged = base->poly.mul_term(Rational(1), Term::variable(arity_, c.variable));
        Polynomial r = involutive_reduce_from(std::move(prolonged), elements_, 0, false);
        if (r.is_zero()) {
          checked_.insert(key(c.base_lt, c.variable));
          continue;
        }
        if (r.degree() > cap_) return false;
        insert(r.monic());
        grew = true;
        break;
      }
      if (!grew) return true;
    }
  }

  std::vector<Polynomial> tail_reduced() const {
    std::vector<Polynomial> out;
    for (const auto& e : elements_) out.push_back(involutive_reduce_from(e.poly, elements_, 1));
    std::sort(out.begin(), out.end(), lt_less);
    return out;
  }

 private:
  struct Key {
    Term lt;
    int variable;
    bool operator<(const Key& o) const {
      auto order = degrevlex_cmp(lt, o.lt);
      return order != 0 ? order < 0 : variable < o.variable;
    }
  };
  static Key key(const Term& t, int k) { return {t, k}; }

  // Moves elements whose leading term became involutively reducible back into
  // the queue, until the set is involutively head-autoreduced.
  void settle() {
    while (!pending_.empty()) {
      Polynomial p = std::move(pending_.back());
      pending_.pop_back();
      p = involutive_reduce_head(std::move(p));
      if (p.is_zero()) continue;
      p = p.monic();
      std::vector<PommaretElement> kept;
      for (auto& e : elements_) {
        if (pommaret_divides(p.lt(), e.poly.lt())) {
          pending_.push_back(std::move(e.poly));
          checked_.clear();
        } else {
          kept.push_back(std::move(e));
        }
      }
      elements_ = std::move(kept);
      elements_.push_back(make_element(std::move(p)));
    }
  }

  Polynomial involutive_reduce_head(Polynomial p) const {
    while (!p.is_zero()) {
      const PommaretElement* e = find_involutive_divisor(p.lt(), elements_);
      if (e == nullptr) break;
      p.sub_mul(p.lc() / e->poly.lc(), p.lt() / e->poly.lt(), e->poly);
    }
    return p;
  }

  int arity_;
  int cap_;
  std::vector<PommaretElement> elements_;
  std::vector<Polynomial> pending_;
  std::set<Key> checked_;
};

}  // namespace

std::vector<Polynomial> PommaretBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : elements) out.push_back(e.poly);
  return out;
}

std::vector<Term> PommaretBasis::leading_terms() const {
  std::vector<Term> out;
  for (const auto& e : elements) out.push_back(e.poly.lt());
  return out;
}

PommaretBasis make_pommaret_basis(int arity, std::vector<Polynomial> polys) {
  PommaretBasis h;
  h.arity = arity;
  std::sort(polys.begin(), polys.end(), lt_less);
  for (auto& p : polys) {
    if (p.arity() != arity) throw UsageError("pommaret basis: arity mismatch");
    h.elements.push_back(make_element(std::move(p)));
    h.max_degree = std::max(h.max_degree, h.elements.back().poly.degree());
    h.max_class = std::max(h.max_class, h.elements.back().cls);
  }
  return h;
}

bool pommaret_divides(const Term& b, const Term& a) {
  if (!b.divides(a)) return false;
  const int c = b.max_index();
  for (int i = 0; i + 1 < c; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

InvolutiveReduction involutive_reduce(const Polynomial& f, const PommaretBasis& h, ReductionOrder order) {
  InvolutiveReduction out;
  for (std::size_t k = 0; k < h.elements.size(); ++k) out.quotients.emplace_back(f.arity());
  Polynomial p = f;
  if (order == ReductionOrder::leading_first) {
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Monomial& m = p.terms()[pos];
      std::size_t k = 0;
      if (find_involutive_divisor(m.term, h.elements, &k) == nullptr) {
        ++pos;
        continue;
      }
      const Polynomial& g = h.elements[k].poly;
      Rational c = m.coeff / g.lc();
      Term t = m.term / g.lt();
      out.quotients[k] += Polynomial::monomial(c, t);
      p.sub_mul(c, t, g, pos);
    }
  } else {
    for (;;) {
      std::size_t k = 0;
      std::ptrdiff_t found = -1;
      for (std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(p.size()) - 1; pos >= 0 && found < 0; --pos) {
        if (find_involutive_divisor(p.terms()[static_cast<std::size_t>(pos)].term, h.elements, &k) != nullptr) {
          found = pos;
        }
      }
      if (found < 0) break;
      const Monomial m = p.terms()[static_cast<std::size_t>(found)];
      const Polynomial& g = h.elements[k].poly;
      Rational c = m.coeff / g.lc();
      Term t = m.term / g.lt();
      out.quotients[k] += Polynomial::monomial(c, t);
      p.sub_mul(c, t, g);
    }
  }
  out.remainder = std::move(p);
  return out;
}

Polynomial involutive_normal_form(const Polynomial& f, const PommaretBasis& h) {
  return involutive_reduce_from(f, h.elements, 0);
}

PommaretCompletion pommaret_completion(std::span<const Polynomial> reduced_gb, int degree_cap) {
  if (reduced_gb.empty()) throw UsageError("pommaret_completion: empty basis");
  const int n = reduced_gb.front().arity();
  MonomialIdeal lt_ideal = leading_ideal(reduced_gb);
  if (lt_ideal.is_unit()) throw DomainError("pommaret_completion: unit ideal");
  if (auto witness = quasi_stable_obstruction(lt_ideal)) return NotQuasiStable{witness, false, degree_cap};

  Completion completion(n, degree_cap);
  std::vector<Polynomial> sorted(reduced_gb.begin(), reduced_gb.end());
  std::sort(sorted.begin(), sorted.end(), lt_less);
  for (auto& g : sorted) completion.insert(std::move(g));
  if (!completion.complete()) return NotQuasiStable{std::nullopt, true, degree_cap};
  return make_pommaret_basis(n, completion.tail_reduced());
}

PommaretCompletion monomial_pommaret_basis(const MonomialIdeal& j, int degree_cap) {
  std::vector<Polynomial> gens;
  for (const auto& t : j.generators()) gens.push_back(Polynomial::term(t));
  if (gens.empty()) throw DomainError("pommaret basis of the zero ideal");
  return pommaret_completion(gens, degree_cap);
}

int reg_from_pommaret(const PommaretBasis& h) { return h.max_degree; }

int depth_from_pommaret(const PommaretBasis& h) { return h.arity - h.max_class; }

PommaretBasis restrict_basis(const PommaretBasis& h, int lambda) {
  if (lambda < 0 || lambda > depth_from_pommaret(h)) {
    throw DomainError("restrict_basis: lambda exceeds the depth");
  }
  if (lambda == 0) return h;
  std::vector<Polynomial> polys;
  for (const auto& e : h.elements) polys.push_back(e.poly.restrict_last(lambda));
  return make_pommaret_basis(h.arity - lambda, std::move(polys));
}

bool cones_partition_leading_ideal(const PommaretBasis& h, const MonomialIdeal& lt_ideal, int up_to) {
  const auto lts = h.leading_terms();
  for (int s = 0; s <= up_to; ++s) {
    for (const auto& t : terms_of_degree(h.arity, s)) {
      int divisors = 0;
      for (const auto& m : lts) divisors += pommaret_divides(m, t) ? 1 : 0;
      if (divisors != (lt_ideal.contains(t) ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace stablegb
