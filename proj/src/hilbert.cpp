#include <algorithm>
#include <bit>
#include <cstdint>

#include "stablegb/error.hpp"
#include "stablegb/invariants.hpp"

namespace stablegb {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(IntPoly& acc, const IntPoly& p, int shift) {
  const auto need = p.size() + static_cast<std::size_t>(shift);
  if (acc.size() < need) acc.resize(need, BigInt(0));
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + static_cast<std::size_t>(shift)] += p[k];
}

// p * (1 - t^e)
IntPoly times_one_minus(const IntPoly& p, int e) {
  IntPoly out = p;
  IntPoly neg;
  for (const auto& c : p) neg.push_back(-c);
  add_shifted(out, neg, e);
  trim(out);
  return out;
}

std::uint32_t support(const Term& t) {
  std::uint32_t mask = 0;
  for (int i = 0; i < t.arity(); ++i) {
    if (t[i] > 0) mask |= 1u << i;
  }
  return mask;
}

// Numerator of the Hilbert series over (1-t)^n, by splitting on a pivot
// x_v^e:  N(J) = N(J + x_v^e) + t^e N(J : x_v^e).
IntPoly numerator(const MonomialIdeal& j) {
  const auto& gens = j.generators();
  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    std::uint32_t s = support(g);
    if ((seen & s) != 0) {
      coprime = false;
      break;
    }
    seen |= s;
  }
  if (coprime) {
    IntPoly out{BigInt(1)};
    for (const auto& g : gens) out = times_one_minus(out, g.degree());
    return out;
  }

  std::vector<int> count(static_cast<std::size_t>(j.arity()), 0);
  for (const auto& g : gens) {
    if (std::popcount(support(g)) < 2) continue;
    for (int i = 0; i < g.arity(); ++i) count[static_cast<std::size_t>(i)] += g[i] > 0 ? 1 : 0;
  }
  const int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exponents;
  for (const auto& g : gens) {
    if (std::popcount(support(g)) >= 2 && g[v] > 0) exponents.push_back(g[v]);
  }
  std::sort(exponents.begin(), exponents.end());
  const int e = exponents[(exponents.size() - 1) / 2];
  const Term pivot = Term::variable(j.arity(), v, e);

  IntPoly out = numerator(j.plus(pivot));
  add_shifted(out, numerator(j.quotient(pivot)), e);
  trim(out);
  return out;
}

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

BigInt hf_value(const IntPoly& q, int dim, int s) {
  if (s < 0) return 0;
  if (dim == 0) return static_cast<std::size_t>(s) < q.size() ? q[static_cast<std::size_t>(s)] : BigInt(0);
  BigInt out = 0;
  for (std::size_t k = 0; k < q.size() && static_cast<int>(k) <= s; ++k) {
    out += q[k] * binomial(s - static_cast<long>(k) + dim - 1, dim - 1);
  }
  return out;
}

// Coefficients in s of  sum_k q_k * binom(s - k + D - 1, D - 1)  as a polynomial.
RatPoly hilbert_polynomial(const IntPoly& q, int dim) {
  RatPoly out;
  if (dim == 0) return out;
  BigInt factorial = 1;
  for (int i = 2; i <= dim - 1; ++i) factorial *= i;
  out.assign(static_cast<std::size_t>(dim), Rational(0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    RatPoly product{Rational(1)};
    for (int j = 0; j <= dim - 2; ++j) {
      // multiply by (s + c) with c = D - 1 - j - k
      const Rational c(dim - 1 - j - static_cast<long>(k));
      RatPoly next(product.size() + 1, Rational(0));
      for (std::size_t i = 0; i < product.size(); ++i) {
        next[i] += product[i] * c;
        next[i + 1] += product[i];
      }
      product = std::move(next);
    }
    for (std::size_t i = 0; i < product.size(); ++i) out[i] += Rational(q[k]) * product[i] / factorial;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Rational evaluate(const RatPoly& p, int s) {
  Rational out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * s + *it;
  return out;
}

}  // namespace

IntPoly hilbert_numerator(const MonomialIdeal& j) { return numerator(j); }

BigInt HilbertData::hf(int s) const { return hf_value(numerator, dim, s); }

Rational HilbertData::hp_at(int s) const { return evaluate(hp, s); }

HilbertData hilbert_series(const MonomialIdeal& j, int table_up_to) {
  IntPoly q = numerator(j);
  if (q.empty()) throw DomainError("hilbert_series: unit ideal");
  int divisions = 0;
  for (;;) {
    BigInt at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    // q / (1 - t): prefix sums, the last of which is q(1) = 0
    IntPoly next;
    BigInt running = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      running += q[k];
      next.push_back(running);
    }
    q = std::move(next);
    trim(q);
    ++divisions;
  }

  HilbertData h;
  h.numerator = q;
  h.dim = j.arity() - divisions;
  h.hp = hilbert_polynomial(q, h.dim);
  const int degree = static_cast<int>(q.size()) - 1;
  // HF and HP agree from deg(q)+1 on; walk down from there.
  int m = degree + 1;
  while (m > 0 && Rational(h.hf(m - 1)) == h.hp_at(m - 1)) --m;
  h.hilb = m;
  const int top = std::max({table_up_to, h.hilb, degree}) + 1;
  for (int s = 0; s <= top; ++s) h.hf_table.push_back(h.hf(s));
  return h;
}

BigInt hilbert_function(const MonomialIdeal& j, int t) {
  if (t < 0) throw UsageError("hilbert_function: negative degree");
  if (j.is_unit()) return 0;
  return hilbert_series(j).hf(t);
}

int hilbert_regularity(const MonomialIdeal& j) { return hilbert_series(j).hilb; }

}  // namespace stablegb
