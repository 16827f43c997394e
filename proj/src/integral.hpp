#pragma once

// Fraction-free reduction shared by the ordinary and the involutive normal forms.

#include "stablegb/ring.hpp"

namespace stablegb::detail {

/// Scales p to coprime integer coefficients with positive leading coefficient.
/// Returns the factor applied.
Rational make_primitive(Polynomial& p);

/// Reduces the terms of p from index `pos` on. `reducer(term)` returns an
/// element with integer coefficients whose leading term may cancel `term`, or
/// nullptr. Afterwards p = scale * (exact remainder) for the returned scale.
template <typename Reducer>
Rational reduce_integral(Polynomial& p, std::size_t pos, Reducer reducer) {
  Rational scale = make_primitive(p);
  int since_content = 0;
  BigInt h;
  while (pos < p.size()) {
    const Monomial& m = p.terms()[pos];
    const Polynomial* g = reducer(m.term);
    if (g == nullptr) {
      ++pos;
      continue;
    }
    const BigInt& a = m.coeff.get_num();
    const BigInt& b = g->lc().get_num();
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Rational mult(BigInt(b / h));
    const Rational c(BigInt(a / h));
    const Term t = m.term / g->lt();
    if (mult != 1) {
      p *= mult;
      scale *= mult;
    }
    p.sub_mul(c, t, *g, pos);
    if (++since_content == 8) {
      scale *= make_primitive(p);
      since_content = 0;
    }
  }
  scale *= make_primitive(p);
  return scale;
}

}  // namespace stablegb::detail
