#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stablegb/error.hpp"
#include "stablegb/invariants.hpp"
#include "stablegb/parse.hpp"
#include "stablegb/pommaret.hpp"

using namespace stablegb;

namespace {

const char* const kGreen = "ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n";
const char* const kExample = "ring: x1 x2\nx1^2\nx1*x2 + x2^2\n";
const char* const kRemark = "ring: x1 x2\nx1^2\nx2^11*x1\n";

MonomialIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Term> terms;
  for (const auto& g : gens) terms.emplace_back(n, std::vector<int>(g));
  return MonomialIdeal(n, terms);
}

MonomialIdeal parse_monomials(const char* text) {
  const auto in = parse_ideal(text);
  std::vector<Term> terms;
  for (const auto& g : in.generators) terms.push_back(g.lt());
  return MonomialIdeal(in.ring.n(), terms);
}

std::vector<BigInt> ints(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Hilbert, ZeroDimensionalExample) {
  const MonomialIdeal j = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(hilbert_function(j, t), std::vector<int>({1, 2, 1, 0, 0})[t]);
  const HilbertData h = hilbert_series(j);
  EXPECT_EQ(h.dim, 0);
  EXPECT_EQ(h.numerator, ints({1, 2, 1}));
  EXPECT_EQ(h.hilb, 3);
  EXPECT_EQ(h.hp_at(7), 0);
  EXPECT_EQ(hilbert_regularity(j), 3);
}

TEST(Hilbert, PrincipalLinear) {
  const HilbertData h = hilbert_series(ideal(2, {{1, 0}}));
  EXPECT_EQ(h.dim, 1);
  EXPECT_EQ(h.numerator, ints({1}));
  EXPECT_EQ(h.hilb, 0);
  EXPECT_EQ(h.hp_at(0), 1);
  EXPECT_EQ(h.hp_at(10), 1);
  EXPECT_THROW(hilbert_series(ideal(2, {{0, 0}})), DomainError);
  EXPECT_EQ(hilbert_numerator(ideal(2, {{0, 0}})), IntPoly{});
}

TEST(Hilbert, ZeroIdeal) {
  const HilbertData h = hilbert_series(MonomialIdeal(3));
  EXPECT_EQ(h.dim, 3);
  EXPECT_EQ(h.numerator, ints({1}));
  EXPECT_EQ(h.hf(4), 15);
}

TEST(Hilbert, MatchesEnumeration) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 150; ++k) {
    const int n = 1 + k % 4;
    const auto raw = oracle::random_monomial_gens(rng, n, 1 + k % 4, 3);
    std::vector<Term> terms;
    for (const auto& e : raw) terms.emplace_back(n, std::span<const int>(e));
    const MonomialIdeal j(n, terms);
    const auto g = oracle::exps(j.generators());
    const HilbertData h = hilbert_series(j, 12);

    std::vector<BigInt> hf;
    for (int s = 0; s <= 14; ++s) {
      hf.push_back(oracle::hf_by_enumeration(n, g, s));
      EXPECT_EQ(hilbert_function(j, s), hf.back()) << k << " at " << s;
      if (s <= 12) EXPECT_EQ(h.hf(s), hf.back());
      if (s >= h.hilb) EXPECT_EQ(h.hp_at(s), Rational(hf.back())) << k << " at " << s;
    }
    if (h.hilb > 0) EXPECT_NE(h.hp_at(h.hilb - 1), Rational(hf[static_cast<std::size_t>(h.hilb - 1)]));

    // (1-t)^n * sum HF(s) t^s, truncated, recovers the unreduced numerator
    const IntPoly num = hilbert_numerator(j);
    std::vector<BigInt> series = hf;
    for (int r = 0; r < n; ++r) {
      for (std::size_t s = series.size(); s-- > 1;) series[s] -= series[s - 1];
    }
    for (std::size_t s = 0; s < 13; ++s) EXPECT_EQ(s < num.size() ? num[s] : BigInt(0), series[s]) << k;

    BigInt p1 = 0;
    for (const auto& c : h.numerator) p1 += c;
    EXPECT_GT(p1, 0);
    EXPECT_EQ(h.dim, dimension(j));
  }
}

TEST(Hilbert, HilbReadingsOnRemarkIdeal) {
  const HilbertData h = hilbert_series(parse_monomials(kRemark));
  EXPECT_EQ(h.dim, 1);
  const int deg_p = static_cast<int>(h.numerator.size()) - 1;
  EXPECT_EQ(h.hilb, std::max(0, deg_p - h.dim + 1));
  EXPECT_EQ(h.hilb, 12);
}

TEST(Hilbert, InvariantUnderLinearChange) {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 2; ++i) f.push_back(oracle::random_homogeneous(rng, 3, 1 + (k + i) % 3, 3, 5));
    const HilbertData before = hilbert_series(buchberger(f).basis.leading_ideal(), 10);
    const LinearChange a = random_linear_change(3, rng, 5);
    std::vector<Polynomial> g;
    for (const auto& p : f) g.push_back(apply_linear_change(a, p));
    const HilbertData after = hilbert_series(buchberger(g).basis.leading_ideal(), 10);
    EXPECT_EQ(before.numerator, after.numerator);
    EXPECT_EQ(before.hilb, after.hilb);
    EXPECT_EQ(before.hp, after.hp);
    for (int s = 0; s <= 10; ++s) EXPECT_EQ(before.hf(s), after.hf(s));
    // and both agree with linear algebra on the original generators
    for (int s = 0; s <= 6; ++s) {
      const BigInt total = static_cast<long>(terms_of_degree(3, s).size());
      EXPECT_EQ(before.hf(s), total - BigInt(static_cast<long>(oracle::ideal_slice_dimension(f, s))));
    }
  }
}

TEST(Stabilization, Examples) {
  const RingContext r1(1);
  const auto one = stabilization_check(std::vector<Polynomial>{parse_polynomial("x1^2", r1)});
  EXPECT_EQ(one.from_degree, 2);
  EXPECT_TRUE(one.holds);
  EXPECT_TRUE(stabilization_check(parse_ideal(kExample).generators).holds);
  EXPECT_TRUE(stabilization_check(parse_ideal(kGreen).generators).holds);
  EXPECT_THROW(stabilization_check(std::vector<Polynomial>{parse_polynomial("x1^2", RingContext(3))}), DomainError);
}

TEST(Stabilization, RandomDimensionOne) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 2; ++i) f.push_back(oracle::random_homogeneous(rng, 3, 1 + (k + i) % 3, 3, 5));
    if (hilbert_series(buchberger(f).basis.leading_ideal()).dim > 1) continue;
    const auto rep = stabilization_check(f);
    EXPECT_TRUE(rep.holds) << k;
    // the Hilbert function is constant from the stated degree on, by linear algebra too
    auto hf = [&](int t) {
      return static_cast<long>(terms_of_degree(3, t).size()) - static_cast<long>(oracle::ideal_slice_dimension(f, t));
    };
    for (int s = std::max(0, rep.from_degree); s <= rep.from_degree + 2; ++s) EXPECT_EQ(hf(s), hf(s + 1)) << k;
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(RegularSequence, Examples) {
  const RingContext r(2);
  EXPECT_TRUE(is_regular_sequence(std::vector<Polynomial>{parse_polynomial("x1^3", r), parse_polynomial("x2^2", r)}));
  EXPECT_FALSE(is_regular_sequence(std::vector<Polynomial>{parse_polynomial("x1", r), parse_polynomial("x1*x2", r)}));
  EXPECT_TRUE(is_regular_sequence(parse_ideal(kExample).generators));
  EXPECT_THROW(is_regular_sequence(std::vector<Polynomial>{}), UsageError);
}

TEST(RegularSequence, CriteriaAgree) {
  std::mt19937_64 rng(71);
  int yes = 0;
  int no = 0;
  for (int k = 0; k < 80; ++k) {
    const int n = 2 + k % 2;
    std::vector<Polynomial> f;
    for (int i = 0; i < 1 + k % n; ++i) f.push_back(oracle::random_homogeneous(rng, n, 1 + (k + i) % 3, 1 + k % 3, 4));
    const auto rep = regular_sequence_report(f);
    EXPECT_EQ(rep.by_series, rep.by_dimension) << k;
    (rep.by_series ? yes : no)++;
  }
  EXPECT_GT(yes, 5);
  EXPECT_GT(no, 5);
}

TEST(Gin, KnownExamples) {
  GinOptions o;
  o.seed = 1;
  EXPECT_EQ(gin(parse_ideal(kGreen).generators, o), parse_monomials("ring: x1 x2 x3\nx2^2\nx1*x2\nx1^2\nx1*x3^2\n"));
  EXPECT_EQ(gin(parse_ideal(kExample).generators, o), parse_monomials("ring: x1 x2\nx1*x2\nx1^2\nx2^3\n"));
  EXPECT_EQ(gin(parse_ideal(kRemark).generators, o), parse_monomials(kRemark));
}

TEST(Gin, IsStronglyStableAndDeterministic) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 2; ++i) f.push_back(oracle::random_homogeneous(rng, 3, 2, 2, 3));
    GinOptions o;
    o.seed = static_cast<std::uint64_t>(k);
    const MonomialIdeal g = gin(f, o);
    EXPECT_TRUE(is_strongly_stable(g));
    EXPECT_EQ(g, gin(f, o));
  }
  GinOptions bad;
  bad.trials = 1;
  EXPECT_THROW(gin(parse_ideal(kGreen).generators, bad), UsageError);
}

TEST(Invariants, ExampleIdeals) {
  const IdealInvariants ex = compute_invariants(parse_ideal(kExample).generators);
  EXPECT_EQ(ex.reg, 3);
  EXPECT_EQ(ex.dim, 0);
  EXPECT_EQ(ex.depth, 0);
  const IdealInvariants green = compute_invariants(parse_ideal(kGreen).generators);
  EXPECT_EQ(green.reg, 3);
  EXPECT_EQ(green.dim, 1);
  const RingContext r(3);
  EXPECT_EQ(regularity(std::vector<Polynomial>{parse_polynomial("x1^4 + x2*x3^3", r)}), 4);
  EXPECT_EQ(depth(std::vector<Polynomial>{parse_polynomial("x1^4 + x2*x3^3", r)}), 2);
}

TEST(Invariants, RegMatchesGin) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 12; ++k) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 2 + k % 2; ++i) f.push_back(oracle::random_homogeneous(rng, 3, 1 + (k + i) % 3, 3, 4));
    InvariantOptions o;
    o.gin_cross_check = true;
    o.gin.seed = static_cast<std::uint64_t>(k);
    o.transform.seed = static_cast<std::uint64_t>(k);
    const IdealInvariants inv = compute_invariants(f, o);
    ASSERT_TRUE(inv.gin_agrees.has_value());
    EXPECT_TRUE(*inv.gin_agrees) << k;
    EXPECT_EQ(inv.dim, hilbert_series(buchberger(f).basis.leading_ideal()).dim);
    EXPECT_LE(inv.depth, inv.dim);
  }
}
