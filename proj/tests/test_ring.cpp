#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "stablegb/error.hpp"
#include "stablegb/parse.hpp"
#include "stablegb/ring.hpp"

using namespace stablegb;

namespace {

RingContext ring3() { return RingContext(std::vector<std::string>{"x1", "x2", "x3"}); }
RingContext ring4() { return RingContext(std::vector<std::string>{"x1", "x2", "x3", "x4"}); }

}  // namespace

TEST(Degrevlex, MatchesDefinitionOnAllPairs) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Term> all;
    for (int s = 0; s <= 4; ++s) {
      for (const auto& t : terms_of_degree(n, s)) all.push_back(t);
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        const bool expected = oracle::degrevlex_greater(oracle::exps(a), oracle::exps(b));
        EXPECT_EQ(degrevlex_cmp(a, b) > 0, expected);
        EXPECT_EQ(degrevlex_cmp(a, b) == 0, a == b);
      }
    }
  }
}

TEST(Degrevlex, VariablesAreOrderedDownwards) {
  EXPECT_TRUE(degrevlex_cmp(Term::variable(3, 0), Term::variable(3, 1)) > 0);
  EXPECT_TRUE(degrevlex_cmp(Term::variable(3, 1), Term::variable(3, 2)) > 0);
  // x2^2 > x1 x3: the one with the smaller last exponent wins
  EXPECT_TRUE(degrevlex_cmp(Term(3, {0, 2, 0}), Term(3, {1, 0, 1})) > 0);
}

TEST(Degrevlex, TermsOfDegreeAreDescendingAndComplete) {
  const auto terms = terms_of_degree(3, 4);
  EXPECT_EQ(terms.size(), 15u);
  EXPECT_TRUE(std::is_sorted(terms.begin(), terms.end(), DegrevlexGreater{}));
  EXPECT_EQ(terms.size(), oracle::monomials(3, 4).size());
}

TEST(Term, LcmGcdAndDivision) {
  const Term a(3, {2, 0, 1});
  const Term b(3, {1, 3, 0});
  EXPECT_EQ(a.lcm(b), Term(3, {2, 3, 1}));
  EXPECT_EQ(a.gcd(b), Term(3, {1, 0, 0}));
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE(Term(3, {1, 0, 0}).coprime(Term(3, {0, 2, 1})));
  EXPECT_TRUE(a.gcd(b).divides(a));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(Term(3, {1, 0, 1}).max_index(), 3);
  EXPECT_EQ(Term(3).max_index(), 0);
}

TEST(Polynomial, LeadingDataOfLazardGenerator) {
  const Polynomial f = parse_polynomial("x1*x2^3 - x3^4", ring4());
  EXPECT_EQ(f.lt(), Term(4, {1, 3, 0, 0}));
  EXPECT_EQ(f.lc(), 1);
  EXPECT_EQ(f.degree(), 4);
  EXPECT_TRUE(f.is_homogeneous());
}

TEST(Polynomial, TermsStayDescendingWithoutZeros) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Polynomial f = oracle::random_polynomial(rng, 3, 4, 6, 3);
    const Polynomial g = oracle::random_polynomial(rng, 3, 4, 6, 3);
    for (const Polynomial& h : {f + g, f - g, f * g}) {
      const auto ts = h.terms();
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) EXPECT_TRUE(degrevlex_cmp(ts[i].term, ts[i + 1].term) > 0);
      for (const auto& m : ts) EXPECT_NE(m.coeff, 0);
    }
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(f * g, g * f);
  }
}

TEST(Polynomial, SubMulMatchesPlainArithmetic) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = oracle::random_polynomial(rng, 3, 5, 6, 4);
    const Polynomial g = oracle::random_polynomial(rng, 3, 3, 4, 4);
    const Term t(3, {1, 0, 2});
    const Polynomial expected = f - g * Polynomial::monomial(Rational(3, 2), t);
    f.sub_mul(Rational(3, 2), t, g);
    EXPECT_EQ(f, expected);
  }
}

TEST(LinearChange, IdentityAndInverse) {
  const Polynomial f = parse_polynomial("x1^2 - 3*x2*x3 + x3^2", ring3());
  EXPECT_EQ(apply_linear_change(LinearChange::identity(3), f), f);
  const LinearChange a({{2, 1, 0}, {0, 1, 1}, {1, 0, 3}});
  EXPECT_EQ(apply_linear_change(a.inverse(), apply_linear_change(a, f)), f);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(LinearChange({{1, 2}, {2, 4}}), DomainError);
}

TEST(LinearChange, MatchesNaiveExpansion) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    std::uniform_int_distribution<int> entry(-4, 4);
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    if (determinant(m) == 0) continue;
    const LinearChange a(m);
    const Polynomial f = oracle::random_homogeneous(rng, 3, 3, 4, 5);
    EXPECT_EQ(apply_linear_change(a, f), oracle::substitute(a, f));
  }
  const Polynomial square = parse_polynomial("x1^2", ring3());
  const LinearChange a({{1, 2, 0}, {3, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(apply_linear_change(a, square), oracle::substitute(a, square));
}

TEST(Homogenize, RoundTripAndExample) {
  const RingContext r2(std::vector<std::string>{"x1", "x2"});
  const RingContext r3 = r2.extended("x3");
  EXPECT_EQ(homogenize(parse_polynomial("x1^2 + x1", r2)), parse_polynomial("x1^2 + x1*x3", r3));
  const Polynomial h = parse_polynomial("x1*x2 + x2^2", r2);
  EXPECT_EQ(homogenize(h), parse_polynomial("x1*x2 + x2^2", r3));
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const Polynomial f = oracle::random_polynomial(rng, 3, 4, 5, 6);
    const Polynomial hf = homogenize(f);
    EXPECT_TRUE(hf.is_homogeneous());
    EXPECT_EQ(dehomogenize(hf), f);
  }
}

TEST(Parse, Generators) {
  const IdealInput in = parse_ideal("# comment\nring: x1 x2 x3\nx1*x3\n\nx1*x2 + x2^2\n3/2*x1^2 - x2^2\n");
  ASSERT_EQ(in.generators.size(), 3u);
  EXPECT_EQ(in.generators[0], Polynomial::term(Term(3, {1, 0, 1})));
  EXPECT_EQ(in.generators[1].size(), 2u);
  EXPECT_EQ(in.generators[2].lc(), Rational(3, 2));
  EXPECT_EQ(in.generators[2].terms()[1].coeff, -1);
}

TEST(Parse, FormatRoundTrip) {
  std::mt19937_64 rng(2);
  const RingContext r = ring3();
  for (int k = 0; k < 50; ++k) {
    const Polynomial f = oracle::random_polynomial(rng, 3, 5, 5, 9) * Rational(1, 1 + k % 4);
    EXPECT_EQ(parse_polynomial(format_polynomial(f, r), r), f);
  }
  const IdealInput in = parse_ideal("ring: a b\na^2 - 1/3*b^2\nb\n");
  EXPECT_EQ(parse_ideal(format_ideal(in)).generators, in.generators);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_ideal("ring: x y\nx^2 + z\n");
    FAIL() << "unknown variable accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
  }
  EXPECT_THROW(parse_ideal("x^2\n"), ParseError);
  EXPECT_TRUE(parse_ideal("ring: x y\n").generators.empty());
  EXPECT_THROW(parse_ideal("ring: x y\nx^2 +\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: x y\nx - x\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: x x\nx\n"), ParseError);
}
