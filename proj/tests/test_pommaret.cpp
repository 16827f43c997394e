#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stablegb/error.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/parse.hpp"
#include "stablegb/pommaret.hpp"
#include "stablegb/transform.hpp"

using namespace stablegb;

namespace {

MonomialIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Term> terms;
  for (const auto& g : gens) terms.emplace_back(n, std::vector<int>(g));
  return MonomialIdeal(n, terms);
}

PommaretBasis expect_basis(const PommaretCompletion& c) {
  EXPECT_TRUE(std::holds_alternative<PommaretBasis>(c));
  return std::holds_alternative<PommaretBasis>(c) ? std::get<PommaretBasis>(c) : PommaretBasis{};
}

// Counts the involutive cones containing t.
int cones_containing(const std::vector<Term>& h, const Term& t) {
  int k = 0;
  for (const auto& b : h) k += oracle::pommaret_divides(oracle::exps(b), oracle::exps(t));
  return k;
}

}  // namespace

TEST(Pommaret, DivisionMatchesDefinition) {
  std::vector<Term> all;
  for (int s = 0; s <= 4; ++s) {
    for (const auto& t : terms_of_degree(3, s)) all.push_back(t);
  }
  for (const auto& a : all) {
    for (const auto& b : all) EXPECT_EQ(pommaret_divides(b, a), oracle::pommaret_divides(oracle::exps(b), oracle::exps(a)));
  }
  EXPECT_TRUE(pommaret_divides(Term(3, {1, 1, 0}), Term(3, {1, 3, 2})));
  EXPECT_FALSE(pommaret_divides(Term(3, {1, 1, 0}), Term(3, {2, 1, 0})));
}

TEST(Pommaret, MonomialBasisExample) {
  // the minimal generators are already a Pommaret basis
  const MonomialIdeal j = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 0}});
  const PommaretBasis h = expect_basis(monomial_pommaret_basis(j));
  EXPECT_EQ(reg_from_pommaret(h), 3);
  EXPECT_EQ(depth_from_pommaret(h), 1);
  EXPECT_EQ(h.max_class, 2);
  EXPECT_TRUE(cones_partition_leading_ideal(h, j, 8));
  for (const auto& e : h.elements) {
    ASSERT_FALSE(e.multiplicative.empty());
    EXPECT_EQ(e.multiplicative.front(), e.cls);
    EXPECT_EQ(e.multiplicative.back(), 3);
  }
}

TEST(Pommaret, PrincipalIdeal) {
  const PommaretBasis h = expect_basis(monomial_pommaret_basis(ideal(3, {{1, 0, 0}})));
  ASSERT_EQ(h.elements.size(), 1u);
  EXPECT_EQ(depth_from_pommaret(h), 2);
  EXPECT_EQ(reg_from_pommaret(h), 1);
  const PommaretBasis h2 = expect_basis(monomial_pommaret_basis(ideal(2, {{1, 0}})));
  EXPECT_EQ(depth_from_pommaret(h2), 1);
}

TEST(Pommaret, ConesPartitionByEnumeration) {
  std::mt19937_64 rng(40);
  int tried = 0;
  for (int k = 0; k < 300 && tried < 60; ++k) {
    auto raw = oracle::random_monomial_gens(rng, 3, 1 + k % 4, 4);
    raw.push_back({1 + k % 3, 0, 0});
    std::vector<Term> terms;
    for (const auto& e : raw) terms.emplace_back(3, std::span<const int>(e));
    const MonomialIdeal j(3, terms);
    if (!is_quasi_stable(j)) {
      EXPECT_TRUE(std::holds_alternative<NotQuasiStable>(monomial_pommaret_basis(j)));
      continue;
    }
    ++tried;
    const PommaretBasis h = expect_basis(monomial_pommaret_basis(j));
    const auto lts = h.leading_terms();
    for (int s = 0; s <= 9; ++s) {
      for (const auto& t : terms_of_degree(3, s)) EXPECT_EQ(cones_containing(lts, t), j.contains(t) ? 1 : 0);
    }
    EXPECT_EQ(MonomialIdeal(3, lts), j);
    EXPECT_TRUE(cones_partition_leading_ideal(h, j, 9));
  }
  EXPECT_GE(tried, 30);
}

TEST(Pommaret, CompletionOfGreen) {
  const auto in = parse_ideal("ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n");
  const auto gb = buchberger(in.generators).basis;
  const PommaretBasis h = expect_basis(pommaret_completion(gb.generators));
  EXPECT_EQ(MonomialIdeal(3, h.leading_terms()), gb.leading_ideal());
  EXPECT_TRUE(cones_partition_leading_ideal(h, gb.leading_ideal(), 8));
  for (const auto& p : h.polynomials()) EXPECT_TRUE(oracle::in_ideal(p, in.generators));
  EXPECT_EQ(reg_from_pommaret(h), 3);
}

TEST(Pommaret, InvolutiveReductionQuotients) {
  std::mt19937_64 rng(9);
  const auto in = parse_ideal("ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n");
  const auto gb = buchberger(in.generators).basis;
  const PommaretBasis h = expect_basis(pommaret_completion(gb.generators));
  for (int k = 0; k < 30; ++k) {
    const Polynomial f = oracle::random_homogeneous(rng, 3, 2 + k % 4, 5, 7);
    for (auto order : {ReductionOrder::leading_first, ReductionOrder::trailing_first}) {
      const InvolutiveReduction r = involutive_reduce(f, h, order);
      ASSERT_EQ(r.quotients.size(), h.elements.size());
      Polynomial sum = r.remainder;
      for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        sum += r.quotients[i] * h.elements[i].poly;
        for (const auto& m : r.quotients[i].terms()) {
          for (int v = 1; v < h.elements[i].cls; ++v) EXPECT_EQ(m.term[v - 1], 0);
        }
      }
      EXPECT_EQ(sum, f);
      for (const auto& m : r.remainder.terms()) EXPECT_FALSE(gb.leading_ideal().contains(m.term));
      // for a Pommaret basis the involutive normal form is the ordinary one
      EXPECT_EQ(r.remainder, normal_form(f, gb.generators));
    }
    EXPECT_EQ(involutive_normal_form(f, h), normal_form(f, gb.generators));
  }
}

TEST(Pommaret, NotQuasiStableIdeal) {
  // an ideal with the Lazard leading ideal, but without a pure power of x2
  const auto in = parse_ideal("ring: x1 x2 x3 x4\nx1*x2^3 - x3^4\nx1^5 - x2*x3^3*x4\nx1^4*x3 - x2^4*x4\n");
  const auto gb = buchberger(in.generators).basis;
  const auto c = pommaret_completion(gb.generators);
  EXPECT_TRUE(std::holds_alternative<NotQuasiStable>(c));
  const auto& w = std::get<NotQuasiStable>(c);
  EXPECT_FALSE(w.cap_reached);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_LT(w.witness->to, w.witness->from);
}

TEST(Pommaret, DepthAndRestriction) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 2; ++i) f.push_back(oracle::random_homogeneous(rng, 3, 2, 3, 5));
    TransformOptions o;
    o.seed = static_cast<std::uint64_t>(k);
    const PositionedIdeal p = transform_to_position(f, Position::quasi_stable, o);
    const PommaretBasis h = expect_basis(pommaret_completion(p.basis.generators));
    const int lambda = depth_from_pommaret(h);
    EXPECT_EQ(lambda, 3 - h.max_class);
    if (lambda == 0) continue;
    ++checked;
    const PommaretBasis r = restrict_basis(h, lambda);
    EXPECT_EQ(r.arity, 3 - lambda);
    EXPECT_EQ(reg_from_pommaret(r), reg_from_pommaret(h));
    EXPECT_EQ(r.elements.size(), h.elements.size());
    EXPECT_THROW(restrict_basis(h, lambda + 1), DomainError);
  }
  EXPECT_GT(checked, 0);
}
