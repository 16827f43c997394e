#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "report.hpp"
#include "stablegb/error.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/harness.hpp"
#include "stablegb/invariants.hpp"

using namespace stablegb;

namespace {

const TheoremCheck* find_check(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void expect_well_formed(const VerificationReport& r) {
  std::set<std::string> ids;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
    if (c.applicable) {
      EXPECT_TRUE(c.reason.empty()) << c.id;
      EXPECT_TRUE(c.holds.has_value()) << c.id;
    } else {
      EXPECT_FALSE(c.reason.empty()) << c.id;
      EXPECT_FALSE(c.holds.has_value()) << c.id;
    }
  }
}

CorpusSpec small_spec(Position target, std::uint64_t seed, int count) {
  CorpusSpec spec;
  spec.count = count;
  spec.seed = seed;
  spec.target = target;
  return spec;
}

}  // namespace

TEST(Transform, IdentityWhenAlreadyPositioned) {
  const auto in = fixture("example4");
  TransformOptions o;
  const PositionedIdeal p = transform_to_position(in.generators, Position::quasi_stable, o);
  EXPECT_EQ(p.attempts, 0);
  EXPECT_TRUE(p.change.is_identity());
}

TEST(Transform, ProductOfVariablesBecomesQuasiStable) {
  const RingContext r(2);
  const std::vector<Polynomial> f{parse_polynomial("x1*x2", r)};
  EXPECT_FALSE(is_quasi_stable(buchberger(f).basis.leading_ideal()));
  const PositionedIdeal p = transform_to_position(f, Position::quasi_stable);
  EXPECT_GE(p.attempts, 1);
  EXPECT_TRUE(is_quasi_stable(p.basis.leading_ideal()));
  // the transformed ideal is the image of the original one
  for (const auto& g : f) EXPECT_TRUE(oracle::in_ideal(apply_linear_change(p.change, g), p.generators));
}

TEST(Transform, GreenReachesItsGenericInitialIdeal) {
  TransformOptions o;
  o.allow_identity = false;
  o.seed = 3;
  const PositionedIdeal p = transform_to_position(fixture("green").generators, Position::strongly_stable, o);
  EXPECT_TRUE(is_strongly_stable(p.basis.leading_ideal()));
  GinOptions g;
  g.seed = 3;
  EXPECT_EQ(p.basis.leading_ideal(), gin(fixture("green").generators, g));
}

TEST(Transform, GivesUpWithInconclusive) {
  TransformOptions o;
  o.max_retries = 0;
  o.allow_identity = true;
  const RingContext r(2);
  EXPECT_THROW(transform_to_position(std::vector<Polynomial>{parse_polynomial("x1*x2", r)}, Position::quasi_stable, o),
               InconclusiveError);
}

TEST(Corpus, EmptyAndGuards) {
  EXPECT_TRUE(generate_corpus(small_spec(Position::quasi_stable, 1, 0)).members.empty());
  CorpusSpec big = small_spec(Position::quasi_stable, 1, 1);
  big.n_max = 5;
  EXPECT_THROW(generate_corpus(big), UsageError);
  big.n_max = 4;
  big.d_max = 6;
  EXPECT_THROW(generate_corpus(big), UsageError);
  EXPECT_NO_THROW(generate_corpus(big, true));
  CorpusSpec backwards = small_spec(Position::quasi_stable, 1, 1);
  backwards.n_min = 4;
  backwards.n_max = 2;
  EXPECT_THROW(generate_corpus(backwards), UsageError);
}

TEST(Corpus, DeterministicAndPositioned) {
  for (Position target : {Position::quasi_stable, Position::strongly_stable}) {
    const CorpusSpec spec = small_spec(target, 11, 25);
    const Corpus a = generate_corpus(spec);
    const Corpus b = generate_corpus(spec);
    ASSERT_EQ(a.members.size(), 25u);
    ASSERT_EQ(b.members.size(), 25u);
    for (std::size_t i = 0; i < a.members.size(); ++i) {
      const CorpusMember& m = a.members[i];
      EXPECT_EQ(m.generators, b.members[i].generators);
      EXPECT_EQ(m.original, b.members[i].original);
      EXPECT_GE(m.n, spec.n_min);
      EXPECT_LE(m.n, spec.n_max);
      EXPECT_GE(m.original.size(), static_cast<std::size_t>(spec.k_min));
      EXPECT_LE(m.original.size(), static_cast<std::size_t>(spec.k_max));
      for (const auto& f : m.original) {
        EXPECT_TRUE(f.is_homogeneous());
        EXPECT_GE(f.degree(), spec.d_min);
        EXPECT_LE(f.degree(), spec.d_max);
        EXPECT_TRUE(oracle::in_ideal(apply_linear_change(m.change, f), m.generators));
      }
      const MonomialIdeal lt = buchberger(m.generators).basis.leading_ideal();
      EXPECT_FALSE(lt.is_unit());
      EXPECT_TRUE(satisfies(target, lt)) << m.id;
      if (target == Position::strongly_stable) {
        EXPECT_GE(m.attempts, 1);
        EXPECT_FALSE(m.change.is_identity());
      }
    }
    EXPECT_NE(a.members.front().generators, generate_corpus(small_spec(target, 12, 1)).members.front().generators);
  }
}

TEST(Verify, KnownExampleReport) {
  const VerificationReport r = verify_theorems("example4", fixture("example4").generators);
  expect_well_formed(r);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.deg, 3);
  EXPECT_EQ(r.reg, 3);
  EXPECT_EQ(r.dim, 0);
  ASSERT_TRUE(r.f_size.has_value());
  EXPECT_EQ(*r.f_size, 4);
  const TheoremCheck* deg = find_check(r, "mainthm1.deg");
  ASSERT_NE(deg, nullptr);
  EXPECT_TRUE(deg->applicable);
  EXPECT_EQ(deg->lhs, "3");
  EXPECT_EQ(deg->rhs, "4");
  const TheoremCheck* fs = find_check(r, "mainthm1.fset");
  ASSERT_NE(fs, nullptr);
  EXPECT_EQ(fs->lhs, "4");
  EXPECT_EQ(fs->rhs, "4");
}

TEST(Verify, LazardIdealAndItsVariant) {
  const VerificationReport r = verify_theorems("lazard_t4", fixture("lazard_t4").generators);
  expect_well_formed(r);
  EXPECT_EQ(r.deg, 17);
  EXPECT_EQ(r.dim, 2);
  const TheoremCheck* laz = find_check(r, "laz3");
  ASSERT_NE(laz, nullptr);
  EXPECT_FALSE(laz->applicable);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, MacaulayHilbertFunctionMatchesOracle) {
  const auto f = fixture("green").generators;
  for (int s = 0; s <= 6; ++s) {
    const long total = static_cast<long>(terms_of_degree(3, s).size());
    EXPECT_EQ(macaulay_hilbert_function(f, s), BigInt(total - static_cast<long>(oracle::ideal_slice_dimension(f, s))));
  }
}

TEST(Verify, CorpusPassesAndCoversDimensions) {
  std::set<int> dims;
  for (Position target : {Position::quasi_stable, Position::strongly_stable}) {
    const Corpus c = generate_corpus(small_spec(target, 5, 40));
    const auto reports = verify_corpus(c, {.seed = 5}, 4);
    ASSERT_EQ(reports.size(), c.members.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const VerificationReport& r = reports[i];
      EXPECT_EQ(r.id, c.members[i].id);
      expect_well_formed(r);
      EXPECT_FALSE(r.incomplete) << r.id << ": " << r.incomplete_reason;
      for (const TheoremCheck* bad : r.failures()) ADD_FAILURE() << r.id << " " << bad->id << ": " << bad->lhs << " " << bad->relation << " " << bad->rhs;
      EXPECT_LE(r.deg, r.reg);
      if (r.strongly_stable) {
        EXPECT_EQ(r.deg, r.reg);
        dims.insert(r.dim);
        EXPECT_TRUE(find_check(r, "mainthm1.deg")->applicable);
      }
    }
  }
  // the main degree bound is exercised in more than one dimension
  EXPECT_GE(dims.size(), 3u);
}

TEST(Verify, ThreadCountDoesNotChangeReports) {
  const Corpus c = generate_corpus(small_spec(Position::strongly_stable, 8, 12));
  const auto one = verify_corpus(c, {.seed = 2}, 1);
  const auto many = verify_corpus(c, {.seed = 2}, 6);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(cli::report_json(one[i]).dump(), cli::report_json(many[i]).dump());
  }
}

TEST(Fixtures, AllExpectationsMet) {
  const FixtureSummary s = run_fixtures(0);
  EXPECT_EQ(s.fixtures.size(), 6u);
  for (const auto& f : s.fixtures) {
    for (const auto& e : f.expectations) EXPECT_TRUE(e.ok) << f.name << ": " << e.what << " expected " << e.expected << " got " << e.actual;
    if (f.report) expect_well_formed(*f.report);
  }
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(cli::fixtures_json(s).dump(), cli::fixtures_json(run_fixtures(0)).dump());
}

TEST(Fixtures, SourcesParse) {
  const auto sources = fixture_sources();
  EXPECT_EQ(sources.size(), 6u);
  for (const auto& [name, text] : sources) {
    const IdealInput in = fixture(name);
    EXPECT_FALSE(in.generators.empty()) << name;
    EXPECT_EQ(parse_ideal(text).generators, in.generators);
  }
  EXPECT_THROW(fixture("nope"), UsageError);
  for (int t = 2; t <= 4; ++t) {
    const auto in = parse_ideal(lazard_example_source(t));
    const auto gb = buchberger(in.generators).basis;
    // x3^(t^2+1) - x2^(t^2) x4 is in the reduced basis
    std::vector<int> top(4, 0);
    top[2] = t * t + 1;
    EXPECT_TRUE(std::any_of(gb.generators.begin(), gb.generators.end(),
                            [&](const Polynomial& g) { return g.lt() == Term(4, std::span<const int>(top)); }));
  }
}
