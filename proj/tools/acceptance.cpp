// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "stablegb/bounds.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/harness.hpp"
#include "stablegb/pommaret.hpp"
#include "stablegb/stability.hpp"

using namespace stablegb;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool report(int criterion, const std::string& title, Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << criterion << " " << title << ":" << o.detail.str() << std::endl;
  return o.ok;
}

// Criteria 1 to 4 are the worked fixtures; each expectation is an exact value.
Outcome fixture_criterion(const FixtureSummary& s, const std::vector<std::string>& names) {
  Outcome o;
  int met = 0;
  for (const auto& name : names) {
    auto it = std::find_if(s.fixtures.begin(), s.fixtures.end(), [&](const FixtureResult& f) { return f.name == name; });
    if (it == s.fixtures.end()) {
      o.require(false, name + " missing");
      continue;
    }
    for (const auto& e : it->expectations) {
      if (e.ok) {
        ++met;
      } else {
        o.require(false, name + " " + e.what + ": expected " + e.expected + ", got " + e.actual);
      }
    }
  }
  o.detail << " " << met << " expectations met";
  return o;
}

BoundInputs generic(int n, int d, int dim) {
  BoundInputs in;
  in.n = n;
  in.d = d;
  in.dim = dim;
  return in;
}

std::string show(const BoundValue& v) { return v.to_string(); }

Outcome bound_table() {
  Outcome o;
  struct Row {
    Formula a, b;
    int n, d, dim;
    int printed;  // the direction of a relative to b stated in the table
  };
  const Row rows[] = {
      {Formula::hs_A, Formula::hs_C, 5, 3, 4, -1},
      {Formula::hs_A, Formula::mayr_ritscher, 5, 2, 4, -1},
      {Formula::hs_A, Formula::mayr_ritscher, 5, 4, 2, 1},
      {Formula::mayr_ritscher, Formula::hs_C, 5, 2, 3, -1},
      {Formula::hs_A, Formula::hs_C, 3, 5, 2, 1},
      {Formula::mayr_ritscher, Formula::hs_C, 4, 5, 1, 1},
  };
  int confirmed = 0;
  std::vector<std::string> discrepancies;
  for (const Row& r : rows) {
    const BoundValue a = bound(r.a, generic(r.n, r.d, r.dim));
    const BoundValue b = bound(r.b, generic(r.n, r.d, r.dim));
    o.require(a.exact.has_value() && b.exact.has_value(), "inexact value");
    const int c = compare(a, b);
    const char* rel = c < 0 ? "<" : (c > 0 ? ">" : "=");
    std::ostringstream line;
    line << formula_name(r.a) << "(" << r.n << "," << r.d << "," << r.dim << ")=" << show(a) << " " << rel << " "
         << formula_name(r.b) << "=" << show(b);
    if (c == r.printed) {
      ++confirmed;
    } else {
      discrepancies.push_back(line.str());
    }
  }
  o.detail << " " << confirmed << "/6 directions as printed;";
  for (const auto& d : discrepancies) o.detail << " discrepancy " << d << ";";
  // the two comparisons printed the other way round, with their exact values
  o.require(confirmed == 4, "four printed directions confirmed");
  o.require(show(bound(Formula::hs_A, generic(3, 5, 2))) == "50", "hs_A(3,5,2) = 50");
  o.require(show(bound(Formula::hs_C, generic(3, 5, 2))) == "81", "hs_C(3,5,2) = 81");
  o.require(show(bound(Formula::mayr_ritscher, generic(4, 5, 1))) == "135", "mayr_ritscher(4,5,1) = 135");
  o.require(show(bound(Formula::hs_C, generic(4, 5, 1))) == "137", "hs_C(4,5,1) = 137");
  return o;
}

Outcome corpus_suite(std::uint64_t seed, int count, int threads) {
  Outcome o;
  long checks = 0;
  long failures = 0;
  std::vector<int> dims;
  for (Position target : {Position::quasi_stable, Position::strongly_stable}) {
    CorpusSpec spec;
    spec.count = count / 2;
    spec.seed = seed;
    spec.target = target;
    const Corpus c = generate_corpus(spec);
    o.require(static_cast<int>(c.members.size()) == spec.count, "corpus size");
    for (const VerificationReport& r : verify_corpus(c, {.seed = seed}, threads)) {
      o.require(!r.incomplete, r.id + " incomplete: " + r.incomplete_reason);
      for (const auto& ch : r.checks) checks += ch.applicable;
      for (const TheoremCheck* bad : r.failures()) {
        ++failures;
        o.require(false, r.id + " " + bad->id + ": " + bad->lhs + " " + bad->relation + " " + bad->rhs);
      }
      if (r.strongly_stable) dims.push_back(r.dim);
    }
  }
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  o.detail << " " << count << " ideals, " << checks << " applicable checks, " << failures << " failures, strongly stable dims";
  for (int d : dims) o.detail << " " << d;
  return o;
}

MonomialIdeal from_exps(int n, const std::vector<oracle::Exponents>& raw) {
  std::vector<Term> terms;
  for (const auto& e : raw) terms.emplace_back(n, std::span<const int>(e));
  return MonomialIdeal(n, terms);
}

Outcome oracle_equivalences(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  constexpr int kTop = 8;

  int members = 0, non_members = 0;
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 2;
    std::vector<Polynomial> gens;
    for (int i = 0; i < 1 + k % 3; ++i) gens.push_back(oracle::random_homogeneous(rng, n, 1 + (k + i) % 3, 3, 5));
    const auto gb = buchberger(gens).basis.generators;
    for (int s = 1; s <= kTop; ++s) {
      Polynomial f = oracle::random_homogeneous(rng, n, s, 3, 5);
      if (k % 2 == 0) {
        // an element of the ideal, unless every multiplier degree is negative
        f = Polynomial(n);
        for (const auto& g : gens) {
          if (g.degree() <= s) f += oracle::random_homogeneous(rng, n, s - g.degree(), 2, 5) * g;
        }
      }
      const bool gb_says = normal_form(f, gb).is_zero();
      const bool la_says = oracle::in_ideal(f, gens);
      o.require(gb_says == la_says, "membership disagrees");
      (la_says ? members : non_members) += 1;
    }
  }
  o.require(members > 50 && non_members > 50, "both membership outcomes sampled");

  int partitions = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + k % 3;
    auto raw = oracle::random_monomial_gens(rng, n, 1 + k % 4, 4);
    raw.emplace_back(static_cast<std::size_t>(n), 0);
    raw.back()[0] = 1 + k % 3;
    const MonomialIdeal j = from_exps(n, raw);
    const PommaretCompletion c = monomial_pommaret_basis(j);
    const auto* h = std::get_if<PommaretBasis>(&c);
    o.require((h != nullptr) == oracle::quasi_stable(n, oracle::exps(j.generators()), kTop), "Pommaret basis exists iff quasi stable");
    if (h == nullptr) continue;
    ++partitions;
    const auto lts = oracle::exps(h->leading_terms());
    const auto min = oracle::exps(j.generators());
    for (int s = 0; s <= kTop; ++s) {
      for (const auto& t : oracle::monomials(n, s)) {
        int cones = 0;
        for (const auto& b : lts) cones += oracle::pommaret_divides(b, t);
        o.require(cones == (oracle::in_monomial_ideal(min, t) ? 1 : 0), "cone count");
      }
    }
  }
  o.require(partitions > 50, "enough quasi stable ideals");

  int agree = 0;
  for (int k = 0; k < 600; ++k) {
    const int n = 1 + k % 3;
    auto raw = oracle::random_monomial_gens(rng, n, 1 + static_cast<int>(rng() % 4), 4);
    if (k % 2 == 0) {
      raw.emplace_back(static_cast<std::size_t>(n), 0);
      raw.back()[0] = 1 + k % 3;
    }
    const MonomialIdeal j = from_exps(n, raw);
    const auto min = oracle::exps(j.generators());
    const bool same = is_strongly_stable(j) == oracle::strongly_stable(n, min, kTop) &&
                      is_stable(j) == oracle::stable(n, min, kTop) &&
                      is_quasi_stable(j) == oracle::quasi_stable(n, min, kTop);
    o.require(same, "stability predicate disagrees");
    agree += same;
  }
  o.detail << " membership " << members << "+" << non_members << ", cone partitions " << partitions
           << ", stability " << agree << "/600";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 1;
  int count = 200;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--seed", seed, "Seed for the corpus and the random samples")->capture_default_str();
  app.add_option("--count", count, "Corpus size, split between the two positions")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  const FixtureSummary fixtures = run_fixtures(seed);
  bool all = true;
  Outcome c1 = fixture_criterion(fixtures, {"green"});
  all &= report(1, "Green fixture", c1);
  Outcome c2 = fixture_criterion(fixtures, {"example4"});
  all &= report(2, "zero-dimensional example", c2);
  Outcome c3 = fixture_criterion(fixtures, {"remark4"});
  all &= report(3, "F-set remark ideal", c3);
  Outcome c4 = fixture_criterion(fixtures, {"lazard_t2", "lazard_t3", "lazard_t4"});
  all &= report(4, "Lazard family", c4);
  Outcome c5 = bound_table();
  all &= report(5, "bound table", c5);
  Outcome c6 = corpus_suite(seed, count, threads);
  all &= report(6, "corpus property suite", c6);
  Outcome c7 = oracle_equivalences(seed);
  all &= report(7, "oracle equivalences", c7);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "all criteria pass" : "some criteria fail") << " (" << secs << " s)" << std::endl;
  return all ? 0 : 1;
}
