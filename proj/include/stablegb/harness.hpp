#pragma once

// Corpus generation, per-theorem verification and the worked-example fixtures.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stablegb/parse.hpp"
#include "stablegb/ring.hpp"
#include "stablegb/transform.hpp"

namespace stablegb {

struct TheoremCheck {
  std::string id;
  bool applicable = false;
  /// Why the hypotheses fail; empty when applicable.
  std::string reason;
  std::string lhs;
  std::string relation;
  std::string rhs;
  /// Set only for applicable checks.
  std::optional<bool> holds;
};

struct VerificationReport {
  std::string id;
  std::uint64_t seed = 0;
  int n = 0;
  int d = 0;
  std::vector<int> degrees;

  bool quasi_stable = false;
  bool stable = false;
  bool strongly_stable = false;
  bool noether = false;

  int deg = 0;
  int reg = 0;
  int dim = 0;
  int depth = 0;
  int hilb = 0;
  std::optional<long> f_size;

  std::vector<TheoremCheck> checks;
  bool incomplete = false;
  std::string incomplete_reason;

  /// Every applicable check holds and the report is complete.
  bool passed() const;
  std::vector<const TheoremCheck*> failures() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Recompute dim, depth, reg and HF after a random change.
  bool invariance = true;
  /// Compare HF with linear algebra on the degree-s slices up to this degree.
  int macaulay_max_degree = 8;
  /// Coefficient range for the random changes made during verification.
  int coefficient_bound = 5;
};

VerificationReport verify_theorems(std::string id, std::span<const Polynomial> generators,
                                   const VerifyOptions& options = {});

/// dim_k (P/<generators>)_s by exact linear algebra on the degree-s slice.
BigInt macaulay_hilbert_function(std::span<const Polynomial> generators, int s);

struct CorpusSpec {
  int n_min = 2;
  int n_max = 4;
  int d_min = 1;
  int d_max = 4;
  int k_min = 1;
  int k_max = 4;
  int count = 100;
  std::uint64_t seed = 0;
  Position target = Position::quasi_stable;
  /// Range of the random integer coefficients of the generators.
  int coefficient_bound = 5;
  /// Maximal number of terms per generator.
  int max_terms = 3;
  TransformOptions transform;
};

struct CorpusMember {
  std::string id;
  int n = 0;
  std::vector<Polynomial> original;
  /// The ideal in target position (the one that gets verified).
  std::vector<Polynomial> generators;
  LinearChange change = LinearChange::identity(1);
  int attempts = 0;
};

struct Corpus {
  std::vector<CorpusMember> members;
  /// Draws that never reached the target position and were replaced.
  int discarded = 0;
};

/// Throws UsageError for ranges outside n <= 4, d <= 4 unless `allow_large`.
Corpus generate_corpus(const CorpusSpec& spec, bool allow_large = false);

/// Verifies members on up to `threads` workers; results keep the member order.
std::vector<VerificationReport> verify_corpus(const Corpus& corpus, const VerifyOptions& options, int threads = 1);

struct FixtureExpectation {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct FixtureResult {
  std::string name;
  std::vector<FixtureExpectation> expectations;
  std::optional<VerificationReport> report;
  bool ok() const;
};

struct FixtureSummary {
  std::vector<FixtureResult> fixtures;
  bool ok() const;
};

/// The worked examples as ideal files: green, example4, remark4, lazard_t2, lazard_t3, lazard_t4.
std::vector<std::pair<std::string, std::string>> fixture_sources();
IdealInput fixture(const std::string& name);
std::string lazard_example_source(int t);

FixtureSummary run_fixtures(std::uint64_t seed = 0);

}  // namespace stablegb
