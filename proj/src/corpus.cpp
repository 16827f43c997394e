#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "stablegb/error.hpp"
#include "stablegb/harness.hpp"

namespace stablegb {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polynomial random_form(std::mt19937_64& rng, int n, int degree, int terms, int coefficient_bound) {
  const std::vector<Term> basis = terms_of_degree(n, degree);
  for (;;) {
    std::vector<Monomial> monomials;
    for (int i = 0; i < terms; ++i) {
      int c = 0;
      while (c == 0) c = uniform(rng, -coefficient_bound, coefficient_bound);
      monomials.push_back({Rational(c), basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))]});
    }
    Polynomial f(n, std::move(monomials));
    if (!f.is_zero()) return f;
  }
}

void validate(const CorpusSpec& spec, bool allow_large) {
  auto range = [](int lo, int hi, int floor, const char* what) {
    if (lo < floor || hi < lo) throw UsageError(std::string("generate_corpus: invalid ") + what + " range");
  };
  range(spec.n_min, spec.n_max, 1, "n");
  range(spec.d_min, spec.d_max, 1, "d");
  range(spec.k_min, spec.k_max, 1, "k");
  if (spec.count < 0) throw UsageError("generate_corpus: negative count");
  if (spec.coefficient_bound < 1 || spec.max_terms < 1) throw UsageError("generate_corpus: invalid term shape");
  if (!allow_large && (spec.n_max > 4 || spec.d_max > 4)) {
    throw UsageError("generate_corpus: n and d are capped at 4 (pass allow_large to lift the guard)");
  }
}

}  // namespace

Corpus generate_corpus(const CorpusSpec& spec, bool allow_large) {
  validate(spec, allow_large);
  Corpus corpus;
  std::mt19937_64 master(spec.seed);
  const int max_draws = std::max(16, spec.count * 20);
  int draws = 0;
  while (static_cast<int>(corpus.members.size()) < spec.count) {
    if (++draws > max_draws) throw InconclusiveError("generate_corpus: too many draws failed to reach the target position");
    std::mt19937_64 rng(master());
    const int n = uniform(rng, spec.n_min, spec.n_max);
    const int k = uniform(rng, spec.k_min, spec.k_max);
    std::vector<Polynomial> original;
    for (int i = 0; i < k; ++i) {
      original.push_back(random_form(rng, n, uniform(rng, spec.d_min, spec.d_max), uniform(rng, 1, spec.max_terms),
                                     spec.coefficient_bound));
    }

    TransformOptions transform = spec.transform;
    transform.seed = rng();
    // Strongly stable targets come from generic (dense) coordinates, never the input ones.
    if (spec.target == Position::strongly_stable) transform.allow_identity = false;
    try {
      PositionedIdeal positioned = transform_to_position(original, spec.target, transform);
      CorpusMember m;
      m.id = std::string(position_name(spec.target)) + "-" + std::to_string(corpus.members.size());
      m.n = n;
      m.original = std::move(original);
      m.generators = std::move(positioned.generators);
      m.change = std::move(positioned.change);
      m.attempts = positioned.attempts;
      corpus.members.push_back(std::move(m));
    } catch (const InconclusiveError&) {
      ++corpus.discarded;
    }
  }
  return corpus;
}

std::vector<VerificationReport> verify_corpus(const Corpus& corpus, const VerifyOptions& options, int threads) {
  const std::size_t count = corpus.members.size();
  std::vector<VerificationReport> reports(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      VerifyOptions member_options = options;
      member_options.seed = options.seed + i;
      reports[i] = verify_theorems(corpus.members[i].id, corpus.members[i].generators, member_options);
    }
  };
  const int workers = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    work();
    return reports;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return reports;
}

}  // namespace stablegb
