// stablegb: Groebner bases, Pommaret bases, invariants and degree bounds for
// homogeneous polynomial ideals, plus the verification harness.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error, 3 resource cap.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <thread>

#include "report.hpp"
#include "stablegb/error.hpp"
#include "stablegb/transform.hpp"

namespace {

using namespace stablegb;
using cli::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResourceCap = 3;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string joined(const Json& array) {
  std::string out;
  for (const auto& x : array) out += (out.empty() ? "" : ", ") + x.get<std::string>();
  return out;
}

void print_polys(const char* title, std::span<const Polynomial> fs, const RingContext& ring) {
  std::cout << title << " (" << fs.size() << "):\n";
  for (const auto& f : fs) std::cout << "  " << format_polynomial(f, ring) << "\n";
}

void print_report(const VerificationReport& r) {
  std::cout << r.id << ": n=" << r.n << " d=" << r.d << " deg=" << r.deg << " reg=" << r.reg << " dim=" << r.dim
            << " depth=" << r.depth << " hilb=" << r.hilb;
  if (r.f_size) std::cout << " #F=" << *r.f_size;
  std::cout << " [" << (r.strongly_stable ? "strongly stable" : r.quasi_stable ? "quasi stable" : "not quasi stable")
            << "]\n";
  for (const auto& c : r.checks) {
    std::cout << "  " << std::left << std::setw(34) << c.id;
    if (c.applicable) {
      std::cout << (c.holds.value_or(false) ? "ok    " : "FAIL  ") << c.lhs << " " << c.relation << " " << c.rhs;
    } else {
      std::cout << "n/a   " << c.reason;
    }
    std::cout << "\n";
  }
  if (r.incomplete) std::cout << "  INCOMPLETE: " << r.incomplete_reason << "\n";
}

int cmd_gb(const Globals& g, const std::string& path, int cap, bool early_stop) {
  const IdealInput in = read_ideal_file(path);
  GroebnerOptions options;
  options.degree_cap = cap;
  options.early_stop_if_stable = early_stop;
  const GroebnerResult r = buchberger(in.generators, options);
  if (g.json) {
    emit(cli::groebner_json(r, in.ring));
    return kOk;
  }
  print_polys("reduced Groebner basis", r.basis.generators, in.ring);
  std::cout << "leading ideal: <" << joined(cli::monomial_ideal_json(r.basis.leading_ideal(), in.ring)) << ">\n"
            << "deg(I) = " << r.basis.max_degree << "\n";
  if (r.trace.early_stop_degree) std::cout << "early stop after degree " << *r.trace.early_stop_degree << "\n";
  return kOk;
}

int cmd_position(const Globals& g, const std::string& path) {
  const IdealInput in = read_ideal_file(path);
  const MonomialIdeal lt = buchberger(in.generators).basis.leading_ideal();
  const Json j = cli::position_json(lt, in.ring);
  if (g.json) {
    emit(j);
    return kOk;
  }
  std::cout << "leading ideal: <" << joined(j["leading_ideal"]) << ">\n";
  for (const char* key : {"quasi_stable", "stable", "strongly_stable", "noether_position"}) {
    std::cout << std::left << std::setw(18) << key << (j[key].get<bool>() ? "yes" : "no") << "\n";
  }
  std::cout << "dimension         " << j["dimension"] << "\n";
  if (!j["obstruction"].is_null()) {
    std::cout << "obstruction: " << j["obstruction"]["generator"].get<std::string>() << " needs x"
              << j["obstruction"]["from"] << " -> x" << j["obstruction"]["to"] << "\n";
  }
  return kOk;
}

int cmd_pommaret(const Globals& g, const std::string& path) {
  const IdealInput in = read_ideal_file(path);
  const GroebnerBasis gb = buchberger(in.generators).basis;
  const PommaretCompletion c = pommaret_completion(gb.generators);
  if (const auto* failure = std::get_if<NotQuasiStable>(&c)) {
    if (failure->cap_reached) throw ResourceCapError("Pommaret completion reached degree cap " + std::to_string(failure->cap));
    Json j{{"quasi_stable", false}};
    if (failure->witness) {
      j["obstruction"] = {{"generator", format_term(failure->witness->generator, in.ring)},
                          {"from", failure->witness->from},
                          {"to", failure->witness->to}};
    }
    if (g.json) {
      emit(j);
    } else {
      std::cout << "leading ideal is not quasi stable; no finite Pommaret basis";
      if (failure->witness) std::cout << " (obstruction at " << j["obstruction"]["generator"].get<std::string>() << ")";
      std::cout << "\nuse `transform` to move into quasi stable position first\n";
    }
    return kCheckFailed;
  }
  const PommaretBasis& h = std::get<PommaretBasis>(c);
  if (g.json) {
    Json j = cli::pommaret_json(h, in.ring);
    j["quasi_stable"] = true;
    emit(j);
    return kOk;
  }
  std::cout << "Pommaret basis (" << h.elements.size() << "):\n";
  for (const auto& e : h.elements) {
    std::cout << "  [cls " << e.cls << "] " << format_polynomial(e.poly, in.ring) << "\n";
  }
  std::cout << "reg = " << reg_from_pommaret(h) << ", depth = " << depth_from_pommaret(h) << "\n";
  return kOk;
}

int cmd_invariants(const Globals& g, const std::string& path, bool gin_check) {
  const IdealInput in = read_ideal_file(path);
  InvariantOptions options;
  options.transform.seed = g.seed;
  options.gin.seed = g.seed;
  options.gin_cross_check = gin_check;
  const IdealInvariants inv = compute_invariants(in.generators, options);
  const Json j = cli::invariants_json(inv);
  if (g.json) {
    emit(j);
    return kOk;
  }
  std::cout << "dimension " << inv.dim << "\ndepth     " << inv.depth << "\nreg       " << inv.reg << "\nhilb      "
            << inv.hilbert.hilb << "\nHS numerator " << j["hs_numerator"].dump() << " over (1-t)^" << inv.dim
            << "\nHF " << j["hf_table"].dump() << "\n";
  if (inv.gin_agrees) std::cout << "gin cross-check " << (*inv.gin_agrees ? "agrees" : "DISAGREES") << "\n";
  return inv.gin_agrees.value_or(true) ? kOk : kCheckFailed;
}

int cmd_gin(const Globals& g, const std::string& path, int trials) {
  const IdealInput in = read_ideal_file(path);
  GinOptions options;
  options.seed = g.seed;
  options.trials = trials;
  const MonomialIdeal j = gin(in.generators, options);
  if (g.json) {
    emit({{"gin", cli::monomial_ideal_json(j, in.ring)},
          {"strongly_stable", is_strongly_stable(j)},
          {"seed", g.seed},
          {"trials", trials}});
    return kOk;
  }
  std::cout << "gin(I) = <" << joined(cli::monomial_ideal_json(j, in.ring)) << ">\n"
            << "strongly stable: " << (is_strongly_stable(j) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_fset(const Globals& g, const std::string& path) {
  const IdealInput in = read_ideal_file(path);
  const GroebnerBasis gb = buchberger(in.generators).basis;
  int d = 0;
  for (const auto& f : in.generators) d = std::max(d, f.degree());
  const FSetReport report = f_set(gb.generators);
  const MoraCheck mora = lemma_mora_check(report, d);
  const Json j = cli::fset_json(report, mora, in.ring);
  if (g.json) {
    emit(j);
  } else {
    std::cout << "#F(I) = " << report.f().size() << ", #F~(I) = " << report.f_tilde().size() << "\n";
    for (const auto& level : j["levels"]) {
      std::cout << "  level in " << level["arity"] << " variables: dim " << level["dimension"] << ", deg "
                << level["degree"] << ", F = {" << joined(level["f"]) << "}\n";
    }
    if (mora.applicable) {
      std::cout << "lemma (a): " << mora.a_lhs << " <= " << mora.a_rhs << (mora.holds_a ? " holds" : " FAILS") << "\n"
                << "lemma (b): " << mora.b_lhs << " <= " << mora.b_rhs << (mora.holds_b ? " holds" : " FAILS") << "\n"
                << "variant (a): " << mora.variant_a_lhs << " <= " << mora.variant_a_rhs
                << (mora.variant_holds_a ? " holds" : " fails") << "\n"
                << "variant (b): " << mora.variant_b_lhs << " <= " << mora.variant_b_rhs
                << (mora.variant_holds_b ? " holds" : " fails") << "\n";
    }
  }
  return !mora.applicable || (mora.holds_a && mora.holds_b) ? kOk : kCheckFailed;
}

int cmd_bounds(const Globals& g, const BoundInputs& in) {
  const std::vector<BoundValue> table = compare_bounds(in);
  if (g.json) {
    Json rows = Json::array();
    for (const auto& b : table) rows.push_back(cli::bound_json(b));
    emit({{"n", in.n}, {"d", in.d}, {"dim", in.dim ? Json(*in.dim) : Json(nullptr)},
          {"depth", in.depth ? Json(*in.depth) : Json(nullptr)}, {"degrees", in.degrees}, {"bounds", rows}});
    return kOk;
  }
  for (const auto& b : table) {
    std::cout << std::left << std::setw(18) << formula_name(b.formula) << b.to_string() << "\n";
  }
  return kOk;
}

int cmd_transform(const Globals& g, const std::string& path, const std::string& target, int retries, int bound) {
  const IdealInput in = read_ideal_file(path);
  TransformOptions options;
  options.seed = g.seed;
  options.max_retries = retries;
  options.coefficient_bound = bound;
  const Position p = target == "strong" ? Position::strongly_stable : Position::quasi_stable;
  if (p == Position::strongly_stable) options.allow_identity = false;
  const PositionedIdeal r = transform_to_position(in.generators, p, options);
  Json matrix = Json::array();
  for (int i = 0; i < r.change.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < r.change.n(); ++j) row.push_back(format_rational(r.change(i, j)));
    matrix.push_back(row);
  }
  if (g.json) {
    emit({{"target", std::string(position_name(p))},
          {"attempts", r.attempts},
          {"change", matrix},
          {"generators", cli::polys_json(r.generators, in.ring)},
          {"leading_ideal", cli::monomial_ideal_json(r.basis.leading_ideal(), in.ring)}});
    return kOk;
  }
  std::cout << "target " << position_name(p) << " reached after " << r.attempts << " random change(s)\n"
            << "change " << matrix.dump() << "\n";
  print_polys("transformed generators", r.generators, in.ring);
  std::cout << "leading ideal: <" << joined(cli::monomial_ideal_json(r.basis.leading_ideal(), in.ring)) << ">\n";
  return kOk;
}

struct CorpusArgs {
  bool corpus = false;
  int count = 100;
  int n_max = 4;
  int d_max = 4;
  std::string target = "both";
  int threads = 0;
  bool allow_large = false;
};

int cmd_verify(const Globals& g, const std::string& path, const CorpusArgs& a) {
  VerifyOptions options;
  options.seed = g.seed;
  if (!a.corpus) {
    if (path.empty()) throw UsageError("verify: give an ideal file or --corpus");
    const IdealInput in = read_ideal_file(path);
    const VerificationReport r = verify_theorems(path, in.generators, options);
    g.json ? emit(cli::report_json(r)) : print_report(r);
    if (r.incomplete) return kResourceCap;
    return r.passed() ? kOk : kCheckFailed;
  }
  if (!path.empty()) throw UsageError("verify: --corpus takes no ideal file");
  std::vector<Position> targets;
  if (a.target == "both" || a.target == "quasi") targets.push_back(Position::quasi_stable);
  if (a.target == "both" || a.target == "strong") targets.push_back(Position::strongly_stable);
  const int threads = a.threads > 0 ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  Json all = Json::array();
  int failed = 0;
  int incomplete = 0;
  int total = 0;
  for (Position p : targets) {
    CorpusSpec spec;
    spec.count = a.count;
    spec.seed = g.seed;
    spec.target = p;
    spec.n_max = a.n_max;
    spec.d_max = a.d_max;
    spec.n_min = std::min(spec.n_min, a.n_max);
    spec.d_min = std::min(spec.d_min, a.d_max);
    const Corpus corpus = generate_corpus(spec, a.allow_large);
    const auto reports = verify_corpus(corpus, options, threads);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      ++total;
      if (r.incomplete) ++incomplete;
      else if (!r.passed()) ++failed;
      if (g.json) {
        Json j = cli::report_json(r);
        j["generators"] = cli::polys_json(corpus.members[i].generators, RingContext(corpus.members[i].n));
        all.push_back(std::move(j));
      } else if (!r.passed()) {
        print_polys(r.id.c_str(), corpus.members[i].generators, RingContext(corpus.members[i].n));
        print_report(r);
      }
    }
    if (!g.json) {
      std::cout << position_name(p) << ": " << reports.size() << " ideals, " << corpus.discarded
                << " redrawn during generation\n";
    }
  }
  if (g.json) {
    emit({{"seed", g.seed}, {"total", total}, {"failed", failed}, {"incomplete", incomplete}, {"reports", all}});
  } else {
    std::cout << total << " verified, " << failed << " failed, " << incomplete << " incomplete\n";
  }
  if (failed > 0) return kCheckFailed;
  return incomplete > 0 ? kResourceCap : kOk;
}

int cmd_fixtures(const Globals& g) {
  const FixtureSummary s = run_fixtures(g.seed);
  if (g.json) {
    emit(cli::fixtures_json(s));
  } else {
    for (const auto& f : s.fixtures) {
      std::cout << (f.ok() ? "ok   " : "FAIL ") << f.name << "\n";
      for (const auto& e : f.expectations) {
        std::cout << "       " << (e.ok ? "ok   " : "FAIL ") << e.what << ": " << e.actual;
        if (!e.ok) std::cout << " (expected " << e.expected << ")";
        std::cout << "\n";
      }
    }
  }
  return s.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner and Pommaret bases, regularity and degree bounds for homogeneous ideals"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();

  std::string path;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", path, "Ideal file (first line: ring: x1 x2 ...)")->required()->check(CLI::ExistingFile);
    return sub;
  };

  int cap = 64;
  bool early_stop = false;
  auto* gb = with_file(app.add_subcommand("gb", "Reduced degrevlex Groebner basis"));
  gb->add_option("--degree-cap", cap, "Abort above this degree")->capture_default_str()->check(CLI::PositiveNumber);
  gb->add_flag("--early-stop", early_stop, "Stop once the leading ideal is strongly stable and a degree adds nothing");

  auto* pommaret = with_file(app.add_subcommand("pommaret", "Pommaret basis (needs quasi stable position)"));
  auto* position = with_file(app.add_subcommand("position", "Stability of the leading ideal"));

  bool gin_check = false;
  auto* invariants = with_file(app.add_subcommand("invariants", "dim, depth, reg, Hilbert data"));
  invariants->add_flag("--gin-check", gin_check, "Cross-check reg against gin");

  int trials = 2;
  auto* gin_cmd = with_file(app.add_subcommand("gin", "Generic initial ideal (randomized)"));
  gin_cmd->add_option("--trials", trials, "Independent changes that must agree")->capture_default_str()->check(CLI::Range(2, 64));

  auto* fset = with_file(app.add_subcommand("fset", "F-sets and the lemma on consecutive restrictions"));

  BoundInputs bin;
  int bn = 0;
  int bd = 0;
  std::optional<int> bdim;
  std::optional<int> bdepth;
  std::vector<int> bdegrees;
  auto* bounds = app.add_subcommand("bounds", "Table of degree and regularity bounds");
  bounds->add_option("--n", bn, "Number of variables")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--d", bd, "Maximal generator degree")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--dim", bdim, "Krull dimension D")->check(CLI::NonNegativeNumber);
  bounds->add_option("--depth", bdepth, "Depth")->check(CLI::NonNegativeNumber);
  bounds->add_option("--degrees", bdegrees, "Generator degrees")->delimiter(',')->check(CLI::PositiveNumber);

  std::string target = "quasi";
  int retries = 8;
  int coeff = 10;
  auto* transform = with_file(app.add_subcommand("transform", "Random change into quasi or strongly stable position"));
  transform->add_option("--target", target, "quasi or strong")->capture_default_str()->check(CLI::IsMember({"quasi", "strong"}));
  transform->add_option("--retries", retries, "Random changes to try")->capture_default_str()->check(CLI::PositiveNumber);
  transform->add_option("--bound", coeff, "Matrix entries lie in [-bound, bound]")->capture_default_str()->check(CLI::PositiveNumber);

  CorpusArgs corpus;
  auto* verify = app.add_subcommand("verify", "Check every applicable theorem on an ideal or a seeded corpus");
  verify->add_option("file", path, "Ideal file")->check(CLI::ExistingFile);
  verify->add_flag("--corpus", corpus.corpus, "Verify a generated corpus instead of a file");
  verify->add_option("--count", corpus.count, "Ideals per target position")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", corpus.n_max, "Maximal number of variables")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--d-max", corpus.d_max, "Maximal generator degree")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--target", corpus.target, "quasi, strong or both")->capture_default_str()->check(CLI::IsMember({"quasi", "strong", "both"}));
  verify->add_option("--threads", corpus.threads, "Worker threads (0: all cores)")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_flag("--allow-large", corpus.allow_large, "Lift the n <= 4, d <= 4 guard");

  auto* fixtures = app.add_subcommand("fixtures", "Run the worked-example fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gb->parsed()) return cmd_gb(g, path, cap, early_stop);
    if (pommaret->parsed()) return cmd_pommaret(g, path);
    if (position->parsed()) return cmd_position(g, path);
    if (invariants->parsed()) return cmd_invariants(g, path, gin_check);
    if (gin_cmd->parsed()) return cmd_gin(g, path, trials);
    if (fset->parsed()) return cmd_fset(g, path);
    if (bounds->parsed()) {
      bin.n = bn;
      bin.d = bd;
      bin.dim = bdim;
      bin.depth = bdepth;
      bin.degrees = bdegrees;
      return cmd_bounds(g, bin);
    }
    if (transform->parsed()) return cmd_transform(g, path, target, retries, coeff);
    if (verify->parsed()) return cmd_verify(g, path, corpus);
    if (fixtures->parsed()) return cmd_fixtures(g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kResourceCap;
  }
  return kUsage;
}
