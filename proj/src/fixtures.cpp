#include <algorithm>
#include <sstream>

#include "stablegb/bounds.hpp"
#include "stablegb/error.hpp"
#include "stablegb/fset.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/harness.hpp"
#include "stablegb/invariants.hpp"
#include "stablegb/stability.hpp"

namespace stablegb {

namespace {

std::string join_terms(std::span<const Term> terms, const RingContext& ring) {
  std::string out = "<";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_term(terms[i], ring);
  }
  return out + ">";
}

std::string show(const MonomialIdeal& j, const RingContext& ring) { return join_terms(j.generators(), ring); }

MonomialIdeal monomials(const RingContext& ring, std::initializer_list<const char*> terms) {
  std::vector<Term> out;
  for (const char* t : terms) out.push_back(parse_polynomial(t, ring).lt());
  return MonomialIdeal(ring.n(), std::move(out));
}

class Expect {
 public:
  explicit Expect(FixtureResult& result) : result_(result) {}

  void equal(std::string what, const std::string& expected, const std::string& actual) {
    result_.expectations.push_back({std::move(what), expected, actual, expected == actual});
  }
  void equal(std::string what, long expected, long actual) {
    equal(std::move(what), std::to_string(expected), std::to_string(actual));
  }
  void truth(std::string what, bool expected, bool actual) {
    equal(std::move(what), expected ? "true" : "false", actual ? "true" : "false");
  }
  void check_passed(const VerificationReport& report) {
    std::string failed;
    for (const TheoremCheck* c : report.failures()) failed += (failed.empty() ? "" : ",") + c->id;
    if (report.incomplete) failed += " incomplete: " + report.incomplete_reason;
    equal("every applicable check holds", "no failures", failed.empty() ? "no failures" : "failed: " + failed);
  }
  void skipped(const VerificationReport& report, const std::string& id) {
    auto it = std::find_if(report.checks.begin(), report.checks.end(),
                           [&](const TheoremCheck& c) { return c.id == id; });
    const std::string actual =
        it == report.checks.end() ? "missing" : (it->applicable ? "applicable" : "not applicable: " + it->reason);
    result_.expectations.push_back({id + " not applicable", "not applicable with a reason", actual,
                                    it != report.checks.end() && !it->applicable && !it->reason.empty()});
  }

 private:
  FixtureResult& result_;
};

const char* const kGreen = "# Green's example\nring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n";
const char* const kExample4 = "ring: x1 x2\nx1^2\nx1*x2 + x2^2\n";
const char* const kRemark4 = "ring: x1 x2\nx1^2\nx2^11*x1\n";

FixtureResult green(std::uint64_t seed) {
  FixtureResult r{"green", {}, std::nullopt};
  Expect expect(r);
  const IdealInput in = parse_ideal(kGreen);
  const MonomialIdeal lt = buchberger(in.generators).basis.leading_ideal();
  expect.equal("LT(I)", show(monomials(in.ring, {"x1*x3", "x1*x2", "x1^2", "x2^2*x3", "x2^3"}), in.ring),
               show(lt, in.ring));
  expect.truth("LT(I) strongly stable", true, is_strongly_stable(lt));
  GinOptions g;
  g.seed = seed;
  const MonomialIdeal generic = gin(in.generators, g);
  expect.equal("gin(I)", show(monomials(in.ring, {"x2^2", "x1*x2", "x1^2", "x1*x3^2"}), in.ring),
               show(generic, in.ring));
  expect.truth("gin(I) strongly stable", true, is_strongly_stable(generic));
  expect.truth("gin(I) != LT(I)", true, generic != lt);
  r.report = verify_theorems("green", in.generators, {.seed = seed});
  expect.check_passed(*r.report);
  return r;
}

FixtureResult example4(std::uint64_t seed) {
  FixtureResult r{"example4", {}, std::nullopt};
  Expect expect(r);
  const IdealInput in = parse_ideal(kExample4);
  GinOptions g;
  g.seed = seed;
  expect.equal("gin(I)", show(monomials(in.ring, {"x1*x2", "x1^2", "x2^3"}), in.ring),
               show(gin(in.generators, g), in.ring));
  const GroebnerBasis gb = buchberger(in.generators).basis;
  const FSetReport f = f_set(gb.generators);
  const BoundInputs bi{2, 2, 0, 0, {2, 2}};
  expect.equal("#F(I)", 4, static_cast<long>(f.f().size()));
  expect.equal("fset bound", "4", bound(Formula::fset_bound, bi).to_string());
  expect.equal("deg(I)", 3, gb.max_degree);
  expect.equal("hs_A(2,2,0)", "4", bound(Formula::hs_A, bi).to_string());
  const BoundValue mac = bound(Formula::macaulay_0dim, bi);
  expect.equal("macaulay_0dim(2,2)", "3", mac.to_string());
  expect.truth("macaulay bound is attained", true, mac.value && *mac.value == gb.max_degree);
  r.report = verify_theorems("example4", in.generators, {.seed = seed});
  expect.check_passed(*r.report);
  return r;
}

FixtureResult remark4(std::uint64_t seed) {
  FixtureResult r{"remark4", {}, std::nullopt};
  Expect expect(r);
  const IdealInput in = parse_ideal(kRemark4);
  const GroebnerBasis gb = buchberger(in.generators).basis;
  expect.equal("deg(I)", 12, gb.max_degree);
  const FSetReport f = f_set(gb.generators);
  const RingContext lower = in.ring.truncated(1);
  expect.equal("F(I_2)", "<1, x1>", f.levels.size() > 1 ? join_terms(f.levels[1].f, lower) : "missing");
  expect.equal("#F~(I)", 23, static_cast<long>(f.f_tilde().size()));
  const MoraCheck m = lemma_mora_check(f, 12);
  expect.equal("variant (a)", "12 <= 4 fails", std::to_string(m.variant_a_lhs) + " <= " +
                                                    std::to_string(m.variant_a_rhs) +
                                                    (m.variant_holds_a ? " holds" : " fails"));
  expect.equal("variant (b)", "23 <= 4 fails", std::to_string(m.variant_b_lhs) + " <= " +
                                                    std::to_string(m.variant_b_rhs) +
                                                    (m.variant_holds_b ? " holds" : " fails"));
  expect.truth("corrected (a)", true, m.holds_a);
  expect.truth("corrected (b)", true, m.holds_b);
  r.report = verify_theorems("remark4", in.generators, {.seed = seed});
  expect.check_passed(*r.report);
  return r;
}

Polynomial pattern_element(const RingContext& ring, int t) {
  return parse_polynomial("x3^" + std::to_string(t * t + 1) + " - x2^" + std::to_string(t * t) + "*x4", ring);
}

FixtureResult lazard(int t, std::uint64_t seed) {
  FixtureResult r{"lazard_t" + std::to_string(t), {}, std::nullopt};
  Expect expect(r);
  const IdealInput in = parse_ideal(lazard_example_source(t));
  const GroebnerBasis gb = buchberger(in.generators).basis;
  const Polynomial pattern = pattern_element(in.ring, t);
  const bool found = std::find(gb.generators.begin(), gb.generators.end(), pattern) != gb.generators.end();
  expect.equal("pattern element in reduced GB", format_polynomial(pattern, in.ring),
               found ? format_polynomial(pattern, in.ring) : "absent");
  if (t != 4) return r;

  const MonomialIdeal lt = gb.leading_ideal();
  expect.equal("LT(I)",
               show(monomials(in.ring, {"x1*x2^3", "x1^4*x3", "x1^5", "x1^3*x3^5", "x1^2*x3^9", "x1*x3^13", "x3^17"}),
                    in.ring),
               show(lt, in.ring));
  expect.equal("deg(I)", 17, gb.max_degree);
  int degree_sum = -3;
  for (const auto& f : in.generators) degree_sum += f.degree();
  expect.equal("d1+d2+d3-3", 11, degree_sum);
  expect.truth("deg(I) > d1+d2+d3-3", true, gb.max_degree > degree_sum);
  expect.equal("dim(I)", 2, dimension(lt));

  const RingContext lower = in.ring.truncated(1);
  const std::vector<Polynomial> restricted = restrict_last(in.generators, 1);
  const MonomialIdeal lt_restricted = buchberger(restricted).basis.leading_ideal();
  expect.equal("dim(I')", 1, dimension(lt_restricted));
  expect.truth("I' quasi stable", false, is_quasi_stable(lt_restricted));
  const bool x2_power = std::any_of(lt_restricted.generators().begin(), lt_restricted.generators().end(),
                                    [](const Term& g) { return g.degree() == g[1]; });
  expect.truth("pure power of x2 in LT(I')", false, x2_power);
  expect.equal("LT(I') terms", show(lt, in.ring), show(lt_restricted, lower));

  VerifyOptions options{.seed = seed};
  r.report = verify_theorems("lazard_t4", in.generators, options);
  expect.check_passed(*r.report);
  expect.skipped(*r.report, "laz3");
  const VerificationReport restricted_report = verify_theorems("lazard_t4_restricted", restricted, options);
  expect.skipped(restricted_report, "laz3");
  return r;
}

}  // namespace

bool FixtureResult::ok() const {
  return std::all_of(expectations.begin(), expectations.end(), [](const FixtureExpectation& e) { return e.ok; });
}

bool FixtureSummary::ok() const {
  return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return f.ok(); });
}

std::string lazard_example_source(int t) {
  if (t < 2) throw UsageError("lazard_example_source: needs t >= 2");
  const std::string s = std::to_string(t);
  std::ostringstream out;
  out << "# Mora's family, t = " << t << "\n"
      << "ring: x1 x2 x3 x4\n"
      << "x1*x2^" << t - 1 << " - x3^" << s << "\n"
      << "x1^" << t + 1 << " - x2*x3^" << t - 1 << "*x4\n"
      << "x1^" << s << "*x3 - x2^" << s << "*x4\n";
  return out.str();
}

std::vector<std::pair<std::string, std::string>> fixture_sources() {
  return {{"green", kGreen},
          {"example4", kExample4},
          {"remark4", kRemark4},
          {"lazard_t2", lazard_example_source(2)},
          {"lazard_t3", lazard_example_source(3)},
          {"lazard_t4", lazard_example_source(4)}};
}

IdealInput fixture(const std::string& name) {
  for (const auto& [key, text] : fixture_sources()) {
    if (key == name) return parse_ideal(text);
  }
  throw UsageError("unknown fixture: " + name);
}

FixtureSummary run_fixtures(std::uint64_t seed) {
  FixtureSummary s;
  s.fixtures.push_back(green(seed));
  s.fixtures.push_back(example4(seed));
  s.fixtures.push_back(remark4(seed));
  for (int t : {2, 3, 4}) s.fixtures.push_back(lazard(t, seed));
  return s;
}

}  // namespace stablegb
