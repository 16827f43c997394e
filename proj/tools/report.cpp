#include "report.hpp"

namespace stablegb::cli {

namespace {

Json integers(std::span<const BigInt> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Json rationals(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(format_rational(x));
  return out;
}

}  // namespace

Json terms_json(std::span<const Term> terms, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(format_term(t, ring));
  return out;
}

Json polys_json(std::span<const Polynomial> polys, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(format_polynomial(f, ring));
  return out;
}

Json monomial_ideal_json(const MonomialIdeal& j, const RingContext& ring) { return terms_json(j.generators(), ring); }

Json groebner_json(const GroebnerResult& r, const RingContext& ring) {
  Json steps = Json::array();
  for (const auto& s : r.trace.steps) {
    steps.push_back({{"degree", s.degree}, {"pairs", s.pairs}, {"inputs", s.inputs}, {"new_generators", s.new_generators},
                     {"surviving_pairs", s.surviving_pairs}});
  }
  Json out{{"basis", polys_json(r.basis.generators, ring)},
           {"leading_terms", terms_json(r.basis.leading_terms(), ring)},
           {"leading_ideal", monomial_ideal_json(r.basis.leading_ideal(), ring)},
           {"degree", r.basis.max_degree},
           {"trace", steps}};
  out["early_stop_degree"] = r.trace.early_stop_degree ? Json(*r.trace.early_stop_degree) : Json(nullptr);
  return out;
}

Json position_json(const MonomialIdeal& lt, const RingContext& ring) {
  Json out{{"leading_ideal", monomial_ideal_json(lt, ring)},
           {"quasi_stable", is_quasi_stable(lt)},
           {"stable", is_stable(lt)},
           {"strongly_stable", is_strongly_stable(lt)},
           {"noether_position", is_noether_position(lt)},
           {"dimension", dimension(lt)}};
  if (auto w = quasi_stable_obstruction(lt)) {
    out["obstruction"] = {{"generator", format_term(w->generator, ring)}, {"from", w->from}, {"to", w->to}};
  } else {
    out["obstruction"] = nullptr;
  }
  return out;
}

Json pommaret_json(const PommaretBasis& h, const RingContext& ring) {
  Json elements = Json::array();
  for (const auto& e : h.elements) {
    elements.push_back({{"polynomial", format_polynomial(e.poly, ring)},
                        {"leading_term", format_term(e.poly.lt(), ring)},
                        {"class", e.cls},
                        {"multiplicative", e.multiplicative}});
  }
  return {{"elements", elements},
          {"degree", h.max_degree},
          {"reg", reg_from_pommaret(h)},
          {"depth", depth_from_pommaret(h)}};
}

Json hilbert_json(const HilbertData& h) {
  return {{"hs_numerator", integers(h.numerator)},
          {"dimension", h.dim},
          {"hp", rationals(h.hp)},
          {"hilb", h.hilb},
          {"hf_table", integers(h.hf_table)}};
}

Json invariants_json(const IdealInvariants& inv) {
  Json out{{"dimension", inv.dim}, {"depth", inv.depth}, {"reg", inv.reg}, {"hilb", inv.hilbert.hilb}};
  const Json h = hilbert_json(inv.hilbert);
  out["hs_numerator"] = h["hs_numerator"];
  out["hp"] = h["hp"];
  out["hf_table"] = h["hf_table"];
  out["transform_attempts"] = inv.transform_attempts;
  if (inv.gin_agrees) out["gin_agrees"] = *inv.gin_agrees;
  return out;
}

Json fset_json(const FSetReport& report, const MoraCheck& mora, const RingContext& ring) {
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    const RingContext r = ring.truncated(ring.n() - level.arity);
    levels.push_back({{"arity", level.arity},
                      {"dimension", level.dim},
                      {"degree", level.degree},
                      {"f_size", level.f.size()},
                      {"f", terms_json(level.f, r)},
                      {"f_tilde_size", level.f_tilde.size()}});
  }
  Json out{{"f_size", report.f().size()}, {"f_tilde_size", report.f_tilde().size()}, {"levels", levels}};
  if (mora.applicable) {
    out["mora"] = {{"d", mora.d},
                   {"a", {{"lhs", mora.a_lhs}, {"rhs", mora.a_rhs}, {"holds", mora.holds_a}}},
                   {"b", {{"lhs", mora.b_lhs}, {"rhs", mora.b_rhs}, {"holds", mora.holds_b}}},
                   {"variant_a",
                    {{"lhs", mora.variant_a_lhs}, {"rhs", mora.variant_a_rhs}, {"holds", mora.variant_holds_a}}},
                   {"variant_b",
                    {{"lhs", mora.variant_b_lhs}, {"rhs", mora.variant_b_rhs}, {"holds", mora.variant_holds_b}}}};
  } else {
    out["mora"] = nullptr;
  }
  return out;
}

Json bound_json(const BoundValue& b) {
  Json out{{"formula", std::string(formula_name(b.formula))},
           {"coefficient", format_rational(b.coefficient)},
           {"base", format_rational(b.base)},
           {"exponent", b.exponent.get_str()},
           {"root", b.root},
           {"symbolic", b.symbolic()},
           {"irrational", b.irrational},
           {"log2", b.log2()},
           {"display", b.to_string()}};
  out["exact"] = b.exact ? Json(format_rational(*b.exact)) : Json(nullptr);
  out["value"] = b.value ? Json(b.value->get_str()) : Json(nullptr);
  return out;
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"id", c.id}, {"applicable", c.applicable}};
    if (c.applicable) {
      entry["lhs"] = c.lhs;
      entry["relation"] = c.relation;
      entry["rhs"] = c.rhs;
      entry["holds"] = c.holds.value_or(false);
    } else {
      entry["reason"] = c.reason;
    }
    checks.push_back(std::move(entry));
  }
  Json out{{"id", r.id},
           {"seed", r.seed},
           {"n", r.n},
           {"d", r.d},
           {"degrees", r.degrees},
           {"position",
            {{"quasi_stable", r.quasi_stable},
             {"stable", r.stable},
             {"strongly_stable", r.strongly_stable},
             {"noether", r.noether}}},
           {"deg", r.deg},
           {"reg", r.reg},
           {"dimension", r.dim},
           {"depth", r.depth},
           {"hilb", r.hilb}};
  out["f_size"] = r.f_size ? Json(*r.f_size) : Json(nullptr);
  out["checks"] = checks;
  out["incomplete"] = r.incomplete;
  if (r.incomplete) out["incomplete_reason"] = r.incomplete_reason;
  out["passed"] = r.passed();
  return out;
}

Json fixtures_json(const FixtureSummary& s) {
  Json fixtures = Json::array();
  for (const auto& f : s.fixtures) {
    Json expectations = Json::array();
    for (const auto& e : f.expectations) {
      expectations.push_back({{"what", e.what}, {"expected", e.expected}, {"actual", e.actual}, {"ok", e.ok}});
    }
    Json entry{{"name", f.name}, {"ok", f.ok()}, {"expectations", expectations}};
    if (f.report) entry["report"] = report_json(*f.report);
    fixtures.push_back(std::move(entry));
  }
  return {{"ok", s.ok()}, {"fixtures", fixtures}};
}

}  // namespace stablegb::cli
