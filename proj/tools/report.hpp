#pragma once

// JSON views of the library results used by the command-line tool.

#include <json.hpp>

#include "stablegb/bounds.hpp"
#include "stablegb/fset.hpp"
#include "stablegb/groebner.hpp"
#include "stablegb/harness.hpp"
#include "stablegb/invariants.hpp"
#include "stablegb/parse.hpp"
#include "stablegb/pommaret.hpp"
#include "stablegb/stability.hpp"

namespace stablegb::cli {

using Json = nlohmann::ordered_json;

Json terms_json(std::span<const Term> terms, const RingContext& ring);
Json polys_json(std::span<const Polynomial> polys, const RingContext& ring);
Json monomial_ideal_json(const MonomialIdeal& j, const RingContext& ring);

Json groebner_json(const GroebnerResult& r, const RingContext& ring);
Json position_json(const MonomialIdeal& lt, const RingContext& ring);
Json pommaret_json(const PommaretBasis& h, const RingContext& ring);
Json hilbert_json(const HilbertData& h);
Json invariants_json(const IdealInvariants& inv);
Json fset_json(const FSetReport& report, const MoraCheck& mora, const RingContext& ring);
Json bound_json(const BoundValue& b);
Json report_json(const VerificationReport& r);
Json fixtures_json(const FixtureSummary& s);

}  // namespace stablegb::cli
