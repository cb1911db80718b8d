#pragma once

#include "json.hpp"

#include "jrp/model.hpp"
#include "jrp/reductions.hpp"

/// JSON documents. Every integer travels as a decimal string and every
/// rational as "num/den", so no consumer ever meets a 64-bit overflow.
namespace jrp::io {

using Json = nlohmann::ordered_json;

Json to_json(const JrpInstance& inst);
/// Reads the canonical instance document; unrelated keys are ignored so an
/// artifact document is also accepted. Checks the instance invariants.
JrpInstance instance_from_json(const Json& doc);

Json to_json(const JrpSolution& sol);

/// Instance keys plus "lemma", "threshold" (L3 only) and "source".
Json to_json(const ReductionArtifact& art);
ReductionArtifact artifact_from_json(const Json& doc);

Json to_json(const RangeDivisorInstance& rd);

Json to_json(const Nat& n);
Json to_json(const Ratio& r);

}  // namespace jrp::io
