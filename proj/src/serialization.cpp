#include "jrp/serialization.hpp"

namespace jrp::io {

namespace {

Nat nat_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_string())
    throw DomainError(std::string("field '") + key + "' must be a decimal string");
  return Nat::parse(v.get<std::string>());
}

}  // namespace

Json to_json(const Nat& n) { return n.str(); }
Json to_json(const Ratio& r) { return r.fraction_str(); }

Json to_json(const JrpInstance& inst) {
  Json doc;
  doc["variant"] = std::string(to_string(inst.variant));
  doc["K0"] = inst.k0.str();
  doc["K1"] = inst.k1.str();
  doc["K2"] = inst.k2.str();
  doc["H1"] = inst.h1.str();
  doc["H2"] = inst.h2.str();
  return doc;
}

JrpInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw DomainError("instance document must be a JSON object");
  if (!doc.contains("variant") || !doc.at("variant").is_string())
    throw DomainError("missing string field 'variant'");
  JrpInstance inst;
  inst.variant = parse_variant(doc.at("variant").get<std::string>());
  inst.k0 = nat_field(doc, "K0");
  inst.k1 = nat_field(doc, "K1");
  inst.k2 = nat_field(doc, "K2");
  inst.h1 = nat_field(doc, "H1");
  inst.h2 = nat_field(doc, "H2");
  inst.check();
  return inst;
}

Json to_json(const JrpSolution& sol) {
  Json doc;
  doc["q1"] = sol.q1.str();
  doc["q2"] = sol.q2.str();
  doc["cost"] = sol.cost.fraction_str();
  doc["bound1"] = sol.bound1.str();
  doc["bound2"] = sol.bound2.str();
  return doc;
}

Json to_json(const ReductionArtifact& art) {
  Json doc = to_json(art.instance);
  doc["lemma"] = std::string(to_string(art.lemma));
  if (art.threshold) doc["threshold"] = art.threshold->fraction_str();
  Json source;
  source["M"] = art.source.m.str();
  if (art.source.l) source["L"] = art.source.l->str();
  if (art.source.u) source["U"] = art.source.u->str();
  doc["source"] = source;
  return doc;
}

ReductionArtifact artifact_from_json(const Json& doc) {
  ReductionArtifact art;
  art.instance = instance_from_json(doc);
  if (!doc.contains("lemma") || !doc.at("lemma").is_string())
    throw DomainError("missing string field 'lemma'");
  art.lemma = parse_lemma(doc.at("lemma").get<std::string>());
  if (doc.contains("threshold")) {
    if (!doc.at("threshold").is_string()) throw DomainError("'threshold' must be a string");
    art.threshold = Ratio::parse(doc.at("threshold").get<std::string>());
  }
  if ((art.lemma == Lemma::L3) != art.threshold.has_value())
    throw DomainError("threshold must be present exactly for L3 artifacts");
  if (!doc.contains("source") || !doc.at("source").is_object())
    throw DomainError("missing object field 'source'");
  const Json& src = doc.at("source");
  art.source.m = nat_field(src, "M");
  if (src.contains("L")) art.source.l = nat_field(src, "L");
  if (src.contains("U")) art.source.u = nat_field(src, "U");
  return art;
}

Json to_json(const RangeDivisorInstance& rd) {
  Json doc;
  doc["M"] = rd.m.str();
  doc["L"] = rd.l.str();
  doc["U"] = rd.u.str();
  return doc;
}

}  // namespace jrp::io
