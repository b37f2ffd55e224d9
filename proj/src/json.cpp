#include "unicrit/json.hpp"

#include <variant>

namespace unicrit {

void to_json(json& j, const PowerWitness& w) {
  j = {{"epsilon", w.epsilon}, {"y", w.y}, {"p", w.p}, {"text", to_string(w)}};
}

void to_json(json& j, const Word& w) { j = w.indices; }

void to_json(json& j, const OrbitReport& r) {
  j = json::object();
  if (r.preperiodic()) {
    j["kind"] = "Preperiodic";
    j["tail"] = r.tail;
    j["period"] = r.period;
  } else {
    j["kind"] = "Escaping";
    j["escape_index"] = r.escape_index;
  }
  j["prefix"] = r.prefix;
}

void to_json(json& j, const IterateClassification& r) {
  j = json::object();
  j["value"] = r.value;
  switch (r.kind) {
    case IterateClassification::Kind::NoPower: j["kind"] = "NoPower"; return;
    case IterateClassification::Kind::BelowThreshold: j["kind"] = "BelowThreshold"; break;
    case IterateClassification::Kind::Classified: j["kind"] = "Classified"; break;
  }
  if (r.witness) j["witness"] = *r.witness;
  if (r.kind != IterateClassification::Kind::Classified) return;
  j["statement"] = r.statement;
  j["anchor"] = r.anchor;
  if (r.alpha_orbit) j["alpha_orbit"] = *r.alpha_orbit;
  if (r.value_orbit) j["value_orbit"] = *r.value_orbit;
  j["shape_holds"] = r.shape_holds;
}

void to_json(json& j, const BaseFactorization& f) {
  j = json::object();
  if (f.kind == BaseFactorization::Kind::PowerBinomial) {
    j["kind"] = "PowerBinomial";
    if (f.power) j["power"] = *f.power;
  } else {
    j["kind"] = "SophieGermain";
    j["z"] = f.z;
  }
  j["factors"] = {f.first, f.second};
}

void to_json(json& j, const IrreducibilityVerdict& v) {
  j = json::object();
  j["verdict"] = to_string(v.kind);
  if (v.irreducible()) {
    json steps = json::array();
    for (const auto& s : v.certificate) {
      json step = {{"length", s.length}, {"rule", to_string(s.rule)}};
      if (s.rule == StepRule::CriticalValue) step["test_value"] = s.test_value;
      if (s.rule == StepRule::ModQ) step["modulus"] = s.modulus;
      steps.push_back(std::move(step));
    }
    j["certificate"] = std::move(steps);
  }
  if (v.reducible_witness) j["factorization"] = *v.reducible_witness;
  if (v.blocking_witness) {
    j["blocking_step"] = v.blocking_step;
    j["blocking_value"] = v.blocking_value;
    j["blocking_witness"] = *v.blocking_witness;
  }
  if (v.resolution) {
    j["resolution"] = {{"resolved", v.resolution->resolved},
                       {"prime", v.resolution->prime},
                       {"primes_tried", v.resolution->primes_tried},
                       {"skipped_for_degree", v.resolution->skipped_for_degree}};
  }
}

void to_json(json& j, const Presentation& p) { j = {{"d", p.degree()}, {"coeffs", p.coeffs()}}; }

void to_json(json& j, const CensusRow& r) {
  j = {{"length", r.length},       {"total", r.total},     {"irreducible", r.irreducible},
       {"reducible", r.reducible}, {"unknown", r.unknown}, {"resolved_by_modq", r.resolved_by_modq}};
}

void from_json(const json& j, CensusRow& r) {
  j.at("length").get_to(r.length);
  j.at("total").get_to(r.total);
  j.at("irreducible").get_to(r.irreducible);
  j.at("reducible").get_to(r.reducible);
  j.at("unknown").get_to(r.unknown);
  j.at("resolved_by_modq").get_to(r.resolved_by_modq);
}

void to_json(json& j, const FreenessReport& r) {
  json collisions = json::array();
  for (const auto& [a, b] : r.collisions) collisions.push_back({a, b});
  j = {{"passed", r.passed},
       {"max_len", r.max_len},
       {"trials", r.trials},
       {"words_checked", r.words_checked},
       {"pairs_compared", r.pairs_compared},
       {"moduli", r.moduli},
       {"collisions", std::move(collisions)}};
}

json outcome_to_json(const Presentation& pres, const ClassificationOutcome& o) {
  json j;
  j["outcome"] = outcome_name(o);
  j["presentation"] = pres;
  auto generator = [&](std::size_t i) { return json{{"index", i}, {"c", pres.coeff(i)}}; };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CertifiedFamily>) {
          j["rule"] = to_string(v.rule);
          j["f1"] = generator(v.f1);
          if (v.f2) j["f2"] = generator(*v.f2);
          j["F"] = v.F;
          j["length"] = v.F.length();
          j["certificate"] = v.certificate;
          j["density_lower_bound"] = density_lower_bound(pres, o).get_str();
        } else if constexpr (std::is_same_v<T, ExceptionalFamily>) {
          j["y"] = v.y;
          j["p"] = v.p;
          j["statement"] = v.statement;
          j["equality"] = v.equality;
          j["f1"] = generator(v.f1);
        } else if constexpr (std::is_same_v<T, PriorWorkResolvedD2>) {
          j["f1"] = generator(v.f1);
        }
      },
      o);
  return j;
}

}  // namespace unicrit
