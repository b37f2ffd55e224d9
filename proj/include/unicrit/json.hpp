#pragma once

// JSON views of the domain types. Integers that fit in 64 bits are written
// as numbers, wider ones as decimal strings.

#include "unicrit/census.hpp"
#include "unicrit/dynamics.hpp"
#include "unicrit/irreducibility.hpp"
#include "unicrit/semigroup.hpp"

#include <json.hpp>

namespace nlohmann {
template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) {
    if (v.fits_slong_p()) j = v.get_si();
    else j = v.get_str();
  }
  static void from_json(const json& j, mpz_class& v) {
    if (j.is_number_unsigned()) v = mpz_class(std::to_string(j.get<unsigned long long>()), 10);
    else if (j.is_number_integer()) v = mpz_class(std::to_string(j.get<long long>()), 10);
    else v = mpz_class(j.get<std::string>(), 10);
  }
};
}  // namespace nlohmann

namespace unicrit {

using json = nlohmann::json;

void to_json(json& j, const PowerWitness& w);
void to_json(json& j, const Word& w);
void to_json(json& j, const OrbitReport& r);
void to_json(json& j, const IterateClassification& r);
void to_json(json& j, const BaseFactorization& f);
void to_json(json& j, const IrreducibilityVerdict& v);
void to_json(json& j, const Presentation& p);
void to_json(json& j, const CensusRow& r);
void from_json(const json& j, CensusRow& r);
void to_json(json& j, const FreenessReport& r);

json outcome_to_json(const Presentation& pres, const ClassificationOutcome& o);

}  // namespace unicrit
