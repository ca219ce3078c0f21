#pragma once

// JSON encodings shared by the CLI and by downstream consumers. Exact
// rationals are {"num", "den"} decimal strings; big counts are decimal
// strings.

#include <nlohmann/json.hpp>

#include "maedalab/density_model.hpp"
#include "maedalab/galois.hpp"
#include "maedalab/hecke.hpp"
#include "maedalab/permcycles.hpp"
#include "maedalab/sequences.hpp"

namespace maedalab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json interval_json(const RationalInterval& x);

Json to_json(const DCycleCensus& census);
DCycleCensus census_from_json(const Json& j);

Json to_json(const EffectiveBoundReport& report);
Json to_json(const GaloisCertificate& certificate);
Json to_json(const DensityExperiment& experiment);
Json to_json(const HeckeCharPoly& charpoly);
Json to_json(const MaedaEvidence& evidence);

/// Shortest round-trippable decimal form used for every float mirror, so
/// CSV and JSON carry identical text.
std::string format_float(double x);

}  // namespace maedalab
