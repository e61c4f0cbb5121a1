#pragma once

// JSON renderings of library results. Elements appear by name, big counts
// as decimal strings, enums as their string forms.

#include "aaslab/aas.hpp"
#include "aaslab/build.hpp"
#include "aaslab/families.hpp"
#include "aaslab/genvec.hpp"

#include "json.hpp"

namespace aaslab::report {

using Json = nlohmann::ordered_json;

/// Bumped on any breaking change to report or cache layout.
inline constexpr int kSchemaVersion = 1;

Json group_json(const GroupSpec& spec, const Group& g);
Json signature_json(const Group& g, const Signature& sig);
Json vector_json(const Group& g, const GeneratingVector& v);
Json aas_json(const Group& g, const AasReport& r);
Json bounds_json(const Group& g, const AasBounds& b);
Json outcome_json(const Group& g, const Signature& sig, const DecisionOutcome& d);
Json nonsig_json(const Group& g, const NonSignatureSet& set);
Json scan_row_json(const FamilyScanRow& row);
Json product_json(const ProductCheck& check);

} // namespace aaslab::report
