#pragma once

#include "json.hpp"
#include "presmin/formula.hpp"
#include "presmin/inference.hpp"

namespace presmin {

/// Key order is fixed so that equal inputs serialise byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const UPSet& s);
Json to_json(const Lookup& l);
Json to_json(const WindowProfile& p);
Json to_json(const Decomposition& d);
Json to_json(const WitnessTable& w);

/// {classification, N, d, residues, points, u, v, witnesses, profile}; the
/// decomposition fields are null unless the input was found periodic.
Json to_json(const AnalysisReport& r);

}  // namespace presmin
