#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "latpoly/classify.hpp"

namespace latpoly {

using Json = nlohmann::json;

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

Json polytope_to_json(const LatticePolytope& p);
/// {"name": optional string, "dim": integer, "vertices": [[...], ...]}; throws ParseError.
LatticePolytope polytope_from_json(const Json& j);
LatticePolytope parse_polytope(const std::string& text);

Json delta_to_json(const DeltaVector& d);
/// {"matrix": A, "translation": t} for x -> A x + t (A is the transpose of UnimodularMap::matrix).
Json map_to_json(const UnimodularMap& m);
UnimodularMap map_from_json(const Json& j);
Json witness_to_json(const std::vector<WitnessStep>& steps);
/// Accepts a witness array, a single map object, or an object with a "witness" member.
std::vector<WitnessStep> witness_from_json(const Json& j);
Json entry_to_json(const CatalogEntry& e);
Json classification_to_json(const ClassificationResult& r);

/// δ-vector, volume, spanning flag, pyramid layers and half-sum invariant of any polytope.
Json invariants_json(const LatticePolytope& p);

}  // namespace latpoly
