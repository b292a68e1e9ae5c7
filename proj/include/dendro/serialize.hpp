#pragma once

#include "json.hpp"

#include "dendro/broad_poset.hpp"
#include "dendro/dendroidal.hpp"
#include "dendro/monotone.hpp"
#include "dendro/omega.hpp"

namespace dendro {

using Json = nlohmann::ordered_json;

// {"flavour", "carrier", "relation": [{"source": [...], "target": id}]}.
// Reflexive pairs are omitted on output and discarded on input.
Json to_json(const BroadPoset& poset);
BroadPoset broad_poset_from_json(const Json& json);

// {"domain": poset, "codomain": poset, "assignment": {id: id}}.
Json to_json(const MonotoneMap& map);
MonotoneMap monotone_map_from_json(const Json& json);

Json to_json(const ValidationReport& report);
Json to_json(const DendroReport& report);
Json to_json(const FaceKind& kind);

// {"degeneracies": [...], "iso": map, "faces": [...], "kinds": [...]}.
Json to_json(const Factorization& factorization);
Factorization factorization_from_json(const Json& json);

}  // namespace dendro
