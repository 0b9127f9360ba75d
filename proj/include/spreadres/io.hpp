#pragma once

// JSON encodings of posets, representations, morphisms and inclusions, and the
// textual element/spread syntax used on the command line.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spreadres/approx.hpp"
#include "spreadres/kan.hpp"

namespace spreadres {

using json = nlohmann::json;

/// Malformed or inconsistent input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"type":"grid","factors":[..]} or {"type":"explicit","n":..,"relations":[[a,b],..],"labels":[..]}.
PosetPtr poset_from_json(const json& j, int cap = kDefaultElementCap);
json poset_to_json(const Poset& p);

/// "4x2" or "3x2x2".
PosetPtr parse_grid(const std::string& spec, int cap = kDefaultElementCap);

/// {"poset":{..},"p":2,"dims":[..],"maps":{"i->j":[[..],..]}}; keys are Hasse
/// edges and may be omitted when either end is zero-dimensional.
RepPtr rep_from_json(const json& j, int cap = kDefaultElementCap);
/// Interprets j against an already-known poset (j["poset"] is then ignored if present).
RepPtr rep_from_json(const json& j, const PosetPtr& poset);
json rep_to_json(const Representation& m);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field field);

/// {"source":..,"target":..,"components":[[[..]],..]} as element-indexed matrices.
json morphism_to_json(const RepMorphism& f);

/// {"factors":[[0,3],[0,1,2]]}, optionally with "target":[sizes]; target
/// factor sizes default to the largest image plus one.
AlignedGridInclusion inclusion_from_json(const json& j);
json inclusion_to_json(const AlignedGridInclusion& i);

/// A label, a decimal index, or dotted grid coordinates such as "2.1".
Elem parse_element(const Poset& p, const std::string& token);

/// "up-X", "down-X", "elems:X,Y,..", or "#N" (index in canonical order).
Subset parse_spread(const Poset& p, const std::string& spec);

/// Canonical spread encoding {"min":[..],"cover":[..],"elements":[..]} with
/// formatted element names.
json spread_to_json(const Poset& p, Subset s);
json subset_to_json(const Poset& p, Subset s);

}  // namespace spreadres
