#pragma once

#include <string>

#include <json.hpp>

#include "primespec/construction.hpp"
#include "primespec/maps.hpp"
#include "primespec/products.hpp"
#include "primespec/topology.hpp"

namespace primespec {

using Json = nlohmann::json;

// Readers throw Error(InvalidInput) on malformed documents.
RingExpr ring_from_json(const Json& j, const Limits& limits = {});
RingElement element_from_json(const Json& j);
PrimePoint point_from_json(const Json& j);
SpecSubset set_from_json(const Json& j);
RingMapSpec map_from_json(const Json& j, const Limits& limits = {});
CoefficientField field_from_json(const Json& j);

Json to_json(const RingExpr& r);
Json to_json(const RingElement& e);
Json to_json(const PrimePoint& p);
Json to_json(const SpecSubset& s);
Json to_json(const RingMapSpec& m);
Json to_json(const CoefficientField& f);
Json to_json(const DensityCertificate& c);
Json to_json(const ImageReport& r);
Json to_json(const SupplementReport& r);
Json to_json(const FieldDescriptor& f);

/// Inline JSON text, or the path of a file holding it.
Json parse_json_argument(const std::string& text_or_path);

}  // namespace primespec
