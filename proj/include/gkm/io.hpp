#pragma once

// gkmg/1 and xray/1 documents, and the JSON form of invariant systems.

#include "gkm/graph.hpp"
#include "gkm/wjz.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace gkm {

using Json = nlohmann::ordered_json;

/// A parsed input document: either a graph or an x-ray.
using Document = std::variant<GkmGraph, XRay>;

/// Dispatches on "format". Throws GkmError(kFormat) for malformed JSON
/// (with the byte offset), unknown format versions and schema violations.
/// Graphs are not validated here.
Document parse_document(const std::string& text);

Json graph_to_json(const GkmGraph& g);
Json xray_to_json(const XRay& x);

/// Strict parsers for a single already-decoded document.
GkmGraph graph_from_json(const Json& j);
XRay xray_from_json(const Json& j);

/// {"rank","mu","w","p","basis"} with mu nested r x r x r.
Json invariants_to_json(const InvariantSystem& s);
InvariantSystem invariants_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
Json vector_to_json(const IntVector& v);

/// Integer-valued JSON number or decimal string to BigInt. Throws
/// GkmError(kFormat).
BigInt json_to_bigint(const Json& j, const std::string& where);

}  // namespace gkm
