#include "gkm/io.hpp"

#include "gkm/errors.hpp"

#include <limits>
#include <map>

namespace gkm {

namespace {

[[noreturn]] void schema_error(const std::string& msg) {
  throw GkmError(ErrorKind::kFormat, "schema error: " + msg);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " is missing \"" + key + "\"");
  return *it;
}

std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where + " must be a string");
  return j.get<std::string>();
}

std::size_t torus_rank_of(const Json& j) {
  const Json& k = field(j, "torus_rank", "document");
  if (!k.is_number_integer() || k.get<long long>() < 1)
    schema_error("\"torus_rank\" must be a positive integer");
  return k.get<std::size_t>();
}

IntVector weight_of(const Json& j, std::size_t k, const std::string& where) {
  if (!j.is_array() || j.size() != k)
    schema_error(where + " must be an array of " + std::to_string(k) + " integers");
  IntVector w;
  for (const auto& x : j) w.push_back(json_to_bigint(x, where));
  return w;
}

Rational coordinate_of(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error(where + ": a rational coordinate is [num, den]");
    BigInt num = json_to_bigint(j[0], where), den = json_to_bigint(j[1], where);
    if (den == 0) schema_error(where + ": zero denominator");
    return Rational(num, den);
  }
  return Rational(json_to_bigint(j, where));
}

Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

}  // namespace

BigInt json_to_bigint(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
    return BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  schema_error(where + " must hold integers");
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(bigint_json(x));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

GkmGraph graph_from_json(const Json& j) {
  const std::size_t k = torus_rank_of(j);
  const Json& sig = field(j, "signed", "document");
  if (!sig.is_boolean()) schema_error("\"signed\" must be a boolean");
  const Json& verts = field(j, "vertices", "document");
  if (!verts.is_array()) schema_error("\"vertices\" must be an array of names");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& v : verts) {
    names.push_back(json_string(v, "vertex name"));
    if (!index.emplace(names.back(), names.size() - 1).second)
      schema_error("duplicate vertex \"" + names.back() + "\"");
  }
  const Json& es = field(j, "edges", "document");
  if (!es.is_array()) schema_error("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Json& e = es[i];
    std::string where = "edge " + std::to_string(i);
    if (!e.is_object()) schema_error(where + " must be an object");
    if (e.contains("from") && e.contains("to") && e["from"].is_string() && e["to"].is_string())
      where += " (" + e["from"].get<std::string>() + "-" + e["to"].get<std::string>() + ")";
    std::string from = json_string(field(e, "from", where), where + " \"from\"");
    std::string to = json_string(field(e, "to", where), where + " \"to\"");
    IntVector w = weight_of(field(e, "weight_at_from", where), k, where + " \"weight_at_from\"");
    auto a = index.find(from), b = index.find(to);
    if (a == index.end()) schema_error(where + " names unknown vertex \"" + from + "\"");
    if (b == index.end()) schema_error(where + " names unknown vertex \"" + to + "\"");
    edges.push_back(GkmGraph::make_edge(a->second, b->second, w, sig.get<bool>()));
  }
  try {
    return GkmGraph(k, sig.get<bool>(), names, std::move(edges));
  } catch (const GkmError& e) {
    schema_error(e.what());
  }
}

XRay xray_from_json(const Json& j) {
  XRay x;
  x.torus_rank = torus_rank_of(j);
  const Json& verts = field(j, "vertices", "document");
  if (!verts.is_object()) schema_error("\"vertices\" must map names to coordinates");
  std::map<std::string, std::size_t> index;
  for (const auto& [name, pos] : verts.items()) {
    std::string where = "vertex \"" + name + "\"";
    if (!pos.is_array() || pos.size() != x.torus_rank)
      schema_error(where + " needs " + std::to_string(x.torus_rank) + " coordinates");
    std::vector<Rational> p;
    for (const auto& c : pos) p.push_back(coordinate_of(c, where));
    index[name] = x.vertices.size();
    x.vertices.push_back(name);
    x.positions.push_back(std::move(p));
  }
  const Json& es = field(j, "edges", "document");
  if (!es.is_array()) schema_error("\"edges\" must be an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Json& e = es[i];
    std::string where = "edge " + std::to_string(i);
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      schema_error(where + " must be a pair of vertex names");
    auto a = index.find(e[0].get<std::string>()), b = index.find(e[1].get<std::string>());
    if (a == index.end() || b == index.end())
      schema_error(where + " names an unknown vertex");
    x.edges.emplace_back(a->second, b->second);
  }
  return x;
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GkmError(ErrorKind::kFormat,
                   "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) schema_error("top level must be an object");
  std::string format = json_string(field(j, "format", "document"), "\"format\"");
  if (format == "gkmg/1") return graph_from_json(j);
  if (format == "xray/1") return xray_from_json(j);
  throw GkmError(ErrorKind::kFormat, "unknown format version \"" + format +
                                         "\" (supported: gkmg/1, xray/1)");
}

Json graph_to_json(const GkmGraph& g) {
  Json j;
  j["format"] = "gkmg/1";
  j["torus_rank"] = g.torus_rank();
  j["signed"] = g.is_signed();
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json je;
    je["from"] = g.vertices()[e.from];
    je["to"] = g.vertices()[e.to];
    je["weight_at_from"] = vector_to_json(e.weight_at_from);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json xray_to_json(const XRay& x) {
  Json j;
  j["format"] = "xray/1";
  j["torus_rank"] = x.torus_rank;
  Json verts = Json::object();
  for (std::size_t v = 0; v < x.vertices.size(); ++v) {
    Json pos = Json::array();
    for (const auto& c : x.positions[v]) {
      if (denominator(c) == 1)
        pos.push_back(bigint_json(numerator(c)));
      else
        pos.push_back(Json::array({bigint_json(numerator(c)), bigint_json(denominator(c))}));
    }
    verts[x.vertices[v]] = std::move(pos);
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& [a, b] : x.edges) edges.push_back({x.vertices[a], x.vertices[b]});
  j["edges"] = std::move(edges);
  return j;
}

Json invariants_to_json(const InvariantSystem& s) {
  Json j;
  j["rank"] = s.rank;
  Json mu = Json::array();
  for (std::size_t a = 0; a < s.rank; ++a) {
    Json plane = Json::array();
    for (std::size_t b = 0; b < s.rank; ++b) {
      Json line = Json::array();
      for (std::size_t c = 0; c < s.rank; ++c) line.push_back(bigint_json(s.cubic(a, b, c)));
      plane.push_back(std::move(line));
    }
    mu.push_back(std::move(plane));
  }
  j["mu"] = std::move(mu);
  j["w"] = s.w;
  j["p"] = vector_to_json(s.p);
  std::string basis;
  for (std::size_t i = 0; i < s.basis.size(); ++i) basis += (i ? "," : "") + s.basis[i];
  j["basis"] = basis;
  return j;
}

InvariantSystem invariants_from_json(const Json& j) {
  if (!j.is_object()) schema_error("invariant system must be an object");
  InvariantSystem s;
  const Json& r = field(j, "rank", "invariant system");
  if (!r.is_number_integer() || r.get<long long>() < 0)
    schema_error("\"rank\" must be a nonnegative integer");
  s.rank = r.get<std::size_t>();
  const Json& mu = field(j, "mu", "invariant system");
  s.mu.assign(s.rank * s.rank * s.rank, 0);
  if (!mu.is_array() || mu.size() != s.rank) schema_error("\"mu\" must be rank x rank x rank");
  for (std::size_t a = 0; a < s.rank; ++a) {
    if (!mu[a].is_array() || mu[a].size() != s.rank)
      schema_error("\"mu\" must be rank x rank x rank");
    for (std::size_t b = 0; b < s.rank; ++b) {
      IntVector line = weight_of(mu[a][b], s.rank, "\"mu\"");
      for (std::size_t c = 0; c < s.rank; ++c) s.mu[(a * s.rank + b) * s.rank + c] = line[c];
    }
  }
  IntVector w = weight_of(field(j, "w", "invariant system"), s.rank, "\"w\"");
  for (const auto& x : w) {
    if (x != 0 && x != 1) schema_error("\"w\" entries must be 0 or 1");
    s.w.push_back(static_cast<int>(x));
  }
  s.p = weight_of(field(j, "p", "invariant system"), s.rank, "\"p\"");
  std::string basis = json_string(field(j, "basis", "invariant system"), "\"basis\"");
  std::size_t start = 0;
  while (!basis.empty()) {
    std::size_t comma = basis.find(',', start);
    s.basis.push_back(basis.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (s.basis.size() != s.rank) schema_error("\"basis\" must name rank classes");
  if (!s.is_symmetric()) schema_error("\"mu\" must be symmetric");
  return s;
}

}  // namespace gkm
