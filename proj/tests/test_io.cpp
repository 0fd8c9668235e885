#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/errors.hpp"
#include "gkm/io.hpp"

using namespace gkm;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const GkmError& e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return ErrorKind::kInvalidGraph;
}

std::string message_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const GkmError& e) {
    return e.what();
  }
  return "";
}

bool same_graph(const GkmGraph& a, const GkmGraph& b) {
  if (a.vertices() != b.vertices() || a.is_signed() != b.is_signed() ||
      a.torus_rank() != b.torus_rank() || a.edge_count() != b.edge_count())
    return false;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const Edge &x = a.edges()[i], &y = b.edges()[i];
    if (x.from != y.from || x.to != y.to || x.weight_at_from != y.weight_at_from ||
        x.weight_at_to != y.weight_at_to)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph documents round trip for every built-in") {
  for (const auto& name : builtin_names()) {
    Example ex = builtin(name);
    std::string text = graph_to_json(ex.graph).dump(2);
    Document d = parse_document(text);
    REQUIRE(std::holds_alternative<GkmGraph>(d));
    CHECK(same_graph(std::get<GkmGraph>(d), ex.graph));
    CHECK(graph_to_json(std::get<GkmGraph>(d)).dump(2) == text);
  }
}

TEST_CASE("gkmg layout") {
  Json j = graph_to_json(builtin("eschenburg").graph);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"format", "torus_rank", "signed", "vertices", "edges"});
  CHECK(j["format"] == "gkmg/1");
  CHECK(j["vertices"].size() == 6);
  CHECK(j["edges"].size() == 9);
  std::vector<std::string> ekeys;
  for (const auto& [k, v] : j["edges"][0].items()) ekeys.push_back(k);
  CHECK(ekeys == std::vector<std::string>{"from", "to", "weight_at_from"});
}

TEST_CASE("x-ray documents round trip") {
  for (const auto& name : builtin_names()) {
    Example ex = builtin(name);
    if (!ex.xray) continue;
    std::string text = xray_to_json(*ex.xray).dump();
    Document d = parse_document(text);
    REQUIRE(std::holds_alternative<XRay>(d));
    const XRay& x = std::get<XRay>(d);
    CHECK(x.vertices == ex.xray->vertices);
    CHECK(x.positions == ex.xray->positions);
    CHECK(x.edges == ex.xray->edges);
  }
  Json e = xray_to_json(*builtin("eschenburg").xray);
  CHECK(e["vertices"]["p1"] == Json::array({-2, 1}));
  CHECK(e["edges"][0] == Json::array({"p1", "p6"}));
}

TEST_CASE("rational x-ray coordinates") {
  Document d = parse_document(R"({"format":"xray/1","torus_rank":1,
      "vertices":{"s":[0],"n":[[3,2]]},"edges":[["s","n"]]})");
  const XRay& x = std::get<XRay>(d);
  CHECK(x.positions[1][0] == Rational(3, 2));
  CHECK(xray_to_json(x)["vertices"]["n"] == Json::array({Json::array({3, 2})}));
  GkmGraph g = graph_from_xray(x);
  CHECK(g.edges()[0].weight_at_from == IntVector{1});
}

TEST_CASE("unknown format versions") {
  CHECK(kind_of(R"({"format":"gkmg/9","torus_rank":1,"signed":true,"vertices":[],"edges":[]})") ==
        ErrorKind::kFormat);
  CHECK(message_of(R"({"format":"gkmg/9"})").find("gkmg/9") != std::string::npos);
  CHECK(message_of(R"({"format":"gkmg/9"})").find("unknown format version") != std::string::npos);
}

TEST_CASE("schema errors name the edge") {
  std::string missing = R"({"format":"gkmg/1","torus_rank":1,"signed":true,
      "vertices":["a","b"],"edges":[{"from":"a","to":"b"}]})";
  CHECK(kind_of(missing) == ErrorKind::kFormat);
  std::string msg = message_of(missing);
  CHECK(msg.find("edge 0") != std::string::npos);
  CHECK(msg.find("a-b") != std::string::npos);
  CHECK(msg.find("weight_at_from") != std::string::npos);

  CHECK(message_of(R"({"format":"gkmg/1","torus_rank":2,"signed":true,"vertices":["a","b"],
      "edges":[{"from":"a","to":"b","weight_at_from":[1]}]})")
            .find("2 integers") != std::string::npos);
  CHECK(message_of(R"({"format":"gkmg/1","torus_rank":1,"signed":true,"vertices":["a"],
      "edges":[{"from":"a","to":"z","weight_at_from":[1]}]})")
            .find("\"z\"") != std::string::npos);
  CHECK(kind_of(R"({"format":"gkmg/1","torus_rank":1,"signed":"yes","vertices":[],"edges":[]})") ==
        ErrorKind::kFormat);
  CHECK(kind_of(R"({"format":"gkmg/1","torus_rank":1,"signed":true,"vertices":["a","a"],"edges":[]})") ==
        ErrorKind::kFormat);
  CHECK(kind_of(R"({"torus_rank":1})") == ErrorKind::kFormat);
  CHECK(kind_of(R"([1,2])") == ErrorKind::kFormat);
  CHECK(kind_of(R"({"format":"xray/1","torus_rank":1,"vertices":{"a":[[1,0]]},"edges":[]})") ==
        ErrorKind::kFormat);
}

TEST_CASE("malformed JSON reports the location") {
  std::string msg = message_of("{\"format\": \"gkmg/1\",\n \"torus_rank\": }");
  CHECK(msg.find("malformed JSON") != std::string::npos);
  CHECK(msg.find("byte") != std::string::npos);
}

TEST_CASE("invariant systems round trip") {
  InvariantSystem s;
  s.rank = 2;
  s.mu = {2, -1, -1, 1, -1, 1, 1, -2};
  s.w = {0, 0};
  s.p = {8, -8};
  s.basis = {"X1", "X2"};
  Json j = invariants_to_json(s);
  CHECK(j.dump() ==
        R"({"rank":2,"mu":[[[2,-1],[-1,1]],[[-1,1],[1,-2]]],"w":[0,0],"p":[8,-8],"basis":"X1,X2"})");
  CHECK(invariants_from_json(Json::parse(j.dump())) == s);
  Json bad = j;
  bad["mu"][0][0][1] = 5;
  CHECK_THROWS_AS(invariants_from_json(bad), GkmError);
  bad = j;
  bad["w"] = Json::array({2, 0});
  CHECK_THROWS_AS(invariants_from_json(bad), GkmError);
}

TEST_CASE("large integers survive") {
  BigInt big("123456789012345678901234567890");
  CHECK(json_to_bigint(vector_to_json(IntVector{big})[0], "x") == big);
  CHECK(json_to_bigint(Json(-5), "x") == -5);
  CHECK_THROWS_AS(json_to_bigint(Json(1.5), "x"), GkmError);
}
