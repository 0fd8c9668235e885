#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/charclasses.hpp"
#include "gkm/errors.hpp"

#include <random>

using namespace gkm;

namespace {

const std::vector<std::string> kSigned = {"eschenburg", "eschenburg-swapped", "tolman",
                                          "woodward"};

Presentation x_presentation(const GkmCohomology& coh, const Example& ex) {
  std::vector<NamedClass> gens;
  for (const auto& b : ex.generators)
    gens.push_back({b.name, FixedPointClass::parse(ex.graph, b.components)});
  return Presentation(coh, gens);
}

std::map<std::string, std::string> rendered(const CharClassReport& r) {
  std::map<std::string, std::string> out;
  for (const auto& e : r.entries) out[e.name] = e.rendered;
  return out;
}

Rational eval(const IntPolynomial& p, const std::vector<Rational>& y) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= y[i];
    s += t;
  }
  return s;
}

// sum_p c_p(y) / prod alpha(y) at a rational point avoiding every weight
// hyperplane; independent of the polynomial division route.
Rational point_localization(const GkmGraph& g, const FixedPointClass& c,
                            const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Rational e = 1;
    for (const HalfEdge& h : g.incident(v)) e *= eval(IntPolynomial::linear_form(h.weight), y);
    s += eval(c.components[v], y) / e;
  }
  return s;
}

std::vector<Rational> generic_point(const GkmGraph& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-50, 50), den(1, 9);
  for (;;) {
    std::vector<Rational> y;
    for (std::size_t i = 0; i < g.torus_rank(); ++i) y.push_back(Rational(d(rng), den(rng)));
    bool ok = true;
    for (const Edge& e : g.edges())
      if (eval(IntPolynomial::linear_form(e.weight_at_from), y) == 0) ok = false;
    if (ok) return y;
  }
}

}  // namespace

TEST_CASE("eschenburg classes in X1, X2") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  Presentation pres = x_presentation(coh, ex);
  auto c = rendered(descend(coh, equivariant_char_class(ex.graph, ClassKind::kChern), pres));
  CHECK(c["c1"] == "4*X1 + 2*X2");
  CHECK(c["c2"] == "6*X1^2 + 6*X1*X2");
  CHECK(c["c3"] == "-6*X1^2*X2");
  auto p = descend(coh, equivariant_char_class(ex.graph, ClassKind::kPontrjagin), pres);
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries[0].name == "p1");
  CHECK(p.entries[0].rendered == "-8*X1*X2");
  CHECK(p.entries[0].coordinates == IntVector{0, -8});
  auto w = descend(coh, equivariant_char_class(ex.graph, ClassKind::kStiefelWhitney), pres);
  REQUIRE(w.entries.size() == 3);
  for (const auto& e : w.entries) {
    CHECK(e.rendered == "0");
    CHECK(is_zero(e.coordinates));
  }
}

TEST_CASE("fiber-swapped eschenburg") {
  Example ex = builtin("eschenburg-swapped");
  GkmCohomology coh(ex.graph);
  Presentation pres = x_presentation(coh, ex);
  auto c = rendered(descend(coh, equivariant_char_class(ex.graph, ClassKind::kChern), pres));
  CHECK(c["c1"] == "2*X1 + 4*X2");
  CHECK(c["c2"] == "-6*X1^2 - 12*X1*X2");
  CHECK(c["c3"] == "6*X1^2*X2");
  auto p = rendered(descend(coh, equivariant_char_class(ex.graph, ClassKind::kPontrjagin), pres));
  CHECK(p["p1"] == "-8*X1*X2");
}

TEST_CASE("equivariant chern class at p1 factors as listed") {
  Example ex = builtin("eschenburg");
  auto c = equivariant_char_class(ex.graph, ClassKind::kChern);
  const std::vector<std::string> y = {"Y1", "Y2"};
  const std::vector<std::string> expected = {
      "(1+Y1)(1+Y1-Y2)(1+2Y1-Y2)", "(1+Y2)(1-Y1+Y2)(1+Y1-2Y2)", "(1-Y2)(1-Y1)(1-Y1+Y2)",
      "(1+Y2)(1-Y1+Y2)(1-Y1+2Y2)", "(1+Y1)(1+Y1-Y2)(1-2Y1+Y2)", "(1-Y2)(1-Y1)(1+Y1-Y2)"};
  for (std::size_t v = 0; v < 6; ++v)
    CHECK(c.integral.components[v] == parse_polynomial(expected[v], y));
}

TEST_CASE("p1 = c1^2 - 2 c2 on every signed built-in") {
  for (const auto& name : kSigned) {
    CAPTURE(name);
    Example ex = builtin(name);
    GkmCohomology coh(ex.graph);
    auto c = equivariant_char_class(ex.graph, ClassKind::kChern);
    auto p = equivariant_char_class(ex.graph, ClassKind::kPontrjagin);
    RingElement lhs = coh.express(p.part(4), 4);
    RingElement rhs = coh.express(c.part(2) * c.part(2) + c.part(4) * BigInt(-2), 4);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("mod 2 total chern equals total stiefel-whitney") {
  for (const auto& name : kSigned) {
    Example ex = builtin(name);
    auto c = equivariant_char_class(ex.graph, ClassKind::kChern);
    auto w = equivariant_char_class(ex.graph, ClassKind::kStiefelWhitney);
    for (std::size_t v = 0; v < 6; ++v) CHECK(mod2_reduce(c.integral.components[v]) == w.mod2[v]);
    GkmCohomology coh(ex.graph);
    std::vector<Mod2Polynomial> cm;
    for (const auto& x : c.integral.components) cm.push_back(mod2_reduce(x));
    for (int d = 2; d <= 6; d += 2) CHECK(express_mod2(coh, cm, d) == express_mod2(coh, w.mod2, d));
  }
}

TEST_CASE("pontrjagin and stiefel-whitney ignore signs") {
  for (const auto& name : kSigned) {
    Example ex = builtin(name);
    GkmGraph u = ex.graph.forget_signs();
    GkmCohomology cs(ex.graph), cu(u);
    Presentation ps = Presentation::defaults(cs), pu = Presentation::defaults(cu);
    for (auto k : {ClassKind::kPontrjagin, ClassKind::kStiefelWhitney}) {
      auto a = equivariant_char_class(ex.graph, k), b = equivariant_char_class(u, k);
      if (k == ClassKind::kPontrjagin) CHECK(a.integral == b.integral);
      if (k == ClassKind::kStiefelWhitney) CHECK(a.mod2 == b.mod2);
    }
    CHECK_THROWS_AS(equivariant_char_class(u, ClassKind::kChern), GkmError);
  }
}

TEST_CASE("top chern number counts fixed points") {
  for (const auto& name : kSigned) {
    const GkmGraph g = builtin(name).graph;
    auto c = equivariant_char_class(g, ClassKind::kChern);
    CHECK(localize_integral(g, c.part(6)) == 6);
    CHECK(localize_integral(g, c.integral) == 6);
  }
}

TEST_CASE("c1^3 of the eschenburg flag") {
  Example ex = builtin("eschenburg");
  auto c = equivariant_char_class(ex.graph, ClassKind::kChern);
  FixedPointClass c1 = c.part(2);
  CHECK(localize_integral(ex.graph, c1 * c1 * c1) == 64);
  // ring oracle: c1 = 4X1 + 2X2 with <X1^3> = 2, <X1^2X2> = -1, <X1X2^2> = 1, <X2^3> = -2
  CHECK(64 * 2 + 3 * 16 * 2 * -1 + 3 * 4 * 4 * 1 + 8 * -2 == 64);
  std::mt19937 rng(17);
  CHECK(point_localization(ex.graph, c1 * c1 * c1, generic_point(ex.graph, rng)) == 64);
}

TEST_CASE("localization agrees with rational point evaluation") {
  std::mt19937 rng(2026);
  for (const auto& name : kSigned) {
    const GkmGraph g = builtin(name).graph;
    auto b2 = gkm_basis(g, 2);
    auto b4 = gkm_basis(g, 4);
    for (const auto& a : b2)
      for (const auto& b : b4) {
        FixedPointClass c = a * b;
        BigInt exact = localize_integral(g, c);
        for (int t = 0; t < 2; ++t) REQUIRE(point_localization(g, c, generic_point(g, rng)) == Rational(exact));
      }
  }
}

TEST_CASE("low-degree GKM classes integrate to zero") {
  for (const auto& name : kSigned) {
    const GkmGraph g = builtin(name).graph;
    for (int d : {0, 2})
      for (const auto& c : gkm_basis(g, d)) CHECK(localize_integral(g, c) == 0);
    // the full pushforward of a degree-2 class is a polynomial of degree -4: zero
    for (const auto& c : gkm_basis(g, 4)) CHECK(localize_pushforward(g, c).is_zero());
    // a degree-8 class pushes forward to a linear form
    auto b8 = gkm_basis(g, 8);
    REQUIRE_FALSE(b8.empty());
    for (const auto& c : b8) {
      IntPolynomial q = localize_pushforward(g, c);
      CHECK((q.is_zero() || q.degree() == 2));
    }
  }
}

TEST_CASE("localization errors") {
  const GkmGraph g = builtin("eschenburg").graph;
  FixedPointClass lump = FixedPointClass::constant(g, 0);
  lump.components[0] = parse_polynomial("Y1^3", std::vector<std::string>{"Y1", "Y2"});
  CHECK_THROWS_AS(localize_integral(g, lump), GkmError);
  try {
    localize_integral(g, lump);
  } catch (const GkmError& e) {
    CHECK(e.kind() == ErrorKind::kNonIntegralLocalizationSum);
  }
  auto c = equivariant_char_class(g, ClassKind::kChern);
  try {
    localize_integral(g, c.part(2) * c.part(6));
    FAIL("degree 8 accepted");
  } catch (const GkmError& e) {
    CHECK(e.kind() == ErrorKind::kMismatch);
  }
  try {
    localize_integral(g.forget_signs(), c.part(6));
    FAIL("unsigned accepted");
  } catch (const GkmError& e) {
    CHECK(e.kind() == ErrorKind::kRequiresSignedGraph);
  }
}

TEST_CASE("unsigned graphs still get pontrjagin and stiefel-whitney classes") {
  GkmGraph u = builtin("tolman").graph.forget_signs();
  GkmCohomology coh(u);
  Presentation pres = Presentation::defaults(coh);
  auto p = descend(coh, equivariant_char_class(u, ClassKind::kPontrjagin), pres);
  CHECK(p.entries.size() == 1);
  auto w = descend(coh, equivariant_char_class(u, ClassKind::kStiefelWhitney), pres);
  for (const auto& e : w.entries) CHECK(is_zero(e.coordinates));
}

TEST_CASE("stiefel-whitney of a non-spin example is detected") {
  // CP2: w2 is the generator mod 2
  std::vector<Edge> es = {GkmGraph::make_edge(0, 1, {1, -1}, true),
                          GkmGraph::make_edge(0, 2, {1, 0}, true),
                          GkmGraph::make_edge(1, 2, {0, 1}, true)};
  GkmGraph g(2, true, {"a", "b", "c"}, es);
  REQUIRE(validate(g).ok());
  GkmCohomology coh(g);
  Presentation pres = Presentation::defaults(coh);
  auto w = descend(coh, equivariant_char_class(g, ClassKind::kStiefelWhitney), pres);
  REQUIRE(w.entries.size() == 2);
  CHECK(w.entries[0].coordinates == IntVector{1});
  CHECK(w.entries[1].coordinates == IntVector{1});
  auto c = equivariant_char_class(g, ClassKind::kChern);
  CHECK(localize_integral(g, c.part(4)) == 3);
  CHECK(localize_integral(g, c.part(2) * c.part(2)) == 9);
}
