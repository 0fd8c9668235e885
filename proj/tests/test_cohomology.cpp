#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"

using namespace gkm;

namespace {

const std::vector<std::string> kGkmBuiltins = {"eschenburg", "eschenburg-swapped", "tolman",
                                               "woodward"};

std::vector<NamedClass> bindings(const Example& ex) {
  std::vector<NamedClass> out;
  for (const auto& b : ex.generators)
    out.push_back({b.name, FixedPointClass::parse(ex.graph, b.components)});
  return out;
}

IntPolynomial X(const std::string& s) { return parse_polynomial(s, std::vector<std::string>{"X1", "X2"}); }

// dim of the degree-m part of Z[Y1, Y2]
std::size_t binom2(int m) { return m < 0 ? 0 : static_cast<std::size_t>(m + 1); }

}  // namespace

TEST_CASE("betti ranks of the built-ins") {
  for (const auto& name : kGkmBuiltins) {
    CAPTURE(name);
    GkmCohomology coh(builtin(name).graph);
    CHECK(coh.top_degree() == 6);
    std::vector<std::size_t> ranks;
    for (int d = 0; d <= 6; d += 2) ranks.push_back(coh.basis(d).ordinary_rank());
    CHECK(ranks == std::vector<std::size_t>{1, 2, 2, 1});
  }
}

TEST_CASE("equivariant ranks follow the Poincare series of a free module") {
  // A free over Z[Y1, Y2] with generators in degrees 0, 2, 2, 4, 4, 6
  const std::vector<std::size_t> betti = {1, 2, 2, 1};
  for (const auto& name : kGkmBuiltins) {
    GkmCohomology coh(builtin(name).graph, 10);
    for (int d = 0; d <= 10; d += 2) {
      std::size_t expected = 0;
      for (int k = 0; k < 4; ++k) expected += betti[k] * binom2(d / 2 - k);
      CAPTURE(name);
      CAPTURE(d);
      CHECK(coh.basis(d).equivariant_rank() == expected);
      if (d > 6) CHECK(coh.basis(d).ordinary_rank() == 0);
    }
  }
}

TEST_CASE("total rank equals the number of fixed points") {
  for (const auto& name : kGkmBuiltins) {
    GkmCohomology coh(builtin(name).graph);
    std::size_t total = 0;
    for (int d = 0; d <= coh.top_degree(); d += 2) total += coh.basis(d).ordinary_rank();
    CHECK(total == 6);
  }
}

TEST_CASE("every basis element satisfies the edge congruences") {
  for (const auto& name : kGkmBuiltins) {
    const GkmGraph g = builtin(name).graph;
    for (int d = 0; d <= 8; d += 2)
      for (const auto& c : gkm_basis(g, d)) {
        REQUIRE(is_gkm_class(g, c));
        REQUIRE(c.degree() == d);
        // independent check by explicit division along each edge
        for (const Edge& e : g.edges()) {
          IntPolynomial diff = c.components[e.from] - c.components[e.to];
          REQUIRE(divide_by_linear(diff, IntPolynomial::linear_form(e.weight_at_from)));
        }
      }
  }
}

TEST_CASE("the A_d basis is saturated") {
  const GkmGraph g = builtin("eschenburg").graph;
  GkmCohomology coh(g);
  auto x = bindings(builtin("eschenburg"));
  // products of GKM classes and Y-multiples are GKM and must have integer coordinates
  FixedPointClass y1;
  for (std::size_t v = 0; v < 6; ++v) y1.components.push_back(IntPolynomial::variable(2, 0));
  for (const auto& c : {x[0].value * x[1].value, x[0].value * x[0].value, y1 * x[1].value})
    CHECK_NOTHROW(coh.equivariant_coordinates(c, 4));
  // a class that is GKM only after doubling
  FixedPointClass half = x[0].value * x[1].value;
  half.components[0] += IntPolynomial::variable(2, 0) * IntPolynomial::variable(2, 1);
  CHECK_FALSE(is_gkm_class(g, half));
  CHECK_THROWS_AS(coh.equivariant_coordinates(half, 4), GkmError);
}

TEST_CASE("relations map to zero") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  auto gens = bindings(ex);
  RingElement r1 = evaluate_ring_map(coh, gens, X("-X1^2 - 3*X1*X2 - X2^2"));
  RingElement r2 = evaluate_ring_map(coh, gens, X("-X1^2*X2 - X1*X2^2"));
  CHECK(r1.degree == 4);
  CHECK(r2.degree == 6);
  CHECK(is_zero(r1.coordinates));
  CHECK(is_zero(r2.coordinates));
  CHECK_FALSE(is_zero(evaluate_ring_map(coh, gens, X("X1*X2")).coordinates));
}

TEST_CASE("Z[X1,X2]/(r1,r2) maps bijectively onto A/mA") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  auto gens = bindings(ex);
  // monomial bases 1 | X1, X2 | X1^2, X1*X2 | X1^2*X2
  const std::vector<std::vector<std::string>> basis = {
      {"1"}, {"X1", "X2"}, {"X1^2", "X1*X2"}, {"X1^2*X2"}};
  for (int k = 0; k < 4; ++k) {
    std::vector<IntVector> cols;
    for (const auto& m : basis[k]) cols.push_back(evaluate_ring_map(coh, gens, X(m)).coordinates);
    IntMatrix mat = IntMatrix::from_columns(coh.basis(2 * k).ordinary_rank(), cols);
    CAPTURE(k);
    CHECK(is_unimodular(mat));
  }
  // reductions forced by the relations
  auto ev = [&](const char* s) { return evaluate_ring_map(coh, gens, X(s)).coordinates; };
  CHECK(ev("X2^2") == ev("-X1^2 - 3*X1*X2"));
  CHECK(ev("X1^3") == ev("-2*X1^2*X2"));
  CHECK(ev("X2^3") == ev("2*X1^2*X2"));
  CHECK(ev("X1*X2^2") == ev("-X1^2*X2"));
}

TEST_CASE("cup product is commutative and associative") {
  for (const auto& name : kGkmBuiltins) {
    GkmCohomology coh(builtin(name).graph);
    const auto& b2 = coh.basis(2).ordinary;
    for (const auto& a : b2)
      for (const auto& b : b2) {
        CHECK(coh.cup_and_express(a, b) == coh.cup_and_express(b, a));
        for (const auto& c : b2)
          CHECK(coh.cup_and_express(a * b, c) == coh.cup_and_express(a, b * c));
      }
  }
}

TEST_CASE("ordinary basis lifts project to unit vectors") {
  for (const auto& name : kGkmBuiltins) {
    GkmCohomology coh(builtin(name).graph);
    for (int d = 0; d <= 6; d += 2) {
      const GradedBasis& gb = coh.basis(d);
      for (std::size_t i = 0; i < gb.ordinary_rank(); ++i) {
        IntVector e(gb.ordinary_rank());
        e[i] = 1;
        CHECK(coh.express(gb.ordinary[i], d).coordinates == e);
      }
    }
  }
}

TEST_CASE("mA maps to zero") {
  Example ex = builtin("tolman");
  GkmCohomology coh(ex.graph);
  FixedPointClass y2;
  for (std::size_t v = 0; v < 6; ++v) y2.components.push_back(IntPolynomial::variable(2, 1));
  for (const auto& c : coh.basis(2).equivariant)
    CHECK(is_zero(coh.express(y2 * c, 4).coordinates));
}

TEST_CASE("presentation in the X generators") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  Presentation pres(coh, bindings(ex));
  CHECK(pres.generator_names() == std::vector<std::string>{"X1", "X2"});
  CHECK(pres.basis_labels(0) == std::vector<std::string>{"1"});
  CHECK(pres.basis_labels(2) == std::vector<std::string>{"X1", "X2"});
  CHECK(pres.basis_labels(4) == std::vector<std::string>{"X1^2", "X1*X2"});
  CHECK(pres.basis_labels(6) == std::vector<std::string>{"X1^2*X2"});
  for (int d = 0; d <= 6; d += 2) CHECK(pres.monomial_basis(d));
  RingElement x = evaluate_ring_map(coh, pres.generators(), X("X2^2"));
  CHECK(pres.coordinates(x) == IntVector{-1, -3});
  CHECK(pres.render(x) == "-X1^2 - 3*X1*X2");
  CHECK(pres.as_polynomial(x) == X("-X1^2 - 3*X1*X2"));
}

TEST_CASE("default presentation") {
  GkmCohomology coh(builtin("tolman").graph);
  Presentation pres = Presentation::defaults(coh);
  CHECK(pres.generator_names() == std::vector<std::string>{"x1", "x2"});
  CHECK(pres.basis_lifts(2).size() == 2);
  for (int d = 0; d <= 6; d += 2)
    for (const auto& l : pres.basis_lifts(d)) CHECK(is_gkm_class(coh.graph(), l));
}

TEST_CASE("generators must be degree-2 GKM classes") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  auto gens = bindings(ex);
  gens[0].value.components[0] += IntPolynomial::variable(2, 0);
  CHECK_THROWS_AS(Presentation(coh, gens), GkmError);
  auto sq = bindings(ex);
  sq[1].value = sq[1].value * sq[1].value;
  CHECK_THROWS_AS(Presentation(coh, sq), GkmError);
}

TEST_CASE("torsion in A/mA is reported") {
  // K4 with labels for which A is not free over Z[Y1, Y2]
  std::vector<Edge> es = {GkmGraph::make_edge(0, 1, {-1, 3}, true),
                          GkmGraph::make_edge(1, 2, {2, 3}, true),
                          GkmGraph::make_edge(2, 3, {-3, -3}, true),
                          GkmGraph::make_edge(3, 0, {-1, 3}, true),
                          GkmGraph::make_edge(0, 2, {-2, -2}, true),
                          GkmGraph::make_edge(1, 3, {-3, -1}, true)};
  GkmGraph g(2, true, {"a", "b", "c", "d"}, es);
  try {
    GkmCohomology coh(g);
    FAIL("expected a torsion error");
  } catch (const GkmError& e) {
    CHECK(e.kind() == ErrorKind::kTorsionInQuotient);
  }
}

TEST_CASE("odd degrees and ill-fitting classes are rejected") {
  const GkmGraph g = builtin("eschenburg").graph;
  CHECK_THROWS(gkm_basis(g, 3));
  GkmCohomology coh(g);
  CHECK_THROWS(coh.basis(3));
  FixedPointClass short_class;
  short_class.components.push_back(IntPolynomial::constant(2, 1));
  CHECK_THROWS_AS(is_gkm_class(g, short_class), GkmError);
}

TEST_CASE("fixed-point class helpers") {
  const GkmGraph g = builtin("eschenburg").graph;
  FixedPointClass one = FixedPointClass::constant(g, 1);
  CHECK(one.degree() == 0);
  CHECK(is_gkm_class(g, one));
  FixedPointClass mixed = one + FixedPointClass::parse(g, {"Y1", "Y1", "Y1", "Y1", "Y1", "Y1"});
  CHECK(mixed.max_degree() == 2);
  CHECK_THROWS(mixed.degree());
  CHECK(mixed.homogeneous_component(0) == one);
  CHECK((one * BigInt(0)).is_zero());
  CHECK((one * BigInt(0)).degree() == -1);
  CHECK_THROWS(FixedPointClass::parse(g, {"Y1"}));
}
