#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/errors.hpp"
#include "gkm/wjz.hpp"

#include <random>

using namespace gkm;

namespace {

Presentation x_presentation(const GkmCohomology& coh, const Example& ex) {
  std::vector<NamedClass> gens;
  for (const auto& b : ex.generators)
    gens.push_back({b.name, FixedPointClass::parse(ex.graph, b.components)});
  return Presentation(coh, gens);
}

InvariantSystem system_of(const std::string& name) {
  Example ex = builtin(name);
  GkmCohomology coh(ex.graph);
  Presentation pres = Presentation::defaults(coh);
  return invariant_system(coh, pres).system;
}

// S' with Phi an equivalence S -> S': mu'(Phi x, ...) = mu(x, ...), p'(Phi x) = p(x)
InvariantSystem transport(const InvariantSystem& s, const IntMatrix& phi) {
  IntMatrix inv = unimodular_inverse(phi);
  InvariantSystem t = s;
  const std::size_t r = s.rank;
  std::vector<IntVector> cols;
  for (std::size_t a = 0; a < r; ++a) cols.push_back(inv.column(a));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        t.mu[(a * r + b) * r + c] = s.cubic(cols[a], cols[b], cols[c]);
  for (std::size_t a = 0; a < r; ++a) {
    BigInt v = 0;
    for (std::size_t b = 0; b < r; ++b) v += s.p[b] * inv(b, a);
    t.p[a] = v;
  }
  for (std::size_t a = 0; a < r; ++a) {
    BigInt v = 0;
    for (std::size_t b = 0; b < r; ++b) v += phi(a, b) * s.w[b];
    t.w[a] = static_cast<int>(((v % 2) + 2) % 2);
  }
  return t;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t r, int steps) {
  IntMatrix m = IntMatrix::identity(r);
  std::uniform_int_distribution<std::size_t> idx(0, r - 1);
  std::uniform_int_distribution<int> k(-1, 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      m.negate_row(i);
    } else {
      m.add_row_multiple(i, j, k(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("eschenburg invariants in X1, X2") {
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  InvariantExtraction e = invariant_system(coh, x_presentation(coh, ex));
  const InvariantSystem& s = e.system;
  CHECK(e.warnings.empty());
  CHECK(s.rank == 2);
  CHECK(s.basis == std::vector<std::string>{"X1", "X2"});
  CHECK(s.cubic(0, 0, 0) == 2);
  CHECK(s.cubic(0, 0, 1) == -1);
  CHECK(s.cubic(0, 1, 1) == 1);
  CHECK(s.cubic(1, 1, 1) == -2);
  CHECK(s.w == std::vector<int>{0, 0});
  CHECK(s.p == IntVector{8, -8});
  CHECK(s.is_symmetric());
}

TEST_CASE("cubic form from the ring relations") {
  // In Z[X1,X2]/(r1, r2): X1^3 = -2 X1^2X2, X1X2^2 = -X1^2X2, X2^3 = 2 X1^2X2,
  // and c3 = -6 X1^2X2 with <c3> = 6 fixes <X1^2X2> = -1.
  const BigInt top = -1;
  Example ex = builtin("eschenburg");
  GkmCohomology coh(ex.graph);
  const InvariantSystem s = invariant_system(coh, x_presentation(coh, ex)).system;
  CHECK(s.cubic(0, 0, 0) == -2 * top);
  CHECK(s.cubic(0, 0, 1) == top);
  CHECK(s.cubic(0, 1, 1) == -top);
  CHECK(s.cubic(1, 1, 1) == 2 * top);
  // p1 = -8 X1X2
  CHECK(s.p[0] == -8 * s.cubic(0, 0, 1));
  CHECK(s.p[1] == -8 * s.cubic(0, 1, 1));
  // r1 = -X1^2 - 3X1X2 - X2^2 pairs to zero with H^2
  for (std::size_t c = 0; c < 2; ++c)
    CHECK(-s.cubic(0, 0, c) - 3 * s.cubic(0, 1, c) - s.cubic(1, 1, c) == 0);
}

TEST_CASE("fiber swap exchanges the coordinates") {
  Example ex = builtin("eschenburg-swapped");
  GkmCohomology coh(ex.graph);
  const InvariantSystem s = invariant_system(coh, x_presentation(coh, ex)).system;
  CHECK(s.cubic(0, 0, 0) == -2);
  CHECK(s.cubic(1, 1, 1) == 2);
  CHECK(s.p == IntVector{-8, 8});
}

TEST_CASE("systems are symmetric with consistent orientation") {
  for (const std::string name : {"eschenburg", "eschenburg-swapped", "tolman", "woodward"}) {
    InvariantSystem s = system_of(name);
    CHECK(s.is_symmetric());
    CHECK(s.rank == 2);
    CHECK(s.w == std::vector<int>{0, 0});
    InvariantSystem r = s.reversed();
    CHECK(r.reversed() == s);
  }
}

TEST_CASE("self equivalence is the identity") {
  InvariantSystem s = system_of("eschenburg");
  EquivalenceResult r = are_equivalent(s, s);
  REQUIRE(r.status == EquivalenceStatus::kFound);
  CHECK(*r.phi == IntMatrix::identity(2));
}

TEST_CASE("tolman and eschenburg systems are equivalent") {
  InvariantSystem t = system_of("tolman"), e = system_of("eschenburg");
  EquivalenceResult r = are_equivalent(t, e);
  REQUIRE(r.status == EquivalenceStatus::kFound);
  CHECK(verify_equivalence(t, e, *r.phi));
  EquivalenceResult back = are_equivalent(e, t);
  REQUIRE(back.status == EquivalenceStatus::kFound);
  CHECK(verify_equivalence(e, t, *back.phi));
}

TEST_CASE("search recovers random changes of basis") {
  std::mt19937 rng(6);
  InvariantSystem s = system_of("eschenburg");
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix phi = random_unimodular(rng, 2, 6);
    InvariantSystem t = transport(s, phi);
    REQUIRE(verify_equivalence(s, t, phi));
    EquivalenceResult r = are_equivalent(s, t, 10);
    bool small = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (abs(phi(i, j)) > 10) small = false;
    if (small) REQUIRE(r.status == EquivalenceStatus::kFound);
    if (r.status == EquivalenceStatus::kFound) REQUIRE(verify_equivalence(s, t, *r.phi));
    REQUIRE(r.status != EquivalenceStatus::kProvablyDistinct);
  }
}

TEST_CASE("lexicographically smallest equivalence") {
  InvariantSystem t = system_of("tolman"), e = system_of("eschenburg");
  EquivalenceResult r = are_equivalent(t, e, 3);
  REQUIRE(r.status == EquivalenceStatus::kFound);
  // every equivalence with entries in [-3, 3], column-major lexicographic
  std::vector<std::vector<int>> all;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          if (verify_equivalence(t, e, IntMatrix{{a, c}, {b, d}})) all.push_back({a, b, c, d});
  REQUIRE_FALSE(all.empty());
  const IntMatrix& phi = *r.phi;
  std::vector<int> got = {static_cast<int>(phi(0, 0)), static_cast<int>(phi(1, 0)),
                          static_cast<int>(phi(0, 1)), static_cast<int>(phi(1, 1))};
  CHECK(got == *std::min_element(all.begin(), all.end()));
}

TEST_CASE("provably distinct systems") {
  InvariantSystem s = system_of("eschenburg");
  InvariantSystem doubled = s;
  for (auto& x : doubled.p) x *= 2;
  EquivalenceResult r = are_equivalent(s, doubled);
  CHECK(r.status == EquivalenceStatus::kProvablyDistinct);
  CHECK(r.reason.find("gcd of p1") != std::string::npos);

  InvariantSystem w = s;
  w.w = {1, 0};
  CHECK(are_equivalent(s, w).status == EquivalenceStatus::kProvablyDistinct);

  InvariantSystem mu = s;
  for (auto& x : mu.mu) x *= 3;
  CHECK(are_equivalent(s, mu).status == EquivalenceStatus::kProvablyDistinct);

  InvariantSystem small;
  small.rank = 1;
  small.mu = {1};
  small.w = {0};
  small.p = {0};
  small.basis = {"x"};
  CHECK(are_equivalent(s, small).status == EquivalenceStatus::kProvablyDistinct);

  // same gcds and w, different parity pattern of cubes
  InvariantSystem a = small, b = small;
  a.rank = b.rank = 2;
  a.w = b.w = {0, 0};
  a.p = b.p = {0, 0};
  a.basis = b.basis = {"x", "y"};
  a.mu = {1, 0, 0, 0, 0, 0, 0, 0};  // x^3
  b.mu = {1, 1, 1, 0, 1, 0, 0, 0};  // x^3 + 3x^2y
  EquivalenceResult ab = are_equivalent(a, b);
  CHECK(ab.status == EquivalenceStatus::kProvablyDistinct);
  CHECK(ab.reason.find("odd cube") != std::string::npos);
}

TEST_CASE("search failure is inconclusive, never distinct") {
  InvariantSystem s = system_of("eschenburg");
  EquivalenceResult r = are_equivalent(s, s, 0);
  CHECK(r.status == EquivalenceStatus::kNotFoundWithinBound);
  InvariantSystem far = transport(s, IntMatrix{{1, 7}, {0, 1}});
  EquivalenceResult f = are_equivalent(s, far, 1);
  CHECK(f.status != EquivalenceStatus::kProvablyDistinct);
}

TEST_CASE("graph isomorphisms induce equivalences") {
  Example t = builtin("tolman"), e = builtin("eschenburg");
  GkmCohomology ct(t.graph), ce(e.graph);
  Presentation pt = Presentation::defaults(ct), pe = x_presentation(ce, e);
  InvariantSystem st = invariant_system(ct, pt).system, se = invariant_system(ce, pe).system;
  auto isos = find_isomorphisms(t.graph, e.graph, true);
  REQUIRE_FALSE(isos.empty());
  for (const auto& iso : isos) {
    IntMatrix phi = equivalence_from_isomorphism(ct, pt, ce, pe, iso);
    CHECK(verify_equivalence(st, se, phi));
    // pulled-back classes satisfy the congruences of the source graph
    for (const auto& x : pe.basis_lifts(2)) CHECK(is_gkm_class(t.graph, pull_back(x, iso)));
  }
}

TEST_CASE("diffeomorphism verdicts among the built-ins") {
  DiffeoOptions both{true, true, 10};
  const std::vector<std::string> names = {"tolman", "woodward", "eschenburg"};
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      CAPTURE(names[i]);
      CAPTURE(names[j]);
      DiffeoResult r = diffeo_verdict(builtin(names[i]).graph, builtin(names[j]).graph, both);
      CHECK(r.verdict == Verdict::kDiffeomorphic);
      REQUIRE(r.equivalence.phi);
      CHECK(verify_equivalence(r.system1, r.system2, *r.equivalence.phi));
    }
  DiffeoResult te = diffeo_verdict(builtin("tolman").graph, builtin("eschenburg").graph, both);
  REQUIRE(te.isomorphism);
  REQUIRE(te.isomorphism_phi);
  CHECK(verify_equivalence(te.system1, te.system2, *te.isomorphism_phi));
  CHECK(te.assumptions.size() == 3);

  DiffeoResult ee = diffeo_verdict(builtin("eschenburg").graph, builtin("eschenburg").graph, both);
  CHECK(ee.verdict == Verdict::kDiffeomorphic);
  CHECK(*ee.equivalence.phi == IntMatrix::identity(2));
}

TEST_CASE("missing assumptions leave the verdict open") {
  for (auto opts : {DiffeoOptions{false, false, 10}, DiffeoOptions{true, false, 10},
                    DiffeoOptions{false, true, 10}}) {
    DiffeoResult r = diffeo_verdict(builtin("tolman").graph, builtin("eschenburg").graph, opts);
    CHECK(r.verdict == Verdict::kInconclusive);
    CHECK(r.explanation.find("assume") != std::string::npos);
  }
}

TEST_CASE("orientation reversal is reported separately") {
  DiffeoResult r = diffeo_verdict(builtin("eschenburg").graph, builtin("eschenburg").graph,
                                  DiffeoOptions{true, true, 10});
  // -identity carries mu to -mu and p to -p, so the reversed system is equivalent too
  REQUIRE(r.reversed_equivalence.status == EquivalenceStatus::kFound);
  CHECK(verify_equivalence(r.system1, r.system2.reversed(), *r.reversed_equivalence.phi));
}

TEST_CASE("non-primitive labels produce a warning") {
  GkmGraph g = builtin("eschenburg").graph;
  std::vector<Edge> es = g.edges();
  for (auto& e : es) {
    IntVector w = e.weight_at_from;
    for (auto& x : w) x *= 2;
    e = GkmGraph::make_edge(e.from, e.to, w, true);
  }
  GkmGraph doubled(2, true, g.vertices(), es);
  CHECK_FALSE(doubled.all_labels_primitive());
  GkmCohomology coh(doubled);
  InvariantExtraction x = invariant_system(coh, Presentation::defaults(coh));
  CHECK(x.system.rank == 2);
  REQUIRE(x.warnings.size() == 1);
  CHECK(x.warnings[0].find("primitive") != std::string::npos);
}

TEST_CASE("only signed graphs of valence 3") {
  std::vector<Edge> es = {GkmGraph::make_edge(0, 1, {1, -1}, true),
                          GkmGraph::make_edge(0, 2, {1, 0}, true),
                          GkmGraph::make_edge(1, 2, {0, 1}, true)};
  GkmGraph cp2(2, true, {"a", "b", "c"}, es);
  GkmCohomology coh(cp2);
  try {
    invariant_system(coh, Presentation::defaults(coh));
    FAIL("valence 2 accepted");
  } catch (const GkmError& e) {
    CHECK(e.kind() == ErrorKind::kNot6Dimensional);
  }
  GkmCohomology u(builtin("tolman").graph.forget_signs());
  CHECK_THROWS_AS(invariant_system(u, Presentation::defaults(u)), GkmError);
  CHECK_THROWS_AS(diffeo_verdict(cp2, cp2, DiffeoOptions{true, true, 10}), GkmError);
}
