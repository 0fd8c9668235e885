#include "gkm/errors.hpp"
#include "gkm/graph.hpp"

namespace gkm {

namespace {

XRay integer_xray(std::vector<std::string> names,
                  const std::vector<std::pair<long long, long long>>& coords,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  XRay x;
  x.torus_rank = 2;
  x.vertices = std::move(names);
  for (const auto& [a, b] : coords) x.positions.push_back({Rational(a), Rational(b)});
  x.edges = edges;
  return x;
}

// Moment images of the six fixed points p1..p6 and the nine one-dimensional
// strata joining them.
XRay eschenburg_xray() {
  return integer_xray({"p1", "p2", "p3", "p4", "p5", "p6"},
                      {{-2, 1}, {1, -1}, {2, 0}, {2, -3}, {0, 0}, {1, 1}},
                      {{0, 5}, {0, 3}, {0, 4}, {1, 3}, {1, 5}, {1, 4}, {2, 3}, {2, 5}, {2, 4}});
}

XRay tolman_xray() {
  return integer_xray({"q1", "q2", "q3", "q4", "q5", "q6"},
                      {{-2, 0}, {-1, 0}, {-2, -3}, {0, -2}, {2, -3}, {-1, -2}},
                      {{0, 1}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 4}, {1, 5}, {5, 3}, {5, 2}});
}

std::vector<GeneratorBinding> eschenburg_generators() {
  return {
      {"X1", {"Y1-Y2", "-Y2", "-Y1", "-Y1+Y2", "-Y1", "-Y2"}},
      {"X2", {"-Y1", "-Y1+Y2", "-Y2", "-Y2", "Y1-Y2", "-Y1"}},
  };
}

// Fixed points of CP1 x CP2 named by their nonzero homogeneous coordinates.
GkmGraph cp1xcp2_graph() {
  std::vector<std::string> names{"x0y0", "x0y1", "x0y2", "x1y0", "x1y1", "x1y2"};
  auto idx = [](int x, int y) { return static_cast<std::size_t>(3 * x + y); };
  std::vector<Edge> edges;
  auto add = [&](std::size_t a, std::size_t b, long long w1, long long w2) {
    edges.push_back(GkmGraph::make_edge(a, b, IntVector{w1, w2}, true));
  };
  // CP1 direction: x1/x0 scales by s^{-1}.
  for (int y = 0; y < 3; ++y) add(idx(0, y), idx(1, y), -1, 0);
  // CP2 triangle: y1/y0 ~ t/s, y2/y0 ~ 1/s, y2/y1 ~ 1/t.
  for (int x = 0; x < 2; ++x) {
    add(idx(x, 0), idx(x, 1), -1, 1);
    add(idx(x, 0), idx(x, 2), -1, 0);
    add(idx(x, 1), idx(x, 2), 0, -1);
  }
  return GkmGraph(2, true, std::move(names), std::move(edges));
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"eschenburg", "eschenburg-swapped", "tolman", "woodward", "cp1xcp2"};
}

Example builtin(const std::string& name) {
  if (name == "eschenburg") {
    XRay x = eschenburg_xray();
    return {name, "Hamiltonian T^2-action on the Eschenburg flag SU(3)//T^2",
            graph_from_xray(x), x, eschenburg_generators()};
  }
  if (name == "eschenburg-swapped") {
    // Fiber identified through the second column: (p1 p5)(p2 p4)(p3 p6).
    const std::vector<std::size_t> swap{4, 3, 5, 1, 0, 2};
    XRay base = eschenburg_xray();
    XRay x = base;
    for (std::size_t v = 0; v < swap.size(); ++v) x.positions[v] = base.positions[swap[v]];
    for (auto& [a, b] : x.edges) {
      a = swap[a];
      b = swap[b];
    }
    return {name, "Eschenburg flag with the opposite fiber identification",
            graph_from_xray(x), x, eschenburg_generators()};
  }
  if (name == "tolman" || name == "woodward") {
    XRay x = tolman_xray();
    std::string desc = name == "tolman"
                           ? "Tolman's Hamiltonian non-Kaehler T^2-manifold"
                           : "Woodward's multiplicity-free example (same x-ray as Tolman's)";
    return {name, desc, graph_from_xray(x), x, {}};
  }
  if (name == "cp1xcp2") {
    return {name, "CP1 x CP2 with (s,t).([x0:x1],[y0:y1:y2]) = ([s x0:x1],[s y0:t y1:y2]); not GKM",
            cp1xcp2_graph(), std::nullopt, {}};
  }
  throw GkmError(ErrorKind::kUnknownExample, "unknown example '" + name + "'");
}

}  // namespace gkm
