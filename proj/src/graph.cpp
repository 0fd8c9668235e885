#include "gkm/graph.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace gkm {

IntVector canonical_sign(const IntVector& w) {
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x > 0) return w;
    IntVector out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[i];
    return out;
  }
  return w;
}

bool parallel(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

namespace {

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

Edge GkmGraph::make_edge(std::size_t from, std::size_t to, IntVector weight_at_from,
                         bool is_signed) {
  Edge e{from, to, {}, {}};
  if (is_signed) {
    e.weight_at_to = negated(weight_at_from);
    e.weight_at_from = std::move(weight_at_from);
  } else {
    e.weight_at_from = canonical_sign(weight_at_from);
    e.weight_at_to = e.weight_at_from;
  }
  return e;
}

GkmGraph::GkmGraph(std::size_t torus_rank, bool is_signed, std::vector<std::string> vertices,
                   std::vector<Edge> edges)
    : torus_rank_(torus_rank),
      signed_(is_signed),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      incident_(vertices_.size()) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.from >= vertices_.size() || e.to >= vertices_.size())
      throw GkmError(ErrorKind::kInvalidGraph, "edge endpoint out of range");
    if (e.from == e.to)
      throw GkmError(ErrorKind::kInvalidGraph, "loop at vertex " + vertices_[e.from]);
    incident_[e.from].push_back({i, e.from, e.to, e.weight_at_from});
    incident_[e.to].push_back({i, e.to, e.from, e.weight_at_to});
  }
}

std::optional<std::size_t> GkmGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> GkmGraph::valence() const {
  if (incident_.empty()) return std::nullopt;
  std::size_t n = incident_.front().size();
  for (const auto& star : incident_)
    if (star.size() != n) return std::nullopt;
  return n;
}

std::size_t GkmGraph::half_dimension() const {
  auto n = valence();
  if (!n) throw GkmError(ErrorKind::kInvalidGraph, "graph is not regular");
  return *n;
}

bool GkmGraph::all_labels_primitive() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return content(e.weight_at_from) == 1; });
}

GkmGraph GkmGraph::forget_signs() const {
  std::vector<Edge> edges;
  for (const auto& e : edges_) edges.push_back(make_edge(e.from, e.to, e.weight_at_from, false));
  return GkmGraph(torus_rank_, false, vertices_, std::move(edges));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadLabel: return "BadLabel";
    case ViolationKind::kNotRegular: return "NotRegular";
    case ViolationKind::kDependentWeightsAt: return "DependentWeightsAt";
    case ViolationKind::kSignInconsistency: return "SignInconsistency";
    case ViolationKind::kDisconnected: return "Disconnected";
  }
  return "Unknown";
}

std::string ValidityReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += to_string(v.kind) + "(" + v.detail + ")";
  }
  return out;
}

namespace {

std::string vector_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

}  // namespace

ValidityReport validate(const GkmGraph& g) {
  ValidityReport report;
  auto add = [&](ViolationKind k, std::string detail) {
    report.violations.push_back({k, std::move(detail)});
  };
  const auto& names = g.vertices();

  bool labels_ok = true;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    std::string edge_name = names[e.from] + "-" + names[e.to];
    for (const IntVector* w : {&e.weight_at_from, &e.weight_at_to}) {
      if (w->size() != g.torus_rank() || is_zero(*w)) {
        add(ViolationKind::kBadLabel, edge_name + " label " + vector_text(*w));
        labels_ok = false;
      }
    }
    if (!labels_ok) continue;
    if (content(e.weight_at_from) != 1) report.all_primitive = false;
    bool consistent = g.is_signed() ? e.weight_at_to == negated(e.weight_at_from)
                                    : canonical_sign(e.weight_at_to) ==
                                          canonical_sign(e.weight_at_from);
    if (!consistent) add(ViolationKind::kSignInconsistency, edge_name);
  }

  if (g.vertex_count() > 0 && !g.valence()) {
    std::string detail;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      detail += (v ? ", " : "") + names[v] + ":" + std::to_string(g.incident(v).size());
    add(ViolationKind::kNotRegular, detail);
  }

  if (labels_ok) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto& star = g.incident(v);
      for (std::size_t a = 0; a < star.size(); ++a)
        for (std::size_t b = a + 1; b < star.size(); ++b)
          if (parallel(star[a].weight, star[b].weight))
            add(ViolationKind::kDependentWeightsAt,
                names[v] + ": " + vector_text(star[a].weight) + " and " +
                    vector_text(star[b].weight));
    }
  }

  if (g.vertex_count() > 0) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& h : g.incident(v))
        if (!seen[h.other]) {
          seen[h.other] = true;
          stack.push_back(h.other);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      add(ViolationKind::kDisconnected, "graph has more than one component");
  }
  return report;
}

void require_valid(const GkmGraph& g) {
  ValidityReport r = validate(g);
  if (!r.ok())
    throw GkmError(ErrorKind::kInvalidGraph, "graph violates the GKM conditions: " + r.summary());
}

GkmGraph graph_from_xray(const XRay& xray) {
  const std::size_t nv = xray.vertices.size();
  if (xray.positions.size() != nv)
    throw GkmError(ErrorKind::kInvalidXRay, "one position per vertex required");
  for (std::size_t i = 0; i < nv; ++i) {
    if (xray.positions[i].size() != xray.torus_rank)
      throw GkmError(ErrorKind::kInvalidXRay,
                     "position of " + xray.vertices[i] + " has wrong length");
    for (std::size_t j = 0; j < i; ++j)
      if (xray.positions[i] == xray.positions[j])
        throw GkmError(ErrorKind::kInvalidXRay, "vertices " + xray.vertices[j] + " and " +
                                                    xray.vertices[i] + " coincide");
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : xray.edges) {
    if (a >= nv || b >= nv)
      throw GkmError(ErrorKind::kInvalidXRay, "edge endpoint out of range");
    std::vector<Rational> d(xray.torus_rank);
    for (std::size_t i = 0; i < xray.torus_rank; ++i)
      d[i] = xray.positions[b][i] - xray.positions[a][i];
    BigInt scale = 1;
    for (const auto& x : d) {
      BigInt den = denominator(x);
      scale = scale / gcd(scale, den) * den;
    }
    IntVector w(xray.torus_rank);
    for (std::size_t i = 0; i < xray.torus_rank; ++i)
      w[i] = numerator(Rational(d[i] * scale));
    if (is_zero(w))
      throw GkmError(ErrorKind::kInvalidXRay, "edge " + xray.vertices[a] + "-" +
                                                  xray.vertices[b] + " has zero displacement");
    edges.push_back(GkmGraph::make_edge(a, b, primitive_part(w), true));
  }
  GkmGraph g(xray.torus_rank, true, xray.vertices, std::move(edges));
  std::size_t n = g.incident(0).size();
  for (std::size_t v = 0; v < nv; ++v)
    if (g.incident(v).size() != n)
      throw GkmError(ErrorKind::kInvalidXRay,
                     "x-ray vertices have differing numbers of incident edges");
  ValidityReport report = validate(g);
  if (!report.ok())
    throw GkmError(ErrorKind::kInvalidXRay,
                   "graph derived from the x-ray violates the GKM conditions: " +
                       report.summary());
  return g;
}

bool verify_isomorphism(const GkmGraph& g1, const GkmGraph& g2, const GraphIso& iso,
                        bool is_signed) {
  const std::size_t nv = g1.vertex_count();
  if (g2.vertex_count() != nv || iso.vertex_map.size() != nv) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  if (iso.psi.rows() != g1.torus_rank() || iso.psi.cols() != g1.torus_rank()) return false;
  if (g2.torus_rank() != g1.torus_rank()) return false;
  if (!is_unimodular(iso.psi)) return false;
  std::vector<bool> hit(nv, false);
  for (std::size_t v : iso.vertex_map) {
    if (v >= nv || hit[v]) return false;
    hit[v] = true;
  }
  std::vector<bool> used(g2.edge_count(), false);
  for (const Edge& e : g1.edges()) {
    std::size_t a = iso.vertex_map[e.from], b = iso.vertex_map[e.to];
    IntVector target = iso.psi * e.weight_at_from;
    bool matched = false;
    for (const HalfEdge& h : g2.incident(a)) {
      if (h.other != b || used[h.edge]) continue;
      bool equal = is_signed ? h.weight == target
                             : canonical_sign(h.weight) == canonical_sign(target);
      if (equal) {
        used[h.edge] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

// Integral solution of psi * a = b for square invertible a, or nullopt.
std::optional<IntMatrix> solve_psi(const IntMatrix& a, const IntMatrix& b) {
  // psi = b * a^{-1}; a^T psi^T = b^T, solved column by column over Z.
  IntegerSolver solver(a.transpose());
  IntMatrix bt = b.transpose();
  IntMatrix psi_t(a.cols(), b.rows());
  for (std::size_t j = 0; j < bt.cols(); ++j) {
    auto x = solver.solve(bt.column(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < x->size(); ++i) psi_t(i, j) = (*x)[i];
  }
  return psi_t.transpose();
}

bool iso_less(const GraphIso& x, const GraphIso& y) {
  if (x.vertex_map != y.vertex_map) return x.vertex_map < y.vertex_map;
  for (std::size_t i = 0; i < x.psi.rows(); ++i)
    for (std::size_t j = 0; j < x.psi.cols(); ++j)
      if (x.psi(i, j) != y.psi(i, j)) return x.psi(i, j) < y.psi(i, j);
  return false;
}

// Extends phi(start) = image along the graph, with psi fixed.
std::optional<GraphIso> propagate(const GkmGraph& g1, const GkmGraph& g2, const IntMatrix& psi,
                                  std::size_t start, std::size_t image, bool is_signed) {
  const std::size_t nv = g1.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(nv, kUnset);
  std::vector<bool> taken(nv, false);
  map[start] = image;
  taken[image] = true;
  std::queue<std::size_t> queue;
  queue.push(start);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    const auto& star2 = g2.incident(map[v]);
    for (const HalfEdge& h : g1.incident(v)) {
      IntVector target = psi * h.weight;
      const HalfEdge* match = nullptr;
      for (const HalfEdge& h2 : star2) {
        bool equal = is_signed ? h2.weight == target
                               : canonical_sign(h2.weight) == canonical_sign(target);
        if (!equal) continue;
        if (match) return std::nullopt;  // ambiguous: labels not independent
        match = &h2;
      }
      if (!match) return std::nullopt;
      if (map[h.other] == kUnset) {
        if (taken[match->other]) return std::nullopt;
        map[h.other] = match->other;
        taken[match->other] = true;
        queue.push(h.other);
      } else if (map[h.other] != match->other) {
        return std::nullopt;
      }
    }
  }
  if (std::find(map.begin(), map.end(), kUnset) != map.end()) return std::nullopt;
  return GraphIso{std::move(map), psi};
}

}  // namespace

std::vector<GraphIso> find_isomorphisms(const GkmGraph& g1, const GkmGraph& g2,
                                        bool is_signed) {
  if (g1.torus_rank() != g2.torus_rank())
    throw GkmError(ErrorKind::kMismatch, "graphs have different torus rank");
  if (g1.valence() != g2.valence() || !g1.valence())
    throw GkmError(ErrorKind::kMismatch, "graphs have different (or irregular) valence");
  if (is_signed && (!g1.is_signed() || !g2.is_signed()))
    throw GkmError(ErrorKind::kMismatch, "signed isomorphism requested for an unsigned graph");

  std::vector<GraphIso> result;
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return result;
  if (g1.vertex_count() == 0) return result;
  const std::size_t k = g1.torus_rank();

  // k labels at the base vertex with full rank pin down psi.
  const std::size_t base = 0;
  const auto& star = g1.incident(base);
  std::vector<std::size_t> chosen;
  {
    std::vector<IntVector> picked;
    for (std::size_t i = 0; i < star.size() && chosen.size() < k; ++i) {
      picked.push_back(star[i].weight);
      IntMatrix m = IntMatrix::from_columns(k, picked);
      if (smith_normal_form(m).rank == picked.size()) {
        chosen.push_back(i);
      } else {
        picked.pop_back();
      }
    }
  }
  if (chosen.size() < k)
    throw GkmError(ErrorKind::kMismatch,
                   "labels at " + g1.vertices()[base] + " do not span the weight lattice");
  std::vector<IntVector> source_cols;
  for (std::size_t i : chosen) source_cols.push_back(star[i].weight);
  const IntMatrix source = IntMatrix::from_columns(k, source_cols);

  for (std::size_t w = 0; w < g2.vertex_count(); ++w) {
    const auto& star2 = g2.incident(w);
    std::vector<std::size_t> assign(k);
    std::vector<bool> used(star2.size(), false);
    std::function<void(std::size_t)> choose = [&](std::size_t slot) {
      if (slot == k) {
        const std::size_t sign_patterns = is_signed ? 1u : (1u << k);
        for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
          std::vector<IntVector> cols;
          for (std::size_t s = 0; s < k; ++s) {
            IntVector t = star2[assign[s]].weight;
            if (mask & (1u << s)) t = negated(t);
            cols.push_back(std::move(t));
          }
          auto psi = solve_psi(source, IntMatrix::from_columns(k, cols));
          if (!psi || !is_unimodular(*psi)) continue;
          auto iso = propagate(g1, g2, *psi, base, w, is_signed);
          if (iso && verify_isomorphism(g1, g2, *iso, is_signed)) result.push_back(std::move(*iso));
        }
        return;
      }
      for (std::size_t j = 0; j < star2.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        assign[slot] = j;
        choose(slot + 1);
        used[j] = false;
      }
    };
    choose(0);
  }
  std::sort(result.begin(), result.end(), iso_less);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

GkmGraph permute_vertices(const GkmGraph& g, const std::vector<std::size_t>& perm) {
  const std::size_t nv = g.vertex_count();
  if (perm.size() != nv) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> inverse(nv, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (perm[v] >= nv || inverse[perm[v]] != nv)
      throw std::invalid_argument("not a permutation");
    inverse[perm[v]] = v;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({inverse[e.from], inverse[e.to], e.weight_at_from, e.weight_at_to});
  return GkmGraph(g.torus_rank(), g.is_signed(), g.vertices(), std::move(edges));
}

}  // namespace gkm
