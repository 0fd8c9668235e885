#pragma once

// GKM graphs, x-rays, validity checks, built-in examples and the
// isomorphism search over (vertex bijection, torus automorphism) pairs.

#include "gkm/intlinalg.hpp"
#include "gkm/polyring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// Canonical representative of a weight up to sign: first nonzero entry
/// positive.
IntVector canonical_sign(const IntVector& w);

bool parallel(const IntVector& a, const IntVector& b);

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  IntVector weight_at_from;
  IntVector weight_at_to;
};

/// One end of an edge, seen from `vertex`.
struct HalfEdge {
  std::size_t edge = 0;
  std::size_t vertex = 0;
  std::size_t other = 0;
  IntVector weight;  // label at `vertex`, pointing toward `other`
};

class GkmGraph {
 public:
  GkmGraph() = default;
  /// Edges are given with their label at `from`. Signed graphs store
  /// -label at `to`; unsigned graphs store the canonical sign at both ends.
  GkmGraph(std::size_t torus_rank, bool is_signed, std::vector<std::string> vertices,
           std::vector<Edge> edges);

  /// Adds an edge with its label at `from`, deriving the label at `to`.
  static Edge make_edge(std::size_t from, std::size_t to, IntVector weight_at_from,
                        bool is_signed);

  std::size_t torus_rank() const { return torus_rank_; }
  bool is_signed() const { return signed_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<HalfEdge>& incident(std::size_t v) const { return incident_[v]; }

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  /// Common valence, or nullopt if vertices differ.
  std::optional<std::size_t> valence() const;
  bool all_labels_primitive() const;

  /// The same graph with labels taken up to sign.
  GkmGraph forget_signs() const;

  /// Real dimension 2n is twice the valence.
  std::size_t half_dimension() const;

 private:
  std::size_t torus_rank_ = 0;
  bool signed_ = false;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incident_;
};

enum class ViolationKind {
  kBadLabel,
  kNotRegular,
  kDependentWeightsAt,
  kSignInconsistency,
  kDisconnected,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidityReport {
  std::vector<Violation> violations;
  bool all_primitive = true;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

std::string to_string(ViolationKind kind);

ValidityReport validate(const GkmGraph& g);

/// Throws GkmError(kInvalidGraph) listing every violation.
void require_valid(const GkmGraph& g);

struct XRay {
  std::size_t torus_rank = 0;
  std::vector<std::string> vertices;
  std::vector<std::vector<Rational>> positions;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Signed graph whose label at i(e) is the primitive direction from
/// position(i(e)) toward position(t(e)).
GkmGraph graph_from_xray(const XRay& xray);

struct GraphIso {
  std::vector<std::size_t> vertex_map;
  /// Acts on weight vectors: alpha_{phi(e)} = psi * alpha_e.
  IntMatrix psi;

  bool operator==(const GraphIso&) const = default;
};

/// Checks a candidate against both graphs: bijection, unimodular psi and
/// label compatibility (exact when `is_signed`, up to sign otherwise).
bool verify_isomorphism(const GkmGraph& g1, const GkmGraph& g2, const GraphIso& iso,
                        bool is_signed);

/// Every isomorphism g1 -> g2, sorted by (vertex_map, psi). Throws
/// GkmError(kMismatch) on differing rank or valence, and when signed
/// matching is requested for an unsigned graph.
std::vector<GraphIso> find_isomorphisms(const GkmGraph& g1, const GkmGraph& g2,
                                        bool is_signed);

/// Named degree-2 classes shipped with an example, one Y-polynomial per
/// vertex in vertex order.
struct GeneratorBinding {
  std::string name;
  std::vector<std::string> components;
};

struct Example {
  std::string name;
  std::string description;
  GkmGraph graph;
  std::optional<XRay> xray;
  std::vector<GeneratorBinding> generators;
};

std::vector<std::string> builtin_names();

/// Throws GkmError(kUnknownExample).
Example builtin(const std::string& name);

/// Relabels the graph: vertex v of the result carries the star of
/// vertex perm[v] of `g`.
GkmGraph permute_vertices(const GkmGraph& g, const std::vector<std::size_t>& perm);

}  // namespace gkm
