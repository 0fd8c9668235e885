#pragma once

// The GKM subalgebra A of H_T(M^T) = ⊕_p Z[Y1..Yk], computed degree by
// degree from the edge congruences, and the ordinary cohomology A / mA.

#include "gkm/graph.hpp"
#include "gkm/intlinalg.hpp"
#include "gkm/polyring.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkm {

/// One polynomial per vertex, in vertex order.
struct FixedPointClass {
  std::vector<IntPolynomial> components;

  static FixedPointClass constant(const GkmGraph& g, const BigInt& c);
  /// Parses one Y-polynomial per vertex.
  static FixedPointClass parse(const GkmGraph& g, const std::vector<std::string>& texts);

  /// Homogeneous cohomological degree; -1 for the zero class. Throws
  /// std::invalid_argument for inhomogeneous classes.
  int degree() const;
  bool is_zero() const;
  int max_degree() const;
  FixedPointClass homogeneous_component(int d) const;
  /// Flattened coefficient vector over the degree-d monomials, vertex-major.
  IntVector flatten(int d, std::size_t nvars) const;

  FixedPointClass& operator+=(const FixedPointClass& other);
  friend FixedPointClass operator+(FixedPointClass a, const FixedPointClass& b) {
    return a += b;
  }
  friend FixedPointClass operator*(const FixedPointClass& a, const FixedPointClass& b);
  friend FixedPointClass operator*(FixedPointClass a, const BigInt& c);
  bool operator==(const FixedPointClass&) const = default;
};

/// True iff every edge difference c_{i(e)} - c_{t(e)} is divisible by the
/// label over Z[Y]. Throws GkmError(kMismatch) if the class does not fit g.
bool is_gkm_class(const GkmGraph& g, const FixedPointClass& c);

/// Z-basis of A_d, rows of a Hermite normal form.
std::vector<FixedPointClass> gkm_basis(const GkmGraph& g, int d);

struct RingElement {
  int degree = 0;
  IntVector coordinates;
  bool operator==(const RingElement&) const = default;
};

struct GradedBasis {
  int degree = 0;
  std::vector<FixedPointClass> equivariant;  // Z-basis of A_d
  std::vector<FixedPointClass> ordinary;     // lifts of a Z-basis of (A/mA)_d
  IntMatrix projection;                      // A_d coords -> (A/mA)_d coords
  bool ordinary_is_subset = false;           // lifts taken from `equivariant`

  std::size_t equivariant_rank() const { return equivariant.size(); }
  std::size_t ordinary_rank() const { return ordinary.size(); }
};

/// Per-degree bases of A and A/mA for one graph, computed once.
class GkmCohomology {
 public:
  /// Computes every even degree through max(max_degree, 2n). Throws
  /// GkmError(kTorsionInQuotient) when A/mA has torsion or survives above
  /// degree 2n (both violate the free-module hypothesis).
  explicit GkmCohomology(GkmGraph g, int max_degree = -1);

  const GkmGraph& graph() const { return graph_; }
  int top_degree() const { return 2 * static_cast<int>(half_dim_); }
  int max_degree() const { return max_degree_; }
  const GradedBasis& basis(int d) const;

  /// Coordinates in the A_d basis; throws GkmError(kNotInLattice).
  IntVector equivariant_coordinates(const FixedPointClass& c, int d) const;
  /// Image in (A/mA)_d of a homogeneous GKM class of degree d.
  RingElement express(const FixedPointClass& c, int d) const;
  RingElement cup_and_express(const FixedPointClass& a, const FixedPointClass& b) const;

 private:
  GkmGraph graph_;
  std::size_t half_dim_;
  int max_degree_;
  std::map<int, GradedBasis> bases_;
  std::map<int, IntegerSolver> solvers_;
};

GradedBasis ordinary_basis(const GkmGraph& g, int d);

struct NamedClass {
  std::string name;
  FixedPointClass value;
};

/// Substitutes degree-2 generator classes into a homogeneous polynomial in
/// the generators and expresses the vertexwise product in A/mA.
RingElement evaluate_ring_map(const GkmCohomology& coh, const std::vector<NamedClass>& gens,
                              const IntPolynomial& p);

/// Ordinary-cohomology bases written as monomials in chosen degree-2
/// generators. In a degree where no set of monomials is a Z-basis the
/// quotient basis is kept and labelled [h<d>_<i>].
class Presentation {
 public:
  /// Throws GkmError(kMismatch) if a generator is not a degree-2 GKM class.
  Presentation(const GkmCohomology& coh, std::vector<NamedClass> gens);
  /// Generators x1..xr taken from the degree-2 ordinary basis.
  static Presentation defaults(const GkmCohomology& coh);

  const std::vector<NamedClass>& generators() const { return gens_; }
  std::vector<std::string> generator_names() const;
  bool monomial_basis(int d) const;
  std::vector<std::string> basis_labels(int d) const;
  /// Degree-d ordinary classes as FixedPointClass lifts, in presentation order.
  std::vector<FixedPointClass> basis_lifts(int d) const;

  /// Coordinates in this presentation's degree-d basis.
  IntVector coordinates(const RingElement& x) const;
  std::string render(const RingElement& x) const;
  /// The element as a polynomial in the generators (monomial degrees only).
  IntPolynomial as_polynomial(const RingElement& x) const;

 private:
  struct DegreeData {
    bool monomial = false;
    std::vector<Exponent> monomials;  // when monomial
    IntMatrix to_presentation;        // quotient coords -> presentation coords
    std::vector<FixedPointClass> lifts;
  };

  std::vector<NamedClass> gens_;
  std::map<int, DegreeData> degrees_;
};

}  // namespace gkm
