#pragma once

// Systems of invariants (H^2, cubic form, w2, p1) of closed simply-connected
// 6-manifolds with H^odd = 0, their equivalence, and the diffeomorphism
// verdict built on top of them.

#include "gkm/charclasses.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

struct InvariantSystem {
  std::size_t rank = 0;
  std::vector<BigInt> mu;  // rank^3 entries, mu[(a*rank + b)*rank + c]
  std::vector<int> w;      // entries in {0, 1}
  IntVector p;             // p[a] = <p1 x_a, [M]>
  std::vector<std::string> basis;

  const BigInt& cubic(std::size_t a, std::size_t b, std::size_t c) const {
    return mu[(a * rank + b) * rank + c];
  }
  /// mu(x, y, z) for integer vectors.
  BigInt cubic(const IntVector& x, const IntVector& y, const IntVector& z) const;
  bool is_symmetric() const;
  /// The same manifold with the opposite orientation: mu and p negated.
  InvariantSystem reversed() const;
  bool operator==(const InvariantSystem&) const = default;
};

struct InvariantExtraction {
  InvariantSystem system;
  std::vector<std::string> warnings;
};

/// Needs a valid signed graph of valence 3. The basis is the presentation's
/// degree-2 basis. Throws GkmError(kNot6Dimensional).
InvariantExtraction invariant_system(const GkmCohomology& coh, const Presentation& pres);

/// Phi : H -> H' with Phi(w) = w', mu'(Phi x, Phi y, Phi z) = mu(x, y, z)
/// and p'(Phi x) = p(x). Column a of `phi` is the image of basis vector a.
bool verify_equivalence(const InvariantSystem& s1, const InvariantSystem& s2,
                        const IntMatrix& phi);

enum class EquivalenceStatus { kFound, kProvablyDistinct, kNotFoundWithinBound };

std::string to_string(EquivalenceStatus s);

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::kNotFoundWithinBound;
  std::optional<IntMatrix> phi;
  std::string reason;
};

/// Compares GL(r, Z)-invariants first, then searches unimodular Phi with
/// entries in [-bound, bound]; the lexicographically smallest Phi
/// (column-major) is returned, except that the identity is preferred
/// whenever it works.
EquivalenceResult are_equivalent(const InvariantSystem& s1, const InvariantSystem& s2,
                                 int bound = 10);

/// The Phi induced by a graph isomorphism g1 -> g2 on the degree-2 bases
/// of the two presentations.
IntMatrix equivalence_from_isomorphism(const GkmCohomology& coh1, const Presentation& pres1,
                                       const GkmCohomology& coh2, const Presentation& pres2,
                                       const GraphIso& iso);

/// Pulls a class on g2 back to g1 along (phi, psi).
FixedPointClass pull_back(const FixedPointClass& c, const GraphIso& iso);

enum class Verdict { kDiffeomorphic, kProvablyDistinct, kInconclusive };

std::string to_string(Verdict v);

struct DiffeoOptions {
  bool assume_simply_connected = false;
  bool assume_h_odd_zero = false;
  int bound = 10;
};

struct DiffeoResult {
  Verdict verdict = Verdict::kInconclusive;
  std::string explanation;
  std::vector<std::string> assumptions;
  std::optional<GraphIso> isomorphism;
  std::optional<IntMatrix> isomorphism_phi;  // Phi induced by `isomorphism`
  InvariantSystem system1, system2;
  EquivalenceResult equivalence;
  EquivalenceResult reversed_equivalence;  // s1 vs s2 with orientation reversed
};

DiffeoResult diffeo_verdict(const GkmGraph& g1, const GkmGraph& g2, const DiffeoOptions& opts);

}  // namespace gkm
