#pragma once

// Equivariant Chern, Pontrjagin and Stiefel-Whitney classes read off the
// fixed-point weights, their images in ordinary cohomology, and exact
// localization integrals.

#include "gkm/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

enum class ClassKind { kChern, kPontrjagin, kStiefelWhitney };

std::string to_string(ClassKind kind);

struct EquivariantTotalClass {
  ClassKind kind = ClassKind::kChern;
  /// Integral total class per vertex. For Stiefel-Whitney this is the
  /// integral lift prod(1 + alpha) whose mod-2 reduction is the class.
  FixedPointClass integral;
  std::vector<Mod2Polynomial> mod2;  // Stiefel-Whitney only

  /// Homogeneous part of cohomological degree d of the integral class.
  FixedPointClass part(int d) const { return integral.homogeneous_component(d); }
};

/// prod_j (1 + alpha_j) for Chern (signed graphs only), prod_j (1 + alpha_j^2)
/// for Pontrjagin, and prod_j (1 + alpha_j) mod 2 for Stiefel-Whitney.
/// Throws GkmError(kChernRequiresSignedGraph).
EquivariantTotalClass equivariant_char_class(const GkmGraph& g, ClassKind kind);

struct CharClassEntry {
  std::string name;   // c1, p1, w2, ...
  int degree = 0;
  IntVector coordinates;  // presentation coordinates (mod 2 for w)
  std::string rendered;
};

struct CharClassReport {
  ClassKind kind = ClassKind::kChern;
  std::vector<CharClassEntry> entries;
};

/// Images of every positive-degree part through 2n in A/mA, written in the
/// presentation's basis.
CharClassReport descend(const GkmCohomology& coh, const EquivariantTotalClass& e,
                        const Presentation& pres);

/// Ordinary class of one homogeneous degree-d part.
RingElement descend_part(const GkmCohomology& coh, const EquivariantTotalClass& e, int d);

/// Mod-2 coordinates (in the quotient basis) of a mod-2 GKM class of degree d.
std::vector<int> express_mod2(const GkmCohomology& coh, const std::vector<Mod2Polynomial>& c,
                              int d);

/// sum_p c_p / prod_j alpha_{p,j} over a signed graph, evaluated exactly.
/// Parts of degree < 2n contribute 0 (checked); the degree-2n part gives
/// <c, [M]>. Throws GkmError(kNonIntegralLocalizationSum) when the sum is
/// not a polynomial, kRequiresSignedGraph on unsigned graphs, and
/// kMismatch for parts above degree 2n.
BigInt localize_integral(const GkmGraph& g, const FixedPointClass& c);

/// The full pushforward to H*(BT): a polynomial of cohomological degree
/// deg(c) - 2n.
IntPolynomial localize_pushforward(const GkmGraph& g, const FixedPointClass& c);

}  // namespace gkm
