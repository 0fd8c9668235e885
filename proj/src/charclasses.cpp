#include "gkm/charclasses.hpp"

#include "gkm/errors.hpp"

#include <map>

namespace gkm {

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::kChern: return "chern";
    case ClassKind::kPontrjagin: return "pontrjagin";
    case ClassKind::kStiefelWhitney: return "stiefel-whitney";
  }
  return "unknown";
}

EquivariantTotalClass equivariant_char_class(const GkmGraph& g, ClassKind kind) {
  if (kind == ClassKind::kChern && !g.is_signed())
    throw GkmError(ErrorKind::kChernRequiresSignedGraph,
                   "Chern classes need signed labels (an invariant almost complex structure)");
  const std::size_t k = g.torus_rank();
  EquivariantTotalClass out;
  out.kind = kind;
  const IntPolynomial one = IntPolynomial::constant(k, 1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    IntPolynomial total = one;
    for (const HalfEdge& h : g.incident(v)) {
      IntPolynomial alpha = IntPolynomial::linear_form(h.weight);
      total = total * (kind == ClassKind::kPontrjagin ? one + alpha * alpha : one + alpha);
    }
    if (kind == ClassKind::kStiefelWhitney) out.mod2.push_back(mod2_reduce(total));
    out.integral.components.push_back(std::move(total));
  }
  return out;
}

std::vector<int> express_mod2(const GkmCohomology& coh, const std::vector<Mod2Polynomial>& c,
                              int d) {
  const GkmGraph& g = coh.graph();
  const GradedBasis& gb = coh.basis(d);
  const std::size_t k = g.torus_rank();
  if (c.size() != g.vertex_count())
    throw GkmError(ErrorKind::kMismatch, "mod-2 class does not fit the graph");

  FixedPointClass lift;
  for (const auto& p : c) {
    IntPolynomial q(k);
    Mod2Polynomial part = p.homogeneous_component(d);
    for (const auto& e : part.terms()) q.add_term(e, 1);
    lift.components.push_back(std::move(q));
  }
  IntVector target = lift.flatten(d, k);

  // basis * x + 2 * z = lift
  const std::size_t rank_a = gb.equivariant_rank();
  IntMatrix system(target.size(), rank_a + target.size());
  for (std::size_t j = 0; j < rank_a; ++j) {
    IntVector col = gb.equivariant[j].flatten(d, k);
    for (std::size_t i = 0; i < col.size(); ++i) system(i, j) = col[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i) system(i, rank_a + i) = 2;
  auto solution = solve_integer(system, target);
  if (!solution)
    throw GkmError(ErrorKind::kNotInLattice,
                   "mod-2 class is not the reduction of a GKM class in degree " +
                       std::to_string(d));
  IntVector coords(solution->begin(), solution->begin() + static_cast<long>(rank_a));
  IntVector q = gb.projection * coords;
  std::vector<int> out;
  for (const auto& x : q) out.push_back(static_cast<int>(((x % 2) + 2) % 2));
  return out;
}

RingElement descend_part(const GkmCohomology& coh, const EquivariantTotalClass& e, int d) {
  return coh.express(e.part(d), d);
}

namespace {

std::string render_mod2(const std::vector<int>& coords, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) continue;
    if (!out.empty()) out += " + ";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

CharClassReport descend(const GkmCohomology& coh, const EquivariantTotalClass& e,
                        const Presentation& pres) {
  CharClassReport report;
  report.kind = e.kind;
  const int top = coh.top_degree();
  switch (e.kind) {
    case ClassKind::kChern:
      for (int d = 2; d <= top; d += 2) {
        RingElement x = descend_part(coh, e, d);
        report.entries.push_back(
            {"c" + std::to_string(d / 2), d, pres.coordinates(x), pres.render(x)});
      }
      break;
    case ClassKind::kPontrjagin:
      for (int d = 4; d <= top; d += 4) {
        RingElement x = descend_part(coh, e, d);
        report.entries.push_back(
            {"p" + std::to_string(d / 4), d, pres.coordinates(x), pres.render(x)});
      }
      break;
    case ClassKind::kStiefelWhitney:
      for (int d = 2; d <= top; d += 2) {
        std::vector<int> q = express_mod2(coh, e.mod2, d);
        IntVector qi(q.begin(), q.end());
        IntVector p = pres.coordinates({d, qi});
        std::vector<int> bits;
        IntVector coords;
        for (const auto& x : p) {
          int b = static_cast<int>(((x % 2) + 2) % 2);
          bits.push_back(b);
          coords.emplace_back(b);
        }
        report.entries.push_back({"w" + std::to_string(d), d, coords,
                                  render_mod2(bits, pres.basis_labels(d))});
      }
      break;
  }
  return report;
}

namespace {

struct Denominators {
  IntPolynomial common;                 // product of distinct forms, max multiplicity
  std::vector<IntPolynomial> cofactor;  // common / euler_p
};

Denominators localization_denominators(const GkmGraph& g) {
  const std::size_t k = g.torus_rank();
  std::map<IntVector, unsigned> multiplicity;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::map<IntVector, unsigned> here;
    for (const HalfEdge& h : g.incident(v)) ++here[canonical_sign(h.weight)];
    for (const auto& [w, m] : here) multiplicity[w] = std::max(multiplicity[w], m);
  }
  Denominators d{IntPolynomial::constant(k, 1), {}};
  for (const auto& [w, m] : multiplicity)
    d.common = d.common * IntPolynomial::linear_form(w).pow(m);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    IntPolynomial euler = IntPolynomial::constant(k, 1);
    for (const HalfEdge& h : g.incident(v)) euler = euler * IntPolynomial::linear_form(h.weight);
    auto q = divide_exact(d.common, euler);
    if (!q) throw GkmError(ErrorKind::kInvalidGraph, "zero weight at " + g.vertices()[v]);
    d.cofactor.push_back(std::move(*q));
  }
  return d;
}

}  // namespace

IntPolynomial localize_pushforward(const GkmGraph& g, const FixedPointClass& c) {
  if (!g.is_signed())
    throw GkmError(ErrorKind::kRequiresSignedGraph,
                   "localization needs the orientation carried by signed labels");
  if (c.components.size() != g.vertex_count())
    throw GkmError(ErrorKind::kMismatch, "class does not fit the graph");
  Denominators den = localization_denominators(g);
  IntPolynomial numerator(g.torus_rank());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    numerator += c.components[v] * den.cofactor[v];
  auto q = divide_exact(numerator, den.common);
  if (!q)
    throw GkmError(ErrorKind::kNonIntegralLocalizationSum,
                   "localization sum is not a polynomial; the class is not a GKM class or "
                   "the labels are inconsistent");
  return *q;
}

BigInt localize_integral(const GkmGraph& g, const FixedPointClass& c) {
  const int top = 2 * static_cast<int>(g.half_dimension());
  const int maxd = c.max_degree();
  if (maxd > top)
    throw GkmError(ErrorKind::kMismatch, "class has a part of degree " + std::to_string(maxd) +
                                             " above the manifold dimension " +
                                             std::to_string(top));
  BigInt result = 0;
  for (int d = 0; d <= maxd; d += 2) {
    FixedPointClass part = c.homogeneous_component(d);
    if (part.is_zero()) continue;
    IntPolynomial pushed = localize_pushforward(g, part);
    if (d == top) result = pushed.coefficient(Exponent(g.torus_rank(), 0));
  }
  return result;
}

}  // namespace gkm
