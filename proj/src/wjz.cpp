#include "gkm/wjz.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gkm {

BigInt InvariantSystem::cubic(const IntVector& x, const IntVector& y, const IntVector& z) const {
  BigInt s = 0;
  for (std::size_t a = 0; a < rank; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < rank; ++b) {
      if (y[b] == 0) continue;
      BigInt xy = x[a] * y[b];
      for (std::size_t c = 0; c < rank; ++c)
        if (z[c] != 0) s += xy * z[c] * cubic(a, b, c);
    }
  }
  return s;
}

bool InvariantSystem::is_symmetric() const {
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t c = 0; c < rank; ++c) {
        const BigInt& v = cubic(a, b, c);
        if (v != cubic(b, a, c) || v != cubic(a, c, b) || v != cubic(c, b, a)) return false;
      }
  return true;
}

InvariantSystem InvariantSystem::reversed() const {
  InvariantSystem out = *this;
  for (auto& x : out.mu) x = -x;
  for (auto& x : out.p) x = -x;
  return out;
}

InvariantExtraction invariant_system(const GkmCohomology& coh, const Presentation& pres) {
  const GkmGraph& g = coh.graph();
  if (g.valence() != 3)
    throw GkmError(ErrorKind::kNot6Dimensional,
                   "systems of invariants are defined for 6-manifolds (valence 3)");
  if (!g.is_signed())
    throw GkmError(ErrorKind::kRequiresSignedGraph,
                   "the cubic form needs the orientation carried by signed labels");

  InvariantExtraction out;
  InvariantSystem& s = out.system;
  std::vector<FixedPointClass> x = pres.basis_lifts(2);
  s.rank = x.size();
  s.basis = pres.basis_labels(2);
  s.mu.assign(s.rank * s.rank * s.rank, 0);
  for (std::size_t a = 0; a < s.rank; ++a)
    for (std::size_t b = a; b < s.rank; ++b)
      for (std::size_t c = b; c < s.rank; ++c) {
        BigInt v = localize_integral(g, x[a] * x[b] * x[c]);
        const std::size_t idx[3] = {a, b, c};
        std::size_t perm[3] = {0, 1, 2};
        do {
          s.mu[(idx[perm[0]] * s.rank + idx[perm[1]]) * s.rank + idx[perm[2]]] = v;
        } while (std::next_permutation(perm, perm + 3));
      }

  EquivariantTotalClass sw = equivariant_char_class(g, ClassKind::kStiefelWhitney);
  std::vector<int> wq = express_mod2(coh, sw.mod2, 2);
  IntVector wp = pres.coordinates({2, IntVector(wq.begin(), wq.end())});
  for (const auto& v : wp) s.w.push_back(static_cast<int>(((v % 2) + 2) % 2));

  EquivariantTotalClass pont = equivariant_char_class(g, ClassKind::kPontrjagin);
  FixedPointClass p1 = pont.part(4);
  for (std::size_t a = 0; a < s.rank; ++a) s.p.push_back(localize_integral(g, p1 * x[a]));

  if (!g.all_labels_primitive())
    out.warnings.push_back(
        "not all labels are primitive: the isotropy groups are not all connected, so the "
        "Chang-Skjelbred hypothesis is not supported by the graph");
  return out;
}

bool verify_equivalence(const InvariantSystem& s1, const InvariantSystem& s2,
                        const IntMatrix& phi) {
  const std::size_t r = s1.rank;
  if (s2.rank != r || phi.rows() != r || phi.cols() != r) return false;
  if (r > 0 && !is_unimodular(phi)) return false;
  std::vector<IntVector> cols;
  for (std::size_t a = 0; a < r; ++a) cols.push_back(phi.column(a));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        if (s2.cubic(cols[a], cols[b], cols[c]) != s1.cubic(a, b, c)) return false;
  for (std::size_t a = 0; a < r; ++a) {
    BigInt v = 0;
    for (std::size_t b = 0; b < r; ++b) v += s2.p[b] * cols[a][b];
    if (v != s1.p[a]) return false;
  }
  for (std::size_t b = 0; b < r; ++b) {
    BigInt v = 0;
    for (std::size_t a = 0; a < r; ++a) v += phi(b, a) * s1.w[a];
    if (((v % 2) + 2) % 2 != s2.w[b]) return false;
  }
  return true;
}

std::string to_string(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::kFound: return "Found";
    case EquivalenceStatus::kProvablyDistinct: return "ProvablyDistinct";
    case EquivalenceStatus::kNotFoundWithinBound: return "NotFoundWithinBound";
  }
  return "Unknown";
}

namespace {

BigInt gcd_of(const std::vector<BigInt>& v) { return content(v); }

// Number of x in (Z/2)^r with mu(x,x,x) odd.
std::size_t odd_cube_count(const InvariantSystem& s) {
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s.rank); ++mask) {
    IntVector x(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) x[i] = (mask >> i) & 1u;
    if (s.cubic(x, x, x) % 2 != 0) ++count;
  }
  return count;
}

std::optional<std::string> distinguishing_invariant(const InvariantSystem& s1,
                                                    const InvariantSystem& s2) {
  if (s1.rank != s2.rank)
    return "rank of H^2 differs (" + std::to_string(s1.rank) + " vs " +
           std::to_string(s2.rank) + ")";
  BigInt g1 = gcd_of(s1.mu), g2 = gcd_of(s2.mu);
  if (g1 != g2) return "gcd of the cubic form differs (" + g1.str() + " vs " + g2.str() + ")";
  BigInt q1 = gcd_of(s1.p), q2 = gcd_of(s2.p);
  if (q1 != q2) return "gcd of p1 differs (" + q1.str() + " vs " + q2.str() + ")";
  bool w1 = std::any_of(s1.w.begin(), s1.w.end(), [](int b) { return b != 0; });
  bool w2 = std::any_of(s2.w.begin(), s2.w.end(), [](int b) { return b != 0; });
  if (w1 != w2) return std::string("w2 vanishes for exactly one of the systems");
  if (s1.rank < 20) {
    std::size_t c1 = odd_cube_count(s1), c2 = odd_cube_count(s2);
    if (c1 != c2)
      return "number of mod-2 classes with odd cube differs (" + std::to_string(c1) + " vs " +
             std::to_string(c2) + ")";
  }
  return std::nullopt;
}

}  // namespace

EquivalenceResult are_equivalent(const InvariantSystem& s1, const InvariantSystem& s2,
                                 int bound) {
  EquivalenceResult result;
  if (auto reason = distinguishing_invariant(s1, s2)) {
    result.status = EquivalenceStatus::kProvablyDistinct;
    result.reason = *reason;
    return result;
  }
  const std::size_t r = s1.rank;
  if (r == 0) {
    result.status = EquivalenceStatus::kFound;
    result.phi = IntMatrix(0, 0);
    return result;
  }

  if (bound >= 1 && verify_equivalence(s1, s2, IntMatrix::identity(r))) {
    result.status = EquivalenceStatus::kFound;
    result.phi = IntMatrix::identity(r);
    return result;
  }

  // Per-column candidates satisfying the diagonal conditions.
  std::vector<IntVector> box;
  {
    IntVector v(r, BigInt(-bound));
    for (;;) {
      box.push_back(v);
      std::size_t i = r;
      while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
  std::vector<std::vector<const IntVector*>> candidates(r);
  for (std::size_t a = 0; a < r; ++a)
    for (const auto& v : box) {
      BigInt pv = 0;
      for (std::size_t b = 0; b < r; ++b) pv += s2.p[b] * v[b];
      if (pv != s1.p[a]) continue;
      if (s2.cubic(v, v, v) != s1.cubic(a, a, a)) continue;
      candidates[a].push_back(&v);
    }

  std::vector<const IntVector*> chosen(r, nullptr);
  std::function<bool(std::size_t)> extend = [&](std::size_t a) -> bool {
    if (a == r) {
      std::vector<IntVector> cols;
      for (auto* c : chosen) cols.push_back(*c);
      IntMatrix phi = IntMatrix::from_columns(r, cols);
      if (!verify_equivalence(s1, s2, phi)) return false;
      result.phi = std::move(phi);
      return true;
    }
    for (const IntVector* v : candidates[a]) {
      chosen[a] = v;
      bool ok = true;
      // triples whose largest index is a; (a, a, a) is already filtered
      for (std::size_t i = 0; i < a && ok; ++i)
        ok = s2.cubic(*chosen[i], *v, *v) == s1.cubic(i, a, a) &&
             s2.cubic(*chosen[i], *chosen[i], *v) == s1.cubic(i, i, a);
      for (std::size_t i = 0; i < a && ok; ++i)
        for (std::size_t j = i + 1; j < a && ok; ++j)
          ok = s2.cubic(*chosen[i], *chosen[j], *v) == s1.cubic(i, j, a);
      if (ok && extend(a + 1)) return true;
    }
    chosen[a] = nullptr;
    return false;
  };

  if (extend(0)) {
    result.status = EquivalenceStatus::kFound;
  } else {
    result.status = EquivalenceStatus::kNotFoundWithinBound;
    result.reason = "no equivalence with entries bounded by " + std::to_string(bound);
  }
  return result;
}

FixedPointClass pull_back(const FixedPointClass& c, const GraphIso& iso) {
  IntMatrix substitution = unimodular_inverse(iso.psi);
  FixedPointClass out;
  for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
    out.components.push_back(linear_substitute(c.components.at(iso.vertex_map[v]), substitution));
  return out;
}

IntMatrix equivalence_from_isomorphism(const GkmCohomology& coh1, const Presentation& pres1,
                                       const GkmCohomology& /*coh2*/, const Presentation& pres2,
                                       const GraphIso& iso) {
  std::vector<FixedPointClass> targets = pres2.basis_lifts(2);
  std::vector<IntVector> cols;
  for (const auto& y : targets) {
    RingElement x = coh1.express(pull_back(y, iso), 2);
    cols.push_back(pres1.coordinates(x));
  }
  IntMatrix pullback = IntMatrix::from_columns(coh1.basis(2).ordinary_rank(), cols);
  return unimodular_inverse(pullback);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kDiffeomorphic: return "Diffeomorphic";
    case Verdict::kProvablyDistinct: return "ProvablyDistinct";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Unknown";
}

DiffeoResult diffeo_verdict(const GkmGraph& g1, const GkmGraph& g2, const DiffeoOptions& opts) {
  for (const GkmGraph* g : {&g1, &g2}) {
    require_valid(*g);
    if (!g->is_signed())
      throw GkmError(ErrorKind::kRequiresSignedGraph, "diffeo needs signed graphs");
    if (g->valence() != 3)
      throw GkmError(ErrorKind::kNot6Dimensional, "diffeo needs graphs of valence 3");
  }
  DiffeoResult out;
  out.assumptions = {
      std::string("M and N simply connected: ") +
          (opts.assume_simply_connected ? "assumed" : "NOT asserted"),
      std::string("H^odd(M;Z) = H^odd(N;Z) = 0: ") +
          (opts.assume_h_odd_zero ? "assumed" : "NOT asserted"),
      "isotropy groups off the one-skeleton lie in proper subtori: assumed (labels primitive: " +
          std::string(g1.all_labels_primitive() && g2.all_labels_primitive() ? "yes" : "no") +
          ")",
  };

  GkmCohomology coh1(g1), coh2(g2);
  Presentation pres1 = Presentation::defaults(coh1);
  Presentation pres2 = Presentation::defaults(coh2);
  out.system1 = invariant_system(coh1, pres1).system;
  out.system2 = invariant_system(coh2, pres2).system;

  auto isos = find_isomorphisms(g1, g2, true);
  if (!isos.empty()) {
    out.isomorphism = isos.front();
    IntMatrix phi = equivalence_from_isomorphism(coh1, pres1, coh2, pres2, *out.isomorphism);
    if (!verify_equivalence(out.system1, out.system2, phi))
      throw GkmError(ErrorKind::kNotInLattice,
                     "graph isomorphism failed to induce an equivalence of invariants");
    out.isomorphism_phi = std::move(phi);
  }
  out.equivalence = are_equivalent(out.system1, out.system2, opts.bound);
  out.reversed_equivalence = are_equivalent(out.system1, out.system2.reversed(), opts.bound);
  if (out.equivalence.status == EquivalenceStatus::kNotFoundWithinBound && out.isomorphism_phi) {
    out.equivalence.status = EquivalenceStatus::kFound;
    out.equivalence.phi = out.isomorphism_phi;
    out.equivalence.reason = "induced by the signed graph isomorphism";
  }

  if (!opts.assume_simply_connected || !opts.assume_h_odd_zero) {
    out.verdict = Verdict::kInconclusive;
    out.explanation =
        "the classification needs simply connected manifolds with H^odd = 0, which the graph "
        "cannot certify; pass --assume-simply-connected and --assume-h-odd-zero";
    return out;
  }
  switch (out.equivalence.status) {
    case EquivalenceStatus::kFound:
      out.verdict = Verdict::kDiffeomorphic;
      out.explanation = out.isomorphism
                            ? "signed GKM graphs are isomorphic; the induced Phi is an "
                              "equivalence of the systems of invariants"
                            : "the systems of invariants are equivalent";
      break;
    case EquivalenceStatus::kProvablyDistinct:
      out.verdict = Verdict::kProvablyDistinct;
      out.explanation = "systems of invariants differ: " + out.equivalence.reason;
      break;
    case EquivalenceStatus::kNotFoundWithinBound:
      out.verdict = Verdict::kInconclusive;
      out.explanation = out.equivalence.reason + "; raise --bound to search further";
      break;
  }
  return out;
}

}  // namespace gkm
