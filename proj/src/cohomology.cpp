#include "gkm/cohomology.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm {

FixedPointClass FixedPointClass::constant(const GkmGraph& g, const BigInt& c) {
  FixedPointClass out;
  out.components.assign(g.vertex_count(), IntPolynomial::constant(g.torus_rank(), c));
  return out;
}

FixedPointClass FixedPointClass::parse(const GkmGraph& g,
                                       const std::vector<std::string>& texts) {
  if (texts.size() != g.vertex_count())
    throw GkmError(ErrorKind::kMismatch, "expected " + std::to_string(g.vertex_count()) +
                                             " components, got " + std::to_string(texts.size()));
  auto names = default_variable_names(g.torus_rank());
  FixedPointClass out;
  for (const auto& t : texts) out.components.push_back(parse_polynomial(t, names));
  return out;
}

int FixedPointClass::degree() const {
  int d = -1;
  for (const auto& p : components) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw std::invalid_argument("class is not homogeneous");
    if (d == -1) {
      d = p.degree();
    } else if (d != p.degree()) {
      throw std::invalid_argument("class is not homogeneous");
    }
  }
  return d;
}

bool FixedPointClass::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const IntPolynomial& p) { return p.is_zero(); });
}

int FixedPointClass::max_degree() const {
  int d = -1;
  for (const auto& p : components) d = std::max(d, p.degree());
  return d;
}

FixedPointClass FixedPointClass::homogeneous_component(int d) const {
  FixedPointClass out;
  for (const auto& p : components) out.components.push_back(p.homogeneous_component(d));
  return out;
}

IntVector FixedPointClass::flatten(int d, std::size_t nvars) const {
  auto monos = monomials_of_degree(nvars, static_cast<unsigned>(d / 2));
  IntVector out;
  out.reserve(components.size() * monos.size());
  for (const auto& p : components) {
    IntVector c = p.coefficients(monos);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

FixedPointClass& FixedPointClass::operator+=(const FixedPointClass& other) {
  if (components.size() != other.components.size())
    throw GkmError(ErrorKind::kMismatch, "classes over different vertex sets");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += other.components[i];
  return *this;
}

FixedPointClass operator*(const FixedPointClass& a, const FixedPointClass& b) {
  if (a.components.size() != b.components.size())
    throw GkmError(ErrorKind::kMismatch, "classes over different vertex sets");
  FixedPointClass out;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] * b.components[i]);
  return out;
}

FixedPointClass operator*(FixedPointClass a, const BigInt& c) {
  for (auto& p : a.components) p *= c;
  return a;
}

namespace {

void check_fits(const GkmGraph& g, const FixedPointClass& c) {
  if (c.components.size() != g.vertex_count())
    throw GkmError(ErrorKind::kMismatch, "class has " + std::to_string(c.components.size()) +
                                             " components; graph has " +
                                             std::to_string(g.vertex_count()) + " vertices");
  for (const auto& p : c.components)
    if (p.variable_count() != g.torus_rank())
      throw GkmError(ErrorKind::kMismatch, "class polynomial ring does not match torus rank");
}

FixedPointClass unflatten(const IntVector& v, std::size_t nvertices, std::size_t nvars, int d) {
  auto monos = monomials_of_degree(nvars, static_cast<unsigned>(d / 2));
  FixedPointClass c;
  for (std::size_t p = 0; p < nvertices; ++p)
    c.components.push_back(IntPolynomial::from_coefficients(
        nvars, monos, std::span<const BigInt>(v).subspan(p * monos.size(), monos.size())));
  return c;
}

}  // namespace

bool is_gkm_class(const GkmGraph& g, const FixedPointClass& c) {
  check_fits(g, c);
  for (const Edge& e : g.edges()) {
    IntPolynomial diff = c.components[e.from] - c.components[e.to];
    if (!divide_by_linear(diff, IntPolynomial::linear_form(e.weight_at_from))) return false;
  }
  return true;
}

namespace {

// Flattened Z-basis of A_d. Unknowns are the vertex coefficients followed by
// one quotient polynomial of degree d-2 per edge; each edge contributes
// f_i - f_t - alpha_e * q_e = 0 coefficientwise.
std::vector<IntVector> equivariant_lattice(const GkmGraph& g, int d) {
  const std::size_t k = g.torus_rank();
  const std::size_t nv = g.vertex_count();
  const unsigned m = static_cast<unsigned>(d / 2);
  const auto monos = monomials_of_degree(k, m);
  const auto lower = m == 0 ? std::vector<Exponent>{} : monomials_of_degree(k, m - 1);
  const std::size_t nf = nv * monos.size();
  const std::size_t unknowns = nf + g.edge_count() * lower.size();

  std::map<Exponent, std::size_t> lower_index;
  for (std::size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = i;

  IntMatrix system(g.edge_count() * monos.size(), unknowns);
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      const std::size_t row = ei * monos.size() + mi;
      system(row, e.from * monos.size() + mi) += 1;
      system(row, e.to * monos.size() + mi) -= 1;
      for (std::size_t var = 0; var < k; ++var) {
        if (monos[mi][var] == 0 || e.weight_at_from[var] == 0) continue;
        Exponent below = monos[mi];
        --below[var];
        std::size_t col = nf + ei * lower.size() + lower_index.at(below);
        system(row, col) -= e.weight_at_from[var];
      }
    }
  }

  std::vector<IntVector> kernel = kernel_saturated(system);
  IntMatrix f_part(kernel.size(), nf);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < nf; ++j) f_part(i, j) = kernel[i][j];
  IntMatrix reduced = hermite_rows(f_part);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < reduced.rows(); ++i) rows.push_back(reduced.row(i));
  return rows;
}

void require_even(int d) {
  if (d < 0 || d % 2 != 0)
    throw std::invalid_argument("cohomological degree must be even and nonnegative");
}

}  // namespace

std::vector<FixedPointClass> gkm_basis(const GkmGraph& g, int d) {
  require_even(d);
  std::vector<FixedPointClass> out;
  for (const auto& v : equivariant_lattice(g, d))
    out.push_back(unflatten(v, g.vertex_count(), g.torus_rank(), d));
  return out;
}

namespace {

// First r-subset of columns (lexicographic) whose submatrix is unimodular.
std::optional<std::vector<std::size_t>> unimodular_columns(const IntMatrix& m,
                                                          std::size_t limit = 50000) {
  const std::size_t r = m.rows(), n = m.cols();
  if (r > n) return std::nullopt;
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  for (std::size_t tried = 0; tried < limit; ++tried) {
    IntMatrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, pick[j]);
    if (is_unimodular(sub)) return pick;
    // next combination
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<std::size_t>& cols) {
  IntMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

FixedPointClass combine(const std::vector<FixedPointClass>& basis, const IntVector& coords,
                        const GkmGraph& g) {
  FixedPointClass out = FixedPointClass::constant(g, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) out += basis[i] * coords[i];
  return out;
}

}  // namespace

GkmCohomology::GkmCohomology(GkmGraph g, int max_degree)
    : graph_(std::move(g)), half_dim_(graph_.half_dimension()) {
  max_degree_ = std::max(max_degree, top_degree());
  if (max_degree_ % 2 != 0) ++max_degree_;
  const std::size_t k = graph_.torus_rank();
  const std::size_t nv = graph_.vertex_count();
  const int check_limit = std::max(max_degree_, top_degree() + 2);

  for (int d = 0; d <= check_limit; d += 2) {
    GradedBasis gb;
    gb.degree = d;
    std::vector<IntVector> flat = equivariant_lattice(graph_, d);
    for (const auto& v : flat) gb.equivariant.push_back(unflatten(v, nv, k, d));
    const std::size_t len = nv * monomials_of_degree(k, static_cast<unsigned>(d / 2)).size();
    IntegerSolver solver(IntMatrix::from_columns(len, flat));

    // mA_d = sum_i Y_i * A_{d-2}, in A_d coordinates.
    std::vector<IntVector> ideal_cols;
    if (d >= 2) {
      for (std::size_t var = 0; var < k; ++var) {
        FixedPointClass y;
        y.components.assign(nv, IntPolynomial::variable(k, var));
        for (const auto& b : bases_.at(d - 2).equivariant) {
          auto coords = solver.solve((y * b).flatten(d, k));
          if (!coords)
            throw GkmError(ErrorKind::kNotInLattice,
                           "Y-multiple of a GKM class left the lattice in degree " +
                               std::to_string(d));
          ideal_cols.push_back(std::move(*coords));
        }
      }
    }
    const std::size_t rank_a = flat.size();
    IntMatrix ideal = IntMatrix::from_columns(rank_a, ideal_cols);
    SNFDecomposition snf = smith_normal_form(ideal);
    for (std::size_t i = 0; i < snf.rank; ++i)
      if (snf.S(i, i) != 1)
        throw GkmError(ErrorKind::kTorsionInQuotient,
                       "H^" + std::to_string(d) + " = A/mA has torsion (elementary divisor " +
                           snf.S(i, i).str() +
                           "); the graph violates the free-module / H^odd = 0 hypothesis");
    const std::size_t r = rank_a - snf.rank;
    IntMatrix proj(r, rank_a);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < rank_a; ++j) proj(i, j) = snf.U(snf.rank + i, j);

    if (auto subset = unimodular_columns(proj)) {
      IntMatrix sub = select_columns(proj, *subset);
      gb.projection = unimodular_inverse(sub) * proj;
      for (std::size_t j : *subset) gb.ordinary.push_back(gb.equivariant[j]);
      gb.ordinary_is_subset = true;
    } else {
      gb.projection = proj;
      IntMatrix u_inv = unimodular_inverse(snf.U);
      for (std::size_t i = 0; i < r; ++i)
        gb.ordinary.push_back(combine(gb.equivariant, u_inv.column(snf.rank + i), graph_));
    }

    if (d > top_degree() && r != 0)
      throw GkmError(ErrorKind::kTorsionInQuotient,
                     "A/mA is nonzero in degree " + std::to_string(d) +
                         " above the manifold dimension; the free-module hypothesis fails");
    bases_.emplace(d, std::move(gb));
    solvers_.emplace(d, std::move(solver));
  }
  // Degree top+2 only served as a check.
  for (int d = max_degree_ + 2; d <= check_limit; d += 2) {
    bases_.erase(d);
    solvers_.erase(d);
  }
}

const GradedBasis& GkmCohomology::basis(int d) const {
  require_even(d);
  auto it = bases_.find(d);
  if (it == bases_.end())
    throw std::out_of_range("degree " + std::to_string(d) + " was not computed");
  return it->second;
}

IntVector GkmCohomology::equivariant_coordinates(const FixedPointClass& c, int d) const {
  check_fits(graph_, c);
  basis(d);
  auto coords = solvers_.at(d).solve(c.homogeneous_component(d).flatten(d, graph_.torus_rank()));
  if (!coords)
    throw GkmError(ErrorKind::kNotInLattice,
                   "class is not in the GKM lattice A_" + std::to_string(d));
  return *coords;
}

RingElement GkmCohomology::express(const FixedPointClass& c, int d) const {
  IntVector coords = equivariant_coordinates(c, d);
  return {d, basis(d).projection * coords};
}

RingElement GkmCohomology::cup_and_express(const FixedPointClass& a,
                                           const FixedPointClass& b) const {
  int da = a.degree(), db = b.degree();
  FixedPointClass prod = a * b;
  if (da < 0 || db < 0) {
    int d = std::max(da, 0) + std::max(db, 0);
    return {d, IntVector(basis(d).ordinary_rank())};
  }
  return express(prod, da + db);
}

GradedBasis ordinary_basis(const GkmGraph& g, int d) {
  require_even(d);
  GkmCohomology coh(g, d);
  return coh.basis(d);
}

RingElement evaluate_ring_map(const GkmCohomology& coh, const std::vector<NamedClass>& gens,
                              const IntPolynomial& p) {
  if (p.variable_count() != gens.size())
    throw GkmError(ErrorKind::kMismatch, "polynomial is not over the generator ring");
  if (!p.is_homogeneous())
    throw GkmError(ErrorKind::kMismatch, "ring map argument must be homogeneous");
  const int d = p.is_zero() ? 0 : p.degree();
  const GkmGraph& g = coh.graph();
  FixedPointClass value;
  if (gens.empty()) return coh.express(FixedPointClass::constant(g, p.coefficient({})), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<IntPolynomial> images;
    for (const auto& gen : gens) images.push_back(gen.value.components.at(v));
    value.components.push_back(compose(p, images));
  }
  return coh.express(value, d);
}

Presentation::Presentation(const GkmCohomology& coh, std::vector<NamedClass> gens)
    : gens_(std::move(gens)) {
  const GkmGraph& g = coh.graph();
  for (const auto& gen : gens_) {
    if (!is_gkm_class(g, gen.value))
      throw GkmError(ErrorKind::kMismatch, "generator " + gen.name + " is not a GKM class");
    int d = gen.value.degree();
    if (d != 2 && d != -1)
      throw GkmError(ErrorKind::kMismatch, "generator " + gen.name + " is not of degree 2");
  }
  const std::size_t ng = gens_.size();
  for (int d = 0; d <= coh.max_degree(); d += 2) {
    const GradedBasis& gb = coh.basis(d);
    DegreeData data;
    auto monos = monomials_of_degree(ng, static_cast<unsigned>(d / 2));
    std::vector<IntVector> images;
    for (const auto& e : monos)
      images.push_back(
          evaluate_ring_map(coh, gens_, IntPolynomial::monomial(e, 1)).coordinates);
    IntMatrix image_matrix = IntMatrix::from_columns(gb.ordinary_rank(), images);
    if (auto subset = unimodular_columns(image_matrix)) {
      data.monomial = true;
      for (std::size_t j : *subset) data.monomials.push_back(monos[j]);
      data.to_presentation = unimodular_inverse(select_columns(image_matrix, *subset));
      for (const auto& e : data.monomials) {
        FixedPointClass lift = FixedPointClass::constant(g, 1);
        for (std::size_t i = 0; i < ng; ++i)
          for (unsigned t = 0; t < e[i]; ++t) lift = lift * gens_[i].value;
        data.lifts.push_back(std::move(lift));
      }
    } else {
      data.to_presentation = IntMatrix::identity(gb.ordinary_rank());
      data.lifts = gb.ordinary;
    }
    degrees_.emplace(d, std::move(data));
  }
}

Presentation Presentation::defaults(const GkmCohomology& coh) {
  std::vector<NamedClass> gens;
  const GradedBasis& b2 = coh.basis(2);
  for (std::size_t i = 0; i < b2.ordinary_rank(); ++i)
    gens.push_back({"x" + std::to_string(i + 1), b2.ordinary[i]});
  return Presentation(coh, std::move(gens));
}

std::vector<std::string> Presentation::generator_names() const {
  std::vector<std::string> names;
  for (const auto& g : gens_) names.push_back(g.name);
  return names;
}

bool Presentation::monomial_basis(int d) const { return degrees_.at(d).monomial; }

std::vector<std::string> Presentation::basis_labels(int d) const {
  const DegreeData& data = degrees_.at(d);
  std::vector<std::string> labels;
  if (data.monomial) {
    auto names = generator_names();
    for (const auto& e : data.monomials) labels.push_back(to_string(IntPolynomial::monomial(e, 1), names));
  } else {
    for (std::size_t i = 0; i < data.lifts.size(); ++i)
      labels.push_back("[h" + std::to_string(d) + "_" + std::to_string(i + 1) + "]");
  }
  return labels;
}

std::vector<FixedPointClass> Presentation::basis_lifts(int d) const { return degrees_.at(d).lifts; }

IntVector Presentation::coordinates(const RingElement& x) const {
  return degrees_.at(x.degree).to_presentation * x.coordinates;
}

IntPolynomial Presentation::as_polynomial(const RingElement& x) const {
  const DegreeData& data = degrees_.at(x.degree);
  if (!data.monomial)
    throw GkmError(ErrorKind::kGeneratorsDoNotSpan,
                   "generators do not give a monomial basis in degree " +
                       std::to_string(x.degree));
  IntVector c = coordinates(x);
  IntPolynomial p(gens_.size());
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(data.monomials[i], c[i]);
  return p;
}

std::string Presentation::render(const RingElement& x) const {
  const DegreeData& data = degrees_.at(x.degree);
  if (data.monomial) return to_string(as_polynomial(x), generator_names());
  IntVector c = coordinates(x);
  auto labels = basis_labels(x.degree);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt mag = abs(c[i]);
    if (out.empty()) {
      if (c[i] < 0) out += '-';
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + '*';
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace gkm
