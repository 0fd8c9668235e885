#include "gkm/cli.hpp"

#include "gkm/charclasses.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph.hpp"
#include "gkm/io.hpp"
#include "gkm/wjz.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace gkm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool no_validate = false;
  std::vector<std::string> inputs;
  std::vector<std::string> examples;
  std::string output;
  std::string gens;
  std::vector<std::string> defines;
  int max_degree = -1;
  std::string class_expr;
  bool is_signed = false;
  int bound = 10;
  bool assume_simply_connected = false;
  bool assume_h_odd_zero = false;
  bool as_xray = false;
  std::string example_name;
};

struct Input {
  std::string label;
  GkmGraph graph;
  std::optional<XRay> xray;
  std::vector<GeneratorBinding> bindings;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GkmError(ErrorKind::kFormat, "cannot write " + path);
  f << text;
}

Input load_one(const std::string& source, bool from_example_flag, bool validate_graph) {
  Input in;
  in.label = source;
  if (!from_example_flag && std::filesystem::is_regular_file(source)) {
    Document doc = parse_document(read_file(source));
    if (auto* x = std::get_if<XRay>(&doc)) {
      in.xray = *x;
      in.graph = graph_from_xray(*x);
    } else {
      in.graph = std::get<GkmGraph>(doc);
    }
  } else {
    auto names = builtin_names();
    if (std::find(names.begin(), names.end(), source) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw UsageError((from_example_flag ? "unknown example \"" : "no such file or example \"") +
                       source + "\" (built-in examples: " + known + ")");
    }
    Example ex = builtin(source);
    in.graph = ex.graph;
    in.xray = ex.xray;
    in.bindings = ex.generators;
  }
  if (validate_graph) require_valid(in.graph);
  return in;
}

std::vector<Input> load_inputs(const Options& o, bool validate_graph, std::size_t expected) {
  std::vector<Input> out;
  for (const auto& s : o.inputs) out.push_back(load_one(s, false, validate_graph));
  for (const auto& s : o.examples) out.push_back(load_one(s, true, validate_graph));
  if (out.size() != expected)
    throw UsageError("expected " + std::to_string(expected) + " input" +
                     (expected == 1 ? "" : "s") + " (a path or --example NAME), got " +
                     std::to_string(out.size()));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

Presentation make_presentation(const GkmCohomology& coh, const Input& in, const Options& o) {
  std::vector<GeneratorBinding> available;
  for (const auto& d : o.defines) {
    auto eq = d.find('=');
    if (eq == std::string::npos) throw UsageError("--define expects NAME=EXPR;EXPR;...");
    available.push_back({d.substr(0, eq), split(d.substr(eq + 1), ';')});
  }
  std::vector<std::string> wanted;
  if (!o.gens.empty()) {
    wanted = split(o.gens, ',');
    available.insert(available.end(), in.bindings.begin(), in.bindings.end());
  } else {
    for (const auto& b : available) wanted.push_back(b.name);
  }
  if (wanted.empty()) return Presentation::defaults(coh);

  std::vector<NamedClass> gens;
  for (const auto& name : wanted) {
    auto it = std::find_if(available.begin(), available.end(),
                           [&](const GeneratorBinding& b) { return b.name == name; });
    if (it == available.end())
      throw UsageError("unknown generator \"" + name +
                       "\"; define it with --define NAME=EXPR;EXPR;...");
    if (it->components.size() != coh.graph().vertex_count())
      throw UsageError("generator \"" + name + "\" needs one polynomial per vertex");
    gens.push_back({name, FixedPointClass::parse(coh.graph(), it->components)});
  }
  return Presentation(coh, std::move(gens));
}

std::string render_class(const GkmGraph& g, const FixedPointClass& c) {
  std::string s = "(";
  for (std::size_t v = 0; v < c.components.size(); ++v)
    s += (v ? ", " : "") + g.vertices()[v] + ": " + to_string(c.components[v]);
  return s + ")";
}

Json class_json(const GkmGraph& g, const FixedPointClass& c) {
  Json j = Json::object();
  for (std::size_t v = 0; v < c.components.size(); ++v)
    j[g.vertices()[v]] = to_string(c.components[v]);
  return j;
}

std::string vector_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string matrix_text(const IntMatrix& m) { return m.to_string(); }

void write_generators(std::ostream& out, const GkmGraph& g, const Presentation& pres) {
  for (const auto& gen : pres.generators())
    out << "  " << gen.name << " = " << render_class(g, gen.value) << "\n";
}

Json generators_json(const GkmGraph& g, const Presentation& pres) {
  Json j = Json::array();
  for (const auto& gen : pres.generators())
    j.push_back(Json{{"name", gen.name}, {"value", class_json(g, gen.value)}});
  return j;
}

// -- verbs -----------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  Input in = load_inputs(o, false, 1).front();
  const GkmGraph& g = in.graph;
  ValidityReport rep = validate(g);
  auto val = g.valence();
  if (json_out(o)) {
    Json j;
    j["input"] = in.label;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["torus_rank"] = g.torus_rank();
    j["signed"] = g.is_signed();
    j["valence"] = val ? Json(*val) : Json(nullptr);
    j["all_labels_primitive"] = g.all_labels_primitive();
    j["valid"] = rep.ok();
    Json vs = Json::array();
    for (const auto& v : rep.violations)
      vs.push_back(Json{{"kind", to_string(v.kind)}, {"detail", v.detail}});
    j["violations"] = std::move(vs);
    out << j.dump(2) << "\n";
  } else {
    out << "input: " << in.label << "\n"
        << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count()
        << "  torus rank: " << g.torus_rank() << "  signed: " << (g.is_signed() ? "yes" : "no")
        << "  valence: " << (val ? std::to_string(*val) : std::string("irregular")) << "\n"
        << "all labels primitive: " << (g.all_labels_primitive() ? "yes" : "no") << "\n"
        << "valid: " << (rep.ok() ? "yes" : "no") << "\n";
    for (const auto& v : rep.violations)
      out << "violation: " << to_string(v.kind) << ": " << v.detail << "\n";
  }
  return rep.ok() ? kOk : kComputationError;
}

int cmd_xray(const Options& o, std::ostream& out) {
  Input in = load_inputs(o, false, 1).front();
  if (!in.xray) throw UsageError(in.label + " is not an x-ray (expected format xray/1)");
  std::string text = graph_to_json(in.graph).dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
    if (json_out(o))
      out << Json{{"output", o.output},
                  {"vertices", in.graph.vertex_count()},
                  {"edges", in.graph.edge_count()}}
                 .dump(2)
          << "\n";
    else
      out << "wrote " << o.output << " (" << in.graph.vertex_count() << " vertices, "
          << in.graph.edge_count() << " edges)\n";
  }
  return kOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  Example ex = [&] {
    auto names = builtin_names();
    if (std::find(names.begin(), names.end(), o.example_name) == names.end())
      throw UsageError("unknown example \"" + o.example_name + "\"");
    return builtin(o.example_name);
  }();
  std::string text;
  if (o.as_xray) {
    if (!ex.xray) throw UsageError(ex.name + " has no x-ray");
    text = xray_to_json(*ex.xray).dump(2) + "\n";
  } else {
    text = graph_to_json(ex.graph).dump(2) + "\n";
  }
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
    if (json_out(o))
      out << Json{{"output", o.output}, {"example", ex.name}}.dump(2) << "\n";
    else
      out << "wrote " << o.output << " (" << ex.name << ": " << ex.description << ")\n";
  }
  return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  Input in = load_inputs(o, !o.no_validate, 1).front();
  GkmCohomology coh(in.graph, o.max_degree);
  Presentation pres = make_presentation(coh, in, o);
  std::size_t total = 0;
  for (int d = 0; d <= coh.max_degree(); d += 2) total += coh.basis(d).ordinary_rank();
  if (json_out(o)) {
    Json j;
    j["input"] = in.label;
    j["top_degree"] = coh.top_degree();
    j["generators"] = generators_json(in.graph, pres);
    Json degs = Json::array();
    for (int d = 0; d <= coh.max_degree(); d += 2) {
      const GradedBasis& b = coh.basis(d);
      degs.push_back(Json{{"degree", d},
                          {"rank", b.ordinary_rank()},
                          {"equivariant_rank", b.equivariant_rank()},
                          {"basis", pres.basis_labels(d)}});
    }
    j["degrees"] = std::move(degs);
    j["total_rank"] = total;
    j["vertices"] = in.graph.vertex_count();
    j["all_labels_primitive"] = in.graph.all_labels_primitive();
    out << j.dump(2) << "\n";
  } else {
    out << "input: " << in.label << "\n"
        << "generators:\n";
    write_generators(out, in.graph, pres);
    out << "degree  rank  equivariant-rank  basis\n";
    for (int d = 0; d <= coh.max_degree(); d += 2) {
      const GradedBasis& b = coh.basis(d);
      std::ostringstream line;
      line << std::left;
      line.width(8);
      line << d;
      line.width(6);
      line << b.ordinary_rank();
      line.width(18);
      line << b.equivariant_rank();
      line << join(pres.basis_labels(d), ", ");
      out << line.str() << "\n";
    }
    out << "total rank: " << total << " (vertices: " << in.graph.vertex_count() << ")\n"
        << "all labels primitive: " << (in.graph.all_labels_primitive() ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
  Input in = load_inputs(o, !o.no_validate, 1).front();
  GkmCohomology coh(in.graph);
  Presentation pres = make_presentation(coh, in, o);
  std::vector<ClassKind> kinds = {ClassKind::kChern, ClassKind::kPontrjagin,
                                  ClassKind::kStiefelWhitney};
  std::vector<std::string> notices;
  if (!in.graph.is_signed()) {
    kinds.erase(kinds.begin());
    notices.push_back("unsigned graph: Chern classes skipped (they need signed labels)");
  }
  std::vector<CharClassReport> reports;
  for (auto k : kinds) reports.push_back(descend(coh, equivariant_char_class(in.graph, k), pres));

  if (json_out(o)) {
    Json j;
    j["input"] = in.label;
    j["generators"] = generators_json(in.graph, pres);
    j["notices"] = notices;
    for (const auto& r : reports) {
      Json entries = Json::array();
      for (const auto& e : r.entries)
        entries.push_back(Json{{"name", e.name},
                               {"degree", e.degree},
                               {"value", e.rendered},
                               {"coordinates", vector_to_json(e.coordinates)},
                               {"basis", pres.basis_labels(e.degree)}});
      j[to_string(r.kind)] = std::move(entries);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "input: " << in.label << "\n"
        << "generators:\n";
    write_generators(out, in.graph, pres);
    for (const auto& n : notices) out << "note: " << n << "\n";
    for (const auto& r : reports) {
      out << to_string(r.kind) << ":\n";
      for (const auto& e : r.entries) out << "  " << e.name << " = " << e.rendered << "\n";
    }
  }
  return kOk;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  Input in = load_inputs(o, !o.no_validate, 1).front();
  const GkmGraph& g = in.graph;
  if (!g.is_signed())
    throw GkmError(ErrorKind::kRequiresSignedGraph,
                   "integration needs the orientation carried by signed labels");
  GkmCohomology coh(g);
  Presentation pres = make_presentation(coh, in, o);

  std::vector<std::string> names;
  std::vector<FixedPointClass> values;
  for (const auto& gen : pres.generators()) {
    names.push_back(gen.name);
    values.push_back(gen.value);
  }
  const int n = coh.top_degree() / 2;
  EquivariantTotalClass chern = equivariant_char_class(g, ClassKind::kChern);
  EquivariantTotalClass pont = equivariant_char_class(g, ClassKind::kPontrjagin);
  for (int i = 1; i <= n; ++i) {
    names.push_back("c" + std::to_string(i));
    values.push_back(chern.part(2 * i));
  }
  for (int i = 1; 4 * i <= 2 * n; ++i) {
    names.push_back("p" + std::to_string(i));
    values.push_back(pont.part(4 * i));
  }
  IntPolynomial expr = [&] {
    try {
      return parse_polynomial(o.class_expr, names);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--class: ") + e.what() + " (known names: " +
                       join(names, ", ") + ")");
    }
  }();
  FixedPointClass c;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<IntPolynomial> images;
    for (const auto& val : values) images.push_back(val.components[v]);
    if (images.empty()) {
      c.components.push_back(IntPolynomial::constant(g.torus_rank(), expr.coefficient({})));
      continue;
    }
    c.components.push_back(compose(expr, images));
  }
  BigInt value = localize_integral(g, c);
  if (json_out(o))
    out << Json{{"input", in.label}, {"class", o.class_expr}, {"value", value.str()}}.dump(2)
        << "\n";
  else
    out << "<" << o.class_expr << ", [M]> = " << value << "\n";
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = load_inputs(o, !o.no_validate, 1).front();
  GkmCohomology coh(in.graph);
  Presentation pres = make_presentation(coh, in, o);
  InvariantExtraction ext = invariant_system(coh, pres);
  const InvariantSystem& s = ext.system;
  for (const auto& w : ext.warnings) err << "warning: " << w << "\n";
  if (json_out(o)) {
    out << invariants_to_json(s).dump(2) << "\n";
    return kOk;
  }
  out << "input: " << in.label << "\n"
      << "generators:\n";
  write_generators(out, in.graph, pres);
  out << "rank: " << s.rank << "\n"
      << "basis: " << join(s.basis, ", ") << "\n";
  for (std::size_t a = 0; a < s.rank; ++a)
    for (std::size_t b = a; b < s.rank; ++b)
      for (std::size_t c = b; c < s.rank; ++c)
        out << "mu(" << s.basis[a] << "," << s.basis[b] << "," << s.basis[c]
            << ") = " << s.cubic(a, b, c) << "\n";
  IntVector w(s.w.begin(), s.w.end());
  out << "w: " << vector_text(w) << "\n"
      << "p: " << vector_text(s.p) << "\n";
  for (const auto& wn : ext.warnings) out << "warning: " << wn << "\n";
  return kOk;
}

std::string iso_text(const GkmGraph& g1, const GkmGraph& g2, const GraphIso& iso) {
  std::string s;
  for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
    s += (v ? " " : "") + g1.vertices()[v] + "->" + g2.vertices()[iso.vertex_map[v]];
  return s + "  psi = " + matrix_text(iso.psi) + "  det " + determinant(iso.psi).str();
}

Json iso_json(const GkmGraph& g1, const GkmGraph& g2, const GraphIso& iso) {
  Json map = Json::object();
  for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
    map[g1.vertices()[v]] = g2.vertices()[iso.vertex_map[v]];
  return Json{{"vertex_map", map},
              {"psi", matrix_to_json(iso.psi)},
              {"det", determinant(iso.psi).str()}};
}

int cmd_iso(const Options& o, std::ostream& out) {
  auto in = load_inputs(o, !o.no_validate, 2);
  const GkmGraph &g1 = in[0].graph, &g2 = in[1].graph;
  auto isos = find_isomorphisms(g1, g2, o.is_signed);
  if (json_out(o)) {
    Json list = Json::array();
    for (const auto& i : isos) list.push_back(iso_json(g1, g2, i));
    out << Json{{"first", in[0].label},
                {"second", in[1].label},
                {"signed", o.is_signed},
                {"count", isos.size()},
                {"isomorphisms", list}}
               .dump(2)
        << "\n";
  } else {
    out << (o.is_signed ? "signed" : "unsigned") << " isomorphisms " << in[0].label << " -> "
        << in[1].label << ": " << isos.size() << "\n";
    for (const auto& i : isos) out << "  " << iso_text(g1, g2, i) << "\n";
  }
  return kOk;
}

Json equivalence_json(const EquivalenceResult& r) {
  return Json{{"status", to_string(r.status)},
              {"phi", r.phi ? matrix_to_json(*r.phi) : Json(nullptr)},
              {"reason", r.reason}};
}

std::string equivalence_text(const EquivalenceResult& r) {
  std::string s = to_string(r.status);
  if (r.phi) s += ", Phi = " + matrix_text(*r.phi);
  if (!r.reason.empty()) s += " (" + r.reason + ")";
  return s;
}

int cmd_diffeo(const Options& o, std::ostream& out) {
  auto in = load_inputs(o, !o.no_validate, 2);
  DiffeoOptions opts{o.assume_simply_connected, o.assume_h_odd_zero, o.bound};
  DiffeoResult r = diffeo_verdict(in[0].graph, in[1].graph, opts);
  if (json_out(o)) {
    Json j;
    j["first"] = in[0].label;
    j["second"] = in[1].label;
    j["verdict"] = to_string(r.verdict);
    j["explanation"] = r.explanation;
    j["assumptions"] = r.assumptions;
    j["isomorphism"] =
        r.isomorphism ? iso_json(in[0].graph, in[1].graph, *r.isomorphism) : Json(nullptr);
    j["isomorphism_phi"] = r.isomorphism_phi ? matrix_to_json(*r.isomorphism_phi) : Json(nullptr);
    j["invariants"] = Json::array({invariants_to_json(r.system1), invariants_to_json(r.system2)});
    j["bound"] = o.bound;
    j["equivalence"] = equivalence_json(r.equivalence);
    j["reversed_equivalence"] = equivalence_json(r.reversed_equivalence);
    out << j.dump(2) << "\n";
  } else {
    out << "verdict: " << to_string(r.verdict) << "\n"
        << "explanation: " << r.explanation << "\n"
        << "assumptions:\n";
    for (const auto& a : r.assumptions) out << "  " << a << "\n";
    if (r.isomorphism)
      out << "graph isomorphism: " << iso_text(in[0].graph, in[1].graph, *r.isomorphism) << "\n"
          << "Phi from isomorphism: " << matrix_text(*r.isomorphism_phi) << "\n";
    else
      out << "graph isomorphism: none\n";
    for (int i = 0; i < 2; ++i) {
      const InvariantSystem& s = i ? r.system2 : r.system1;
      out << "invariants " << in[i].label << ": " << invariants_to_json(s).dump() << "\n";
    }
    out << "equivalence (bound " << o.bound << "): " << equivalence_text(r.equivalence) << "\n"
        << "with " << in[1].label << " orientation reversed: "
        << equivalence_text(r.reversed_equivalence) << "\n";
  }
  return r.verdict == Verdict::kInconclusive ? kInconclusive : kOk;
}

void add_inputs(CLI::App* sub, Options& o, const std::string& what) {
  sub->add_option("inputs", o.inputs, what + " (a path, or a built-in example name)");
  sub->add_option("--example", o.examples, "built-in example as input (repeatable)");
}

void add_gens(CLI::App* sub, Options& o) {
  sub->add_option("--gens", o.gens, "comma-separated degree-2 generator names");
  sub->add_option("--define", o.defines,
                  "define a generator NAME=EXPR;EXPR;... with one Y-polynomial per vertex");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"GKM graph computations: equivariant and ordinary cohomology, "
               "characteristic classes, invariants and diffeomorphism checks",
               "gkm"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--no-validate", o.no_validate, "skip GKM validation of graph inputs");

  auto* validate_cmd = app.add_subcommand("validate", "check the GKM conditions");
  add_inputs(validate_cmd, o, "graph or x-ray");

  auto* xray_cmd = app.add_subcommand("xray", "convert an x-ray to a GKM graph");
  add_inputs(xray_cmd, o, "x-ray");
  xray_cmd->add_option("-o,--output", o.output, "write the gkmg/1 document here");

  auto* coh_cmd = app.add_subcommand("cohomology", "ranks and bases of A and H*(M)");
  add_inputs(coh_cmd, o, "graph or x-ray");
  add_gens(coh_cmd, o);
  coh_cmd->add_option("--max-degree", o.max_degree, "highest cohomological degree");

  auto* classes_cmd = app.add_subcommand("classes", "Chern, Pontrjagin, Stiefel-Whitney classes");
  add_inputs(classes_cmd, o, "graph or x-ray");
  add_gens(classes_cmd, o);

  auto* int_cmd = app.add_subcommand("integrate", "evaluate a class on [M] by localization");
  add_inputs(int_cmd, o, "graph or x-ray");
  add_gens(int_cmd, o);
  int_cmd
      ->add_option("--class", o.class_expr,
                   "polynomial in the generators, c1..cn and p1..")
      ->required();

  auto* inv_cmd = app.add_subcommand("invariants", "system of invariants (H2, mu, w2, p1)");
  add_inputs(inv_cmd, o, "graph or x-ray");
  add_gens(inv_cmd, o);

  auto* iso_cmd = app.add_subcommand("iso", "all isomorphisms between two GKM graphs");
  add_inputs(iso_cmd, o, "two graphs");
  iso_cmd->add_flag("--signed", o.is_signed, "match signed labels exactly");

  auto* diffeo_cmd = app.add_subcommand("diffeo", "diffeomorphism verdict for two 6-manifolds");
  add_inputs(diffeo_cmd, o, "two graphs");
  diffeo_cmd->add_flag("--assume-simply-connected", o.assume_simply_connected,
                       "assert both manifolds are simply connected");
  diffeo_cmd->add_flag("--assume-h-odd-zero", o.assume_h_odd_zero,
                       "assert odd integral cohomology vanishes");
  diffeo_cmd->add_option("--bound", o.bound, "entry bound for the equivalence search")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();

  auto* ex_cmd = app.add_subcommand("example", "write a built-in example");
  ex_cmd->add_option("name", o.example_name, "example name")->required();
  ex_cmd->add_option("-o,--output", o.output, "write here instead of stdout");
  ex_cmd->add_flag("--xray", o.as_xray, "write the x-ray (xray/1) instead of the graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*xray_cmd) return cmd_xray(o, out);
    if (*coh_cmd) return cmd_cohomology(o, out);
    if (*classes_cmd) return cmd_classes(o, out);
    if (*int_cmd) return cmd_integrate(o, out);
    if (*inv_cmd) return cmd_invariants(o, out, err);
    if (*iso_cmd) return cmd_iso(o, out);
    if (*diffeo_cmd) return cmd_diffeo(o, out);
    if (*ex_cmd) return cmd_example(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GkmError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::kUnknownExample ? kUsageError : kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kUsageError;
}

}  // namespace gkm::cli
