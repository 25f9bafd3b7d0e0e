#include "io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "troploc/error.hpp"

namespace troploc::cli {

namespace {

constexpr std::size_t kAnyRank = static_cast<std::size_t>(-1);

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  fail(Errc::invalid_input, (where.empty() ? std::string() : where + ": ") + msg);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t idx) {
  return where + "/" + std::to_string(idx);
}

std::size_t parse_size(const json& j, const std::string& where) {
  Integer v = parse_integer(j, where);
  if (v < 0 || !v.fits_ulong_p()) bad(where, "expected a nonnegative integer");
  return v.get_ui();
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

json exponents_json(const std::vector<LatticeVector>& es) { return vectors_json(es); }

json vertex_json(const SpliceDiagram& d, const Vertex& v) {
  if (v.is_node()) return d.node_names()[v.index];
  return static_cast<long>(v.index + 1);
}

Vertex parse_vertex(const json& j, std::size_t leaves, const std::vector<std::string>& names,
                    const std::string& where) {
  if (j.is_string()) {
    auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) fail(Errc::invalid_diagram, where + ": unknown node \"" + j.get<std::string>() + "\"");
    return Vertex::node(static_cast<std::size_t>(it - names.begin()));
  }
  std::size_t i = parse_size(j, where);
  if (i < 1 || i > leaves) fail(Errc::invalid_diagram, where + ": leaf " + std::to_string(i) + " out of range");
  return Vertex::leaf(i - 1);
}

/// Edge at a node given as [a, b] containing the node, or as the far end.
Vertex parse_far_end(const json& j, std::size_t node, std::size_t leaves,
                     const std::vector<std::string>& names, const std::string& where) {
  if (!j.is_array()) return parse_vertex(j, leaves, names, where);
  if (j.size() != 2) bad(where, "an edge is a pair [a, b]");
  Vertex a = parse_vertex(j[0], leaves, names, child(where, 0));
  Vertex b = parse_vertex(j[1], leaves, names, child(where, 1));
  if (a == Vertex::node(node)) return b;
  if (b == Vertex::node(node)) return a;
  fail(Errc::invalid_diagram, where + ": edge does not contain node " + names[node]);
}

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return {parse_rational(j, where).get_d(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad(where, "expected a number, a \"p/q\" string or [re, im]");
}

json coef_json(const Rational& c) { return rational_string(c); }
json coef_json(const Complex& c) { return complex_json(c); }

template <class K>
json arc_json_impl(const Arc<K>& a, const char* mode) {
  json out;
  out["kind"] = "arc";
  out["rank"] = a.rank();
  out["cone"] = a.ambient == Cone::orthant(a.rank()) ? json("orthant") : cone_json(a.ambient);
  out["mode"] = mode;
  json prec = json::array();
  for (long p : a.precision) prec.push_back(p >= kExact ? json("exact") : json(p));
  out["precision"] = std::move(prec);
  json coords = json::array();
  for (const auto& c : a.coords) {
    json terms = json::array();
    for (const auto& [e, v] : c) terms.push_back({{"exp", e}, {"coef", coef_json(v)}});
    coords.push_back(std::move(terms));
  }
  out["coords"] = std::move(coords);
  return out;
}

template <class K>
json puiseux_json_impl(const PuiseuxResult<K>& r, const PuiseuxOptions& opt, const char* mode) {
  json out;
  out["kind"] = "puiseux";
  out["mode"] = mode;
  out["depth"] = opt.depth;
  json branches = json::array();
  for (const auto& b : r.branches) {
    json jb;
    LatticeVector w = arc_weight(b.arc);
    jb["weight"] = vector_json(w);
    jb["primitive_weight"] = vector_json(primitive(w));
    jb["edge_normals"] = vectors_json(b.edge_normals);
    jb["residual_order"] = b.residual_order ? json(*b.residual_order) : json(nullptr);
    if constexpr (std::is_same_v<K, Complex>) jb["residual_magnitude"] = b.residual_magnitude;
    jb["arc"] = arc_json(b.arc);
    branches.push_back(std::move(jb));
  }
  out["branches"] = std::move(branches);
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"code", std::string(to_string(f.code))},
                        {"message", f.message},
                        {"edge_normals", vectors_json(f.edge_normals)}});
  }
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("syntax error");
    fail(Errc::parse_error, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                (pos == std::string::npos ? what : what.substr(pos)));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(j.get<long>());
  }
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, re)) bad(where, "\"" + s + "\" is not an integer");
    return Integer(s);
  }
  bad(where, "expected an integer");
}

std::string rational_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_integer(j, where));
  if (j.is_string()) {
    static const std::regex re("\\s*(-?[0-9]+)\\s*(/\\s*([0-9]+)\\s*)?");
    std::smatch m;
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, m, re)) bad(where, "\"" + s + "\" is not a rational \"p/q\"");
    Integer num(m[1].str());
    Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
    if (den == 0) bad(where, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (j.is_number_float()) bad(where, "floating-point coefficients are not exact; write \"p/q\"");
  bad(where, "expected a rational");
}

json vector_json(const LatticeVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(integer_json(c));
  return out;
}

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(rational_string(c));
  return out;
}

json vectors_json(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

LatticeVector parse_vector(const json& j, std::size_t rank, Lattice lattice,
                           const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  if (rank != kAnyRank && j.size() != rank) {
    fail(Errc::invalid_input, where + ": expected " + std::to_string(rank) + " entries, got " +
                                  std::to_string(j.size()));
  }
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(parse_integer(j[i], child(where, i)));
  return LatticeVector(std::move(c), lattice);
}

LatticeVector parse_vector_text(const std::string& text, Lattice lattice) {
  std::string s;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') s += ch;
  }
  std::vector<Integer> c;
  std::stringstream ss(s);
  std::string item;
  static const std::regex re("-?[0-9]+");
  while (std::getline(ss, item, ',')) {
    if (!std::regex_match(item, re)) fail(Errc::invalid_input, "\"" + text + "\" is not an integer vector");
    c.emplace_back(item);
  }
  if (c.empty()) fail(Errc::invalid_input, "empty vector \"" + text + "\"");
  return LatticeVector(std::move(c), lattice);
}

json cone_json(const Cone& c) {
  json out;
  out["rank"] = c.rank();
  out["dim"] = c.dim();
  out["rays"] = vectors_json(c.rays());
  if (!c.lineality().empty()) out["lineality"] = vectors_json(c.lineality());
  return out;
}

Cone parse_cone(const json& j, std::size_t rank, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "orthant") bad(where, "unknown cone \"" + j.get<std::string>() + "\"");
    return Cone::orthant(rank);
  }
  std::vector<LatticeVector> gens;
  const json& rays = field(j, "rays", where);
  if (!rays.is_array()) bad(child(where, "rays"), "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    gens.push_back(parse_vector(rays[i], rank, Lattice::N, child(child(where, "rays"), i)));
  }
  if (j.contains("lineality")) {
    const json& lin = j.at("lineality");
    for (std::size_t i = 0; i < lin.size(); ++i) {
      LatticeVector v = parse_vector(lin[i], rank, Lattice::N, child(child(where, "lineality"), i));
      gens.push_back(v);
      gens.push_back(-v);
    }
  }
  return Cone::from_generators(rank, gens);
}

json series_json(const Series& f) {
  json out;
  out["rank"] = f.rank();
  out["cone"] = f.ambient() == Cone::orthant(f.rank()) ? json("orthant") : cone_json(f.ambient());
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"exp", vector_json(m)}, {"coef", rational_string(c)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Series parse_series(const json& j, const std::string& where) {
  const std::size_t rank = parse_size(field(j, "rank", where), child(where, "rank"));
  if (rank == 0) bad(child(where, "rank"), "rank must be positive");
  Cone ambient = j.contains("cone") ? parse_cone(j.at("cone"), rank, child(where, "cone"))
                                    : Cone::orthant(rank);
  const json& terms = field(j, "terms", where);
  if (!terms.is_array()) bad(child(where, "terms"), "expected an array");
  Series::Terms t;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = child(child(where, "terms"), i);
    LatticeVector m = parse_vector(field(terms[i], "exp", w), rank, Lattice::M, child(w, "exp"));
    t[m] += parse_rational(field(terms[i], "coef", w), child(w, "coef"));
  }
  return Series(std::move(ambient), std::move(t));
}

std::vector<Series> parse_generators(const json& j) {
  const json* list = &j;
  std::string where;
  if (j.is_object() && j.contains("generators")) {
    list = &j.at("generators");
    where = "/generators";
  } else if (j.is_object() && j.contains("equations")) {
    list = &j.at("equations");
    where = "/equations";
  } else if (j.is_object()) {
    return {parse_series(j)};
  }
  if (!list->is_array() || list->empty()) bad(where, "expected a nonempty list of series");
  std::vector<Series> out;
  for (std::size_t i = 0; i < list->size(); ++i) out.push_back(parse_series((*list)[i], child(where, i)));
  return out;
}

json polyhedron_json(const NewtonPolyhedron& p) {
  json out;
  out["kind"] = "newton_polyhedron";
  out["rank"] = p.recession_cone().rank();
  out["recession_cone"] = cone_json(p.recession_cone());
  out["vertices"] = vectors_json(p.vertices());
  out["points"] = vectors_json(p.points());
  json faces = json::array();
  for (const auto& f : p.compact_faces()) {
    faces.push_back({{"dim", f.dim}, {"vertices", vectors_json(f.vertices)},
                     {"support", vectors_json(f.support)}});
  }
  out["compact_faces"] = std::move(faces);
  return out;
}

json newton_fan_json(const NewtonFan& nf) {
  json out;
  out["kind"] = "newton_fan";
  out["rank"] = nf.fan.rank();
  json cones = json::array();
  for (std::size_t i = 0; i < nf.fan.size(); ++i) {
    const Cone& c = nf.fan.cones()[i];
    cones.push_back({{"rays", vectors_json(c.rays())},
                     {"dim", c.dim()},
                     {"compact", static_cast<bool>(nf.compact[i])},
                     {"face_dim", nf.face_dims[i]},
                     {"support", exponents_json(nf.labels[i])}});
  }
  out["cones"] = std::move(cones);
  out["maximal"] = nf.fan.maximal_indices();
  return out;
}

json tropicalization_json(const Tropicalization& t) {
  json out;
  out["kind"] = "tropicalization";
  out["rank"] = t.ambient.rank();
  out["ambient"] = t.ambient == Cone::orthant(t.ambient.rank()) ? json("orthant") : cone_json(t.ambient);
  out["dim"] = t.dim ? json(*t.dim) : json(nullptr);
  out["upper_bound"] = t.upper_bound;
  if (t.upper_bound) out["bound"] = "superset of the local tropicalization of the ideal";
  const auto& maximal = t.fan.maximal_indices();
  json cones = json::array();
  for (std::size_t i = 0; i < t.fan.size(); ++i) {
    const Cone& c = t.fan.cones()[i];
    json jc;
    jc["rays"] = vectors_json(c.rays());
    jc["dim"] = c.dim();
    jc["maximal"] = std::binary_search(maximal.begin(), maximal.end(), i);
    jc["witness"] = vector_json(c.interior_witness());
    json labels = json::array();
    if (i < t.labels.size()) {
      for (const auto& l : t.labels[i]) labels.push_back(exponents_json(l));
    }
    jc["labels"] = std::move(labels);
    cones.push_back(std::move(jc));
  }
  out["cones"] = std::move(cones);
  json gens = json::array();
  for (const auto& g : t.generators) gens.push_back(series_json(g));
  out["generators"] = std::move(gens);
  return out;
}

Tropicalization parse_tropicalization(const json& j) {
  if (j.contains("kind") && j.at("kind") != "tropicalization") {
    bad("/kind", "expected a tropicalization");
  }
  const std::size_t rank = parse_size(field(j, "rank", ""), "/rank");
  Tropicalization t;
  t.ambient = j.contains("ambient") ? parse_cone(j.at("ambient"), rank, "/ambient") : Cone::orthant(rank);
  if (j.contains("dim") && !j.at("dim").is_null()) t.dim = parse_size(j.at("dim"), "/dim");
  if (j.contains("upper_bound")) {
    if (!j.at("upper_bound").is_boolean()) bad("/upper_bound", "expected a boolean");
    t.upper_bound = j.at("upper_bound").get<bool>();
  }
  if (j.contains("generators")) {
    const json& gens = j.at("generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      t.generators.push_back(parse_series(gens[i], child("/generators", i)));
      if (!(t.generators.back().ambient() == t.ambient)) {
        fail(Errc::cone_mismatch, "/generators/" + std::to_string(i) + ": ambient cone differs");
      }
    }
  }
  std::vector<Cone> cones;
  const json& jc = field(j, "cones", "");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    cones.push_back(parse_cone(jc[i], rank, child("/cones", i)));
    if (!t.ambient.contains(cones.back())) {
      fail(Errc::invalid_input, "/cones/" + std::to_string(i) + ": cone leaves the ambient cone");
    }
  }
  FanReport rep = validate_cones(rank, cones);
  if (!rep.valid) {
    // Missing faces are filled in below; anything else is a broken fan.
    for (const auto& v : rep.violations) {
      if (v.kind != FanViolation::Kind::missing_face) {
        fail(Errc::invalid_input, "cones do not form a fan: " + v.detail);
      }
    }
  }
  t.fan = Fan::from_cones(rank, cones);
  t.labels = label_cones(t.ambient, t.fan, t.generators);
  return t;
}

json structure_json(const StructureReport& r, const Tropicalization& t) {
  json out;
  out["kind"] = "structure_report";
  out["passed"] = r.passed;
  out["expected_dim"] = r.expected_dim;
  out["maximal_cones"] = r.maximal_cones;
  json issues = json::array();
  for (const auto& i : r.issues) {
    issues.push_back({{"kind", std::string(to_string(i.kind))},
                      {"cone", vectors_json(t.fan.cones()[i.cone].rays())},
                      {"detail", i.detail}});
  }
  out["issues"] = std::move(issues);
  return out;
}

json extended_cone_json(const ExtendedCone& ec) {
  json out;
  out["kind"] = "extended_cone";
  out["base"] = cone_json(ec.base);
  json strata = json::array();
  for (const auto& s : ec.strata) {
    strata.push_back({{"face", cone_json(s.face)},
                      {"quotient_rank", s.quotient_rank},
                      {"quotient_map", matrix_json(s.quotient_map)},
                      {"image", cone_json(s.image)}});
  }
  out["strata"] = std::move(strata);
  return out;
}

json splice_json(const SpliceDiagram& d) {
  json out;
  out["leaves"] = d.leaf_count();
  out["nodes"] = d.node_names();
  json edges = json::array();
  for (const auto& [a, b] : d.edges()) edges.push_back({vertex_json(d, a), vertex_json(d, b)});
  out["edges"] = std::move(edges);
  json weights = json::array();
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    for (const auto& x : d.neighbors(Vertex::node(u))) {
      weights.push_back({{"node", d.node_names()[u]},
                         {"edge", {vertex_json(d, Vertex::node(u)), vertex_json(d, x)}},
                         {"w", integer_json(d.weight(u, x))}});
    }
  }
  out["weights"] = std::move(weights);
  return out;
}

SpliceDiagram parse_splice(const json& j) {
  const std::size_t leaves = parse_size(field(j, "leaves", ""), "/leaves");
  const json& jn = field(j, "nodes", "");
  if (!jn.is_array()) bad("/nodes", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < jn.size(); ++i) {
    if (!jn[i].is_string()) bad(child("/nodes", i), "node names are strings");
    names.push_back(jn[i].get<std::string>());
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  const json& je = field(j, "edges", "");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string w = child("/edges", i);
    if (!je[i].is_array() || je[i].size() != 2) bad(w, "an edge is a pair [a, b]");
    edges.emplace_back(parse_vertex(je[i][0], leaves, names, child(w, 0)),
                       parse_vertex(je[i][1], leaves, names, child(w, 1)));
  }
  std::vector<SpliceWeight> weights;
  const json& jw = field(j, "weights", "");
  for (std::size_t i = 0; i < jw.size(); ++i) {
    const std::string w = child("/weights", i);
    Vertex node = parse_vertex(field(jw[i], "node", w), leaves, names, child(w, "node"));
    if (!node.is_node()) fail(Errc::invalid_diagram, w + ": weights sit at nodes");
    Vertex far = parse_far_end(field(jw[i], "edge", w), node.index, leaves, names, child(w, "edge"));
    weights.push_back({node.index, far, parse_integer(field(jw[i], "w", w), child(w, "w"))});
  }
  return SpliceDiagram::make(leaves, std::move(names), edges, weights);
}

json splice_report_json(const SpliceReport& r, const SpliceDiagram& d) {
  const auto& names = d.node_names();
  json out;
  out["kind"] = "splice_validation";
  out["passed"] = r.passed();
  json cop = json::array();
  for (const auto& c : r.coprime) {
    json e{{"node", names[c.node]}, {"passed", c.passed}};
    if (!c.passed) e["detail"] = c.detail;
    cop.push_back(std::move(e));
  }
  out["coprime"] = {{"passed", r.coprime_ok()}, {"nodes", std::move(cop)}};
  json ed = json::array();
  for (const auto& c : r.edge_determinant) {
    ed.push_back({{"u", names[c.u]},
                  {"v", names[c.v]},
                  {"d_u", integer_json(c.du)},
                  {"d_v", integer_json(c.dv)},
                  {"l_uv", integer_json(c.luv)},
                  {"product", integer_json(c.du * c.dv)},
                  {"square", integer_json(c.luv * c.luv)},
                  {"passed", c.passed}});
  }
  out["edge_determinant"] = {{"passed", r.edge_determinant_ok()}, {"edges", std::move(ed)}};
  json sg = json::array();
  for (const auto& c : r.semigroup) {
    json leaves = json::array();
    for (std::size_t i : c.leaves) leaves.push_back(i + 1);
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(integer_json(g));
    json rep = nullptr;
    if (c.representation) {
      rep = json::array();
      for (const auto& n : *c.representation) rep.push_back(integer_json(n));
    }
    sg.push_back({{"node", names[c.node]},
                  {"edge", {names[c.node], vertex_json(d, c.toward)}},
                  {"d_u", integer_json(c.du)},
                  {"leaves", std::move(leaves)},
                  {"generators", std::move(gens)},
                  {"representation", std::move(rep)},
                  {"passed", c.passed}});
  }
  out["semigroup"] = {{"passed", r.semigroup_ok()}, {"instances", std::move(sg)}};
  json wv = json::object();
  json deg = json::object();
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    wv[names[u]] = vector_json(weight_vector(d, u));
    deg[names[u]] = integer_json(node_degree(d, u));
  }
  out["degrees"] = std::move(deg);
  out["weight_vectors"] = std::move(wv);
  return out;
}

json splice_system_json(const SpliceSystem& s, const SpliceDiagram& d) {
  json out;
  out["kind"] = "splice_system";
  out["variables"] = s.variables;
  json eqs = json::array();
  json readable = json::array();
  json nodes = json::array();
  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    eqs.push_back(series_json(s.equations[i]));
    readable.push_back(s.equations[i].to_string());
    nodes.push_back(d.node_names()[s.equation_node[i]]);
  }
  out["equations"] = std::move(eqs);
  out["equation_text"] = std::move(readable);
  out["equation_nodes"] = std::move(nodes);
  json coeffs = json::object();
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    json m = json::array();
    for (const auto& row : s.node_matrices[u]) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rational_string(x));
      m.push_back(std::move(r));
    }
    coeffs[d.node_names()[u]] = std::move(m);
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

json crosscheck_json(const CrosscheckReport& r) {
  json out;
  out["kind"] = "splice_crosscheck";
  out["passed"] = r.passed;
  if (!r.precondition_failure.empty()) out["precondition_failure"] = r.precondition_failure;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json forms = json::array();
    for (const auto& f : e.initial_forms) forms.push_back(f.to_string());
    entries.push_back({{"cone", vectors_json(e.cone.rays())},
                       {"witness", vector_json(e.witness)},
                       {"initial_forms", std::move(forms)},
                       {"passed", e.passed}});
  }
  out["entries"] = std::move(entries);
  if (r.divisor_support_equal) out["divisor_support_equal"] = *r.divisor_support_equal;
  return out;
}

SpliceOptions parse_splice_options(const json& j, const SpliceDiagram& d) {
  SpliceOptions o;
  const auto& names = d.node_names();
  const std::size_t n = d.leaf_count();
  if (j.contains("coefficients")) {
    const json& jc = j.at("coefficients");
    if (!jc.is_object()) bad("/coefficients", "expected an object keyed by node name");
    for (const auto& [name, rows] : jc.items()) {
      auto u = d.node_index(name);
      if (!u) fail(Errc::not_a_node, "/coefficients: unknown node \"" + name + "\"");
      RatMatrix m;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> row;
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
          row.push_back(parse_rational(rows[i][k], "/coefficients/" + name + "/" + std::to_string(i) +
                                                       "/" + std::to_string(k)));
        }
        m.push_back(std::move(row));
      }
      o.coefficients[*u] = std::move(m);
    }
  }
  if (j.contains("monomials")) {
    const json& jm = j.at("monomials");
    for (std::size_t i = 0; i < jm.size(); ++i) {
      const std::string w = child("/monomials", i);
      Vertex node = parse_vertex(field(jm[i], "node", w), n, names, child(w, "node"));
      if (!node.is_node()) fail(Errc::not_a_node, w + ": monomials sit at nodes");
      Vertex far = parse_far_end(field(jm[i], "edge", w), node.index, n, names, child(w, "edge"));
      o.monomials[{node.index, far}] = parse_vector(field(jm[i], "exp", w), n, Lattice::M, child(w, "exp"));
    }
  }
  if (j.contains("extra_terms")) {
    const json& jx = j.at("extra_terms");
    for (std::size_t i = 0; i < jx.size(); ++i) {
      const std::string w = child("/extra_terms", i);
      std::size_t eq = parse_size(field(jx[i], "equation", w), child(w, "equation"));
      o.extra_terms[eq].emplace_back(
          parse_vector(field(jx[i], "exp", w), n, Lattice::M, child(w, "exp")),
          parse_rational(field(jx[i], "coef", w), child(w, "coef")));
    }
  }
  return o;
}

AnyArc parse_arc(const json& j) {
  const json& coords = field(j, "coords", "");
  if (!coords.is_array() || coords.empty()) bad("/coords", "expected a nonempty array");
  const std::size_t rank = coords.size();
  if (j.contains("rank") && parse_size(j.at("rank"), "/rank") != rank) {
    fail(Errc::rank_mismatch, "/rank: does not match the number of coordinates");
  }
  Cone ambient = j.contains("cone") ? parse_cone(j.at("cone"), rank, "/cone") : Cone::orthant(rank);
  std::vector<long> precision(rank, kExact);
  if (j.contains("precision")) {
    const json& jp = j.at("precision");
    if (!jp.is_array() || jp.size() != rank) bad("/precision", "expected one entry per coordinate");
    for (std::size_t i = 0; i < rank; ++i) {
      if (jp[i].is_string() && jp[i] == "exact") continue;
      precision[i] = parse_integer(jp[i], child("/precision", i)).get_si();
    }
  } else if (j.contains("truncation")) {
    precision.assign(rank, parse_integer(j.at("truncation"), "/truncation").get_si());
  }
  std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "exact";
  if (mode != "exact" && mode != "float") bad("/mode", "mode is \"exact\" or \"float\"");

  auto load = [&](auto& arc, auto parse_coef) {
    arc.ambient = ambient;
    arc.precision = precision;
    for (std::size_t i = 0; i < rank; ++i) {
      arc.coords.emplace_back();
      for (std::size_t k = 0; k < coords[i].size(); ++k) {
        const std::string w = child(child("/coords", i), k);
        long e = parse_integer(field(coords[i][k], "exp", w), child(w, "exp")).get_si();
        arc.coords.back()[e] += parse_coef(field(coords[i][k], "coef", w), child(w, "coef"));
      }
    }
  };
  if (mode == "exact") {
    ExactArc a;
    load(a, [](const json& c, const std::string& w) { return parse_rational(c, w); });
    return a;
  }
  FloatArc a;
  load(a, [](const json& c, const std::string& w) { return parse_complex(c, w); });
  return a;
}

json arc_json(const ExactArc& a) { return arc_json_impl(a, "exact"); }
json arc_json(const FloatArc& a) { return arc_json_impl(a, "float"); }

json puiseux_json(const PuiseuxResult<Rational>& r, const PuiseuxOptions& opt) {
  return puiseux_json_impl(r, opt, "exact");
}
json puiseux_json(const PuiseuxResult<Complex>& r, const PuiseuxOptions& opt) {
  return puiseux_json_impl(r, opt, "float");
}

}  // namespace troploc::cli
