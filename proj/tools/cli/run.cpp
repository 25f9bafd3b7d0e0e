#include "run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>

#include "io.hpp"
#include "render.hpp"
#include "troploc/error.hpp"

namespace troploc::cli {

namespace fs = std::filesystem;

namespace {

struct Outcome {
  json doc;          // structured output, unless svg is set
  std::string svg;
  std::optional<Error> check_failure;  // output is valid but reports a failed check
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string error_json(Errc code, const std::string& message, const std::string& input) {
  const char* cat = "internal";
  switch (category(code)) {
    case ErrorCategory::input: cat = "input"; break;
    case ErrorCategory::precondition: cat = "precondition"; break;
    case ErrorCategory::internal: cat = "internal"; break;
  }
  json e{{"code", std::string(to_string(code))}, {"category", cat}, {"message", message}};
  if (!input.empty()) e["input"] = input;
  return json{{"error", std::move(e)}}.dump() + "\n";
}

int status_of(Errc code) {
  switch (category(code)) {
    case ErrorCategory::input: return kInputError;
    case ErrorCategory::precondition: return kPreconditionError;
    case ErrorCategory::internal: return kInternalError;
  }
  return kInternalError;
}

std::string suffix_for(const std::string& command) {
  if (command == "polyhedron") return "poly.json";
  if (command == "fan") return "fan.json";
  if (command == "initial-form") return "initial.json";
  if (command == "check-structure") return "structure.json";
  if (command == "splice validate") return "report.json";
  if (command == "splice system") return "system.json";
  if (command == "splice crosscheck") return "crosscheck.json";
  if (command == "arc-weight") return "weight.json";
  if (command == "puiseux") return "puiseux.json";
  if (command == "extended-cone") return "extended.json";
  if (command == "render") return "svg";
  return "trop.json";
}

std::string stem_of(const std::string& path) {
  std::string name = fs::path(path).filename().string();
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  auto dot = name.find('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

/// Checks that is_initial_weight and fan membership agree on every lattice
/// point of the ambient interior inside [-box, box]^n.
json verify_box(const Tropicalization& t, long box) {
  const std::size_t n = t.ambient.rank();
  const bool orthant = t.ambient == Cone::orthant(n);
  const long lo = orthant ? 1 : -box;
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(box - lo + 1);
  require(count <= 5e6, Errc::rank_limit,
          "brute-force box has " + std::to_string(static_cast<long long>(count)) +
              " points; lower --box");
  std::vector<long> w(n, lo);
  std::size_t checked = 0;
  for (;;) {
    std::vector<Integer> c(w.begin(), w.end());
    LatticeVector v(std::move(c));
    if (t.ambient.relative_interior_contains(v)) {
      ++checked;
      const bool initial = is_initial_weight(t.generators, v);
      const bool inside = support_contains(t.fan, v);
      require(initial == inside, Errc::internal,
              "weight " + v.to_string() + (initial ? " is" : " is not") +
                  " an initial weight but the fan " + (inside ? "contains" : "misses") + " it");
    }
    std::size_t i = 0;
    while (i < n && w[i] == box) w[i++] = lo;
    if (i == n) break;
    ++w[i];
  }
  return {{"box", box}, {"points", checked}, {"passed", true}};
}

Cone parse_cone_input(const json& j) {
  const std::size_t rank = parse_integer(j.at("rank"), "/rank").get_ui();
  if (j.contains("cone")) return parse_cone(j.at("cone"), rank, "/cone");
  return parse_cone(j, rank, "");
}

Outcome compute(const JobSpec& job, const std::string& input) {
  const json in = read_json_file(input);
  const std::string& cmd = job.command;
  Outcome o;

  if (cmd == "polyhedron") {
    o.doc = polyhedron_json(newton_polyhedron(parse_series(in)));
  } else if (cmd == "fan") {
    o.doc = newton_fan_json(newton_fan(parse_series(in)));
  } else if (cmd == "divisor" || cmd == "plane-curve") {
    const Series f = parse_series(in);
    std::vector<LatticeVector> rays;
    if (cmd == "plane-curve") rays = troploc_plane_curve(f);
    const Tropicalization t = troploc_divisor(f);
    o.doc = tropicalization_json(t);
    if (cmd == "plane-curve") o.doc["rays"] = vectors_json(rays);
    if (job.verify) o.doc["verification"] = verify_box(t, job.box);
  } else if (cmd == "ideal-upper") {
    const Tropicalization t = troploc_ideal_upper(parse_generators(in));
    o.doc = tropicalization_json(t);
    if (job.verify) o.doc["verification"] = verify_box(t, job.box);
  } else if (cmd == "initial-form") {
    const std::vector<Series> gens = parse_generators(in);
    const LatticeVector w = parse_vector_text(*job.weight);
    require(w.rank() == gens.front().rank(), Errc::rank_mismatch, "weight rank differs from the series");
    o.doc["kind"] = "initial_forms";
    o.doc["weight"] = vector_json(w);
    json forms = json::array(), text = json::array();
    for (const auto& g : gens) {
      Series in_w = initial_form(g, w);
      text.push_back(in_w.to_string());
      forms.push_back(series_json(in_w));
    }
    o.doc["initial_weight"] = is_initial_weight(gens, w);
    o.doc["text"] = std::move(text);
    o.doc["forms"] = std::move(forms);
  } else if (cmd == "check-structure") {
    const Tropicalization t = parse_tropicalization(in);
    const StructureReport r = check_structure(t, *job.dim, job.seed);
    o.doc = structure_json(r, t);
    if (!r.passed) {
      o.check_failure = Error(Errc::check_failed,
                              std::to_string(r.issues.size()) + " structure issue(s)");
    }
  } else if (cmd.starts_with("splice ")) {
    const SpliceDiagram d = parse_splice(in);
    if (cmd == "splice validate") {
      const SpliceReport r = validate(d);
      o.doc = splice_report_json(r, d);
      if (!r.passed()) o.check_failure = Error(Errc::check_failed, "splice diagram conditions fail");
    } else if (cmd == "splice system") {
      SpliceOptions opt;
      if (!job.coeffs_path.empty()) opt = parse_splice_options(read_json_file(job.coeffs_path), d);
      o.doc = splice_system_json(splice_system(d, opt), d);
    } else if (cmd == "splice trop") {
      o.doc = tropicalization_json(splice_tropicalization(d));
    } else {
      const CrosscheckReport r = crosscheck_tropicalization(d);
      o.doc = crosscheck_json(r);
      if (!r.passed) {
        o.check_failure = Error(Errc::check_failed, r.precondition_failure.empty()
                                                        ? "crosscheck failed"
                                                        : r.precondition_failure);
      }
    }
  } else if (cmd == "arc-weight") {
    const AnyArc arc = parse_arc(in);
    std::vector<Series> elements;
    if (in.contains("elements")) {
      const json& je = in.at("elements");
      for (std::size_t i = 0; i < je.size(); ++i) {
        elements.push_back(parse_series(je[i], "/elements/" + std::to_string(i)));
      }
    }
    std::visit(
        [&](const auto& a) {
          LatticeVector w;
          std::vector<SemivaluationValue> vals;
          if constexpr (std::is_same_v<std::decay_t<decltype(a)>, ExactArc>) {
            w = arc_weight(a);
            if (!elements.empty()) vals = semivaluation_on(a, elements);
          } else {
            w = arc_weight(a, job.tol);
            if (!elements.empty()) vals = semivaluation_on(a, elements, job.tol);
          }
          o.doc["kind"] = "arc_weight";
          o.doc["weight"] = vector_json(w);
          o.doc["primitive_weight"] = vector_json(primitive(w));
          json sv = json::array();
          for (const auto& v : vals) {
            sv.push_back({{"value", v.value ? json(*v.value) : json(nullptr)},
                          {"validity", v.validity >= kExact ? json("exact") : json(v.validity)},
                          {"text", v.to_string()}});
          }
          if (!elements.empty()) o.doc["semivaluations"] = std::move(sv);
        },
        arc);
  } else if (cmd == "puiseux") {
    const Series f = parse_series(in);
    PuiseuxOptions opt;
    opt.depth = job.depth;
    opt.tol = job.tol;
    std::size_t failures = 0;
    if (job.mode == "exact") {
      opt.mode = CoefficientMode::exact;
      auto r = puiseux_expand_exact(f, opt);
      failures = r.failures.size();
      o.doc = puiseux_json(r, opt);
      if (failures) o.check_failure = Error(r.failures.front().code, r.failures.front().message);
    } else {
      opt.mode = CoefficientMode::floating;
      auto r = puiseux_expand_float(f, opt);
      failures = r.failures.size();
      o.doc = puiseux_json(r, opt);
      if (failures) o.check_failure = Error(r.failures.front().code, r.failures.front().message);
    }
  } else if (cmd == "extended-cone") {
    o.doc = extended_cone_json(extended_cone(parse_cone_input(in)));
  } else if (cmd == "toric-germ") {
    o.doc = tropicalization_json(troploc_toric_germ(parse_cone_input(in)));
  } else if (cmd == "render") {
    RenderOptions ro;
    ro.box = std::min(job.box, 40L);
    o.svg = render_svg(in, ro);
  } else {
    fail(Errc::internal, "unhandled command " + cmd);
  }
  return o;
}

void check_options(const JobSpec& job) {
  const auto& cmds = commands();
  require(std::find(cmds.begin(), cmds.end(), job.command) != cmds.end(), Errc::invalid_input,
          "unknown command \"" + job.command + "\"");
  require(!job.inputs.empty(), Errc::invalid_input, "no input files");
  require(job.mode == "exact" || job.mode == "float", Errc::invalid_input,
          "--mode is exact or float");
  require(job.box >= 1, Errc::invalid_input, "--box must be positive");
  require(job.depth >= 1, Errc::invalid_input, "--depth must be positive");
  require(job.tol > 0, Errc::invalid_input, "--tol must be positive");
  require(job.jobs >= 1, Errc::invalid_input, "--jobs must be positive");
  if (job.command == "initial-form") {
    require(job.weight.has_value(), Errc::invalid_input, "initial-form needs -w");
    parse_vector_text(*job.weight);
  }
  if (job.command == "check-structure") {
    require(job.dim.has_value(), Errc::invalid_input, "check-structure needs --dim");
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "polyhedron",     "fan",           "divisor",       "plane-curve",      "initial-form",
      "ideal-upper",    "check-structure", "splice validate", "splice system", "splice trop",
      "splice crosscheck", "arc-weight",  "puiseux",       "extended-cone",    "toric-germ",
      "render"};
  return names;
}

long box_from_env(long fallback) {
  const char* v = std::getenv("TROPLOC_BOX");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long b = std::strtol(v, &end, 10);
  if (*end != '\0' || b < 1) return fallback;
  return b;
}

Artifact run_one(const JobSpec& job, const std::string& input) {
  Artifact a;
  try {
    Outcome o = compute(job, input);
    a.body = o.svg.empty() ? dump(o.doc) : o.svg;
    if (o.check_failure) {
      a.status = kPreconditionError;
      a.error = error_json(o.check_failure->code(), o.check_failure->what(), input);
    }
  } catch (const Error& e) {
    a.status = status_of(e.code());
    a.error = error_json(e.code(), e.what(), input);
  } catch (const json::exception& e) {
    a.status = kInputError;
    a.error = error_json(Errc::invalid_input, e.what(), input);
  } catch (const std::exception& e) {
    a.status = kInternalError;
    a.error = error_json(Errc::internal, e.what(), input);
  }
  return a;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    check_options(job);
  } catch (const Error& e) {
    err << error_json(e.code(), e.what(), "");
    return status_of(e.code());
  }

  std::vector<Artifact> results(job.inputs.size());
  for (std::size_t start = 0; start < job.inputs.size(); start += job.jobs) {
    const std::size_t stop = std::min(job.inputs.size(), start + job.jobs);
    if (stop - start == 1) {
      results[start] = run_one(job, job.inputs[start]);
      continue;
    }
    std::vector<std::future<Artifact>> pending;
    for (std::size_t i = start; i < stop; ++i) {
      pending.push_back(std::async(std::launch::async, run_one, std::cref(job), std::cref(job.inputs[i])));
    }
    for (std::size_t i = start; i < stop; ++i) results[i] = pending[i - start].get();
  }

  int status = kOk;
  const bool to_dir = !job.output.empty() && job.inputs.size() > 1;
  if (to_dir) {
    std::error_code ec;
    fs::create_directories(job.output, ec);
    if (ec) {
      err << error_json(Errc::invalid_input, "cannot create " + job.output, "");
      return kInputError;
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Artifact& a = results[i];
    status = std::max(status, a.status);
    if (!a.error.empty()) err << a.error;
    if (a.body.empty()) continue;
    if (job.output.empty()) {
      out << a.body;
      continue;
    }
    const std::string path =
        to_dir ? (fs::path(job.output) / (stem_of(job.inputs[i]) + "." + suffix_for(job.command))).string()
               : job.output;
    std::ofstream f(path, std::ios::binary);
    f << a.body;
    if (!f) {
      err << error_json(Errc::invalid_input, "cannot write " + path, job.inputs[i]);
      status = std::max<int>(status, kInputError);
    }
  }
  return status;
}

}  // namespace troploc::cli
