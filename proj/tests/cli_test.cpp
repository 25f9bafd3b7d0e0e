#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/io.hpp"
#include "cli/run.hpp"
#include "troploc/error.hpp"

using namespace troploc;
using namespace troploc::cli;
namespace fs = std::filesystem;

namespace {

const std::string kData = TROPLOC_DATA_DIR;
const std::string kGolden = TROPLOC_GOLDEN_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

json golden(const std::string& name) { return read_json_file(kGolden + "/" + name); }

JobSpec job(const std::string& command) {
  JobSpec j;
  j.command = command;
  return j;
}

Artifact run_on(const JobSpec& j, const std::string& input) { return run_one(j, input); }

json body(const Artifact& a) { return json::parse(a.body); }

json error_of(const Artifact& a) { return json::parse(a.error).at("error"); }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("troploc_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string write(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::vector<long>> maximal_rays(const json& trop) {
  std::vector<std::vector<long>> out;
  for (const auto& c : trop["cones"]) {
    if (!c["maximal"].get<bool>()) continue;
    for (const auto& r : c["rays"]) out.push_back(r.get<std::vector<long>>());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(Golden, CuspDivisor) {
  const Artifact a = run_on(job("divisor"), data("cusp.series.json"));
  ASSERT_EQ(a.status, kOk) << a.error;
  EXPECT_EQ(body(a), golden("cusp.trop.json"));
  EXPECT_EQ(maximal_rays(body(a)), (std::vector<std::vector<long>>{{2, 3}}));
}

TEST(Golden, PhamBrieskornDivisor) {
  const Artifact a = run_on(job("divisor"), data("pb237.series.json"));
  ASSERT_EQ(a.status, kOk) << a.error;
  EXPECT_EQ(body(a), golden("pb237.trop.json"));
  EXPECT_EQ(maximal_rays(body(a)),
            (std::vector<std::vector<long>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {21, 14, 6}}));
}

TEST(Golden, TwoNodeSplice) {
  const Artifact report = run_on(job("splice validate"), data("two_node.splice.json"));
  ASSERT_EQ(report.status, kOk) << report.error;
  EXPECT_EQ(body(report), golden("two_node.report.json"));

  JobSpec sys = job("splice system");
  sys.coeffs_path = data("two_node.coeffs.json");
  const Artifact system = run_on(sys, data("two_node.splice.json"));
  ASSERT_EQ(system.status, kOk) << system.error;
  EXPECT_EQ(body(system), golden("two_node.system.json"));
  const auto eqs = parse_generators(json{{"generators", body(system)["equations"]}});
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[0], Series::over_orthant(4, {{{2, 0, 0, 0}, 1}, {{0, 3, 0, 0}, -1}, {{0, 0, 1, 1}, 1}}));

  const Artifact trop = run_on(job("splice trop"), data("two_node.splice.json"));
  ASSERT_EQ(trop.status, kOk) << trop.error;
  EXPECT_EQ(body(trop), golden("two_node.trop.json"));
  const auto rays = maximal_rays(body(trop));
  EXPECT_EQ(rays.size(), 6u);
  EXPECT_TRUE(std::find(rays.begin(), rays.end(), std::vector<long>{21, 14, 12, 30}) != rays.end());
  EXPECT_TRUE(std::find(rays.begin(), rays.end(), std::vector<long>{30, 20, 22, 55}) != rays.end());
}

TEST(RoundTrip, Series) {
  const Series f = Series::over_orthant(3, {{{2, 0, 0}, Rational(-3, 7)}, {{0, 5, 1}, 1}, {{0, 0, 4}, 12}});
  EXPECT_EQ(parse_series(series_json(f)), f);
}

TEST(RoundTrip, Tropicalization) {
  const json doc = golden("pb237.trop.json");
  const Tropicalization t = parse_tropicalization(doc);
  EXPECT_EQ(t.fan.maximal_cones().size(), 3u);
  EXPECT_EQ(tropicalization_json(t), doc);
}

TEST(RoundTrip, SpliceDiagram) {
  const SpliceDiagram d = parse_splice(read_json_file(data("two_node.splice.json")));
  const SpliceDiagram e = parse_splice(splice_json(d));
  EXPECT_EQ(weight_vector(e, 0), weight_vector(d, 0));
  EXPECT_EQ(weight_vector(e, 1), weight_vector(d, 1));
  EXPECT_EQ(e.edges(), d.edges());
}

TEST(RoundTrip, Arc) {
  const AnyArc a = parse_arc(read_json_file(data("cusp.arc.json")));
  ASSERT_TRUE(std::holds_alternative<ExactArc>(a));
  const ExactArc& x = std::get<ExactArc>(a);
  const AnyArc b = parse_arc(arc_json(x));
  const ExactArc& y = std::get<ExactArc>(b);
  EXPECT_EQ(y.coords, x.coords);
  EXPECT_EQ(y.precision, x.precision);
}

TEST(RoundTrip, Integers) {
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(parse_integer(integer_json(big), "/x"), big);
  EXPECT_EQ(parse_integer(integer_json(Integer(-5)), "/x"), -5);
  EXPECT_EQ(parse_rational(json(rational_string(Rational(-3, 4))), "/x"), Rational(-3, 4));
}

TEST(Errors, SyntaxErrorHasLineAndColumn) {
  const fs::path dir = scratch("syntax");
  const std::string p = write(dir, "bad.json", "{\n  \"rank\": 2,\n  \"terms\": [\n}\n");
  const Artifact a = run_on(job("divisor"), p);
  EXPECT_EQ(a.status, kInputError);
  const json e = error_of(a);
  EXPECT_EQ(e["code"], "parse_error");
  EXPECT_NE(e["message"].get<std::string>().find("bad.json:4:"), std::string::npos) << e.dump();
}

TEST(Errors, SchemaErrorsPointAtField) {
  const fs::path dir = scratch("schema");
  const std::string wrong_len = write(dir, "len.json", R"({"rank": 2, "terms": [{"exp": [1], "coef": "1"}]})");
  const Artifact a = run_on(job("divisor"), wrong_len);
  EXPECT_EQ(a.status, kInputError);
  EXPECT_NE(error_of(a)["message"].get<std::string>().find("/terms/0/exp"), std::string::npos);

  const std::string floaty = write(dir, "float.json", R"({"rank": 2, "terms": [{"exp": [1, 0], "coef": 0.5}]})");
  EXPECT_EQ(run_on(job("divisor"), floaty).status, kInputError);
}

TEST(Errors, PreconditionsExitTwo) {
  const fs::path dir = scratch("pre");
  const std::string divisible = write(
      dir, "div.json", R"({"rank": 2, "terms": [{"exp": [1, 1], "coef": "1"}, {"exp": [2, 1], "coef": "1"}]})");
  const Artifact a = run_on(job("divisor"), divisible);
  EXPECT_EQ(a.status, kPreconditionError);
  EXPECT_EQ(error_of(a)["code"], "not_interior");

  JobSpec iw = job("initial-form");
  iw.weight = "0,1";
  EXPECT_EQ(run_on(iw, data("cusp.series.json")).status, kPreconditionError);
}

TEST(Errors, DiagnosticFailureWritesReportAndExitsTwo) {
  const fs::path dir = scratch("diag");
  const std::string trop = write(dir, "cusp.trop.json", golden("cusp.trop.json").dump());
  JobSpec ok = job("check-structure");
  ok.dim = 1;
  EXPECT_EQ(run_on(ok, trop).status, kOk);
  JobSpec bad = job("check-structure");
  bad.dim = 2;
  const Artifact a = run_on(bad, trop);
  EXPECT_EQ(a.status, kPreconditionError);
  EXPECT_EQ(error_of(a)["code"], "check_failed");
  EXPECT_EQ(body(a)["passed"], false);
}

TEST(Errors, InvalidOptions) {
  std::ostringstream out, err;
  JobSpec j = job("divisor");
  j.inputs = {data("cusp.series.json")};
  j.mode = "approximate";
  EXPECT_EQ(run(j, out, err), kInputError);
  JobSpec u = job("no-such-command");
  u.inputs = {data("cusp.series.json")};
  EXPECT_EQ(run(u, out, err), kInputError);
}

TEST(Commands, VerifyAddsBoxCheck) {
  JobSpec j = job("divisor");
  j.verify = true;
  j.box = 8;
  const Artifact a = run_on(j, data("pb237.series.json"));
  ASSERT_EQ(a.status, kOk) << a.error;
  const json v = body(a)["verification"];
  EXPECT_EQ(v["passed"], true);
  EXPECT_EQ(v["points"], 512);
}

TEST(Commands, PuiseuxAndArcWeight) {
  JobSpec p = job("puiseux");
  const Artifact a = run_on(p, data("cusp.series.json"));
  ASSERT_EQ(a.status, kOk) << a.error;
  EXPECT_EQ(body(a)["branches"].size(), 1u);

  const Artifact w = run_on(job("arc-weight"), data("cusp.arc.json"));
  ASSERT_EQ(w.status, kOk) << w.error;
  EXPECT_EQ(body(w)["weight"], json::parse("[2, 3]"));
}

TEST(Commands, RenderProducesSvg) {
  const fs::path dir = scratch("render");
  const std::string trop = write(dir, "pb.trop.json", golden("pb237.trop.json").dump());
  const Artifact a = run_on(job("render"), trop);
  ASSERT_EQ(a.status, kOk) << a.error;
  EXPECT_EQ(a.body.rfind("<svg", 0), 0u);
  EXPECT_NE(a.body.find("</svg>"), std::string::npos);
}

TEST(Determinism, RepeatedRunsAgree) {
  for (const char* cmd : {"divisor", "fan", "polyhedron"}) {
    const Artifact a = run_on(job(cmd), data("pb237.series.json"));
    const Artifact b = run_on(job(cmd), data("pb237.series.json"));
    EXPECT_EQ(a.body, b.body) << cmd;
  }
}

TEST(Determinism, ParallelJobsMatchSerial) {
  const fs::path serial = scratch("serial"), parallel = scratch("parallel");
  std::ostringstream out, err;
  JobSpec j = job("divisor");
  j.inputs = {data("cusp.series.json"), data("pb237.series.json")};
  j.output = serial.string();
  ASSERT_EQ(run(j, out, err), kOk) << err.str();
  j.output = parallel.string();
  j.jobs = 2;
  ASSERT_EQ(run(j, out, err), kOk) << err.str();
  for (const char* name : {"cusp.trop.json", "pb237.trop.json"}) {
    std::ifstream a(serial / name), b(parallel / name);
    ASSERT_TRUE(a && b) << name;
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
  }
}

TEST(Environment, BoxFromEnv) {
  ::setenv("TROPLOC_BOX", "7", 1);
  EXPECT_EQ(box_from_env(12), 7);
  ::setenv("TROPLOC_BOX", "junk", 1);
  EXPECT_EQ(box_from_env(12), 12);
  ::unsetenv("TROPLOC_BOX");
  EXPECT_EQ(box_from_env(12), 12);
}
