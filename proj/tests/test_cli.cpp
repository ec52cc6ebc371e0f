#include "fixtures.hpp"

#include "wonder/cli.hpp"
#include "wonder/json_io.hpp"
#include "wonder/render.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wonder;
using namespace fixtures;

namespace {

const std::string source_dir = WONDER_SOURCE_DIR;

std::string data(const std::string& name) { return source_dir + "/data/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wonder");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("wonder_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("check passes on the coordinate job") {
  auto r = run({"check", "--input", data("p1p1_coordinate.json")});
  CHECK(r.code == Ok);
  CHECK(r.out.find("hilbert (1,3,1) = oracle (1,3,1): pass") != std::string::npos);
}

TEST_CASE("validate reports the P2 diagonal violation") {
  auto r = run({"validate", "--input", data("p2_diagonal.json")});
  CHECK(r.code == ValidationFailure);
  CHECK(r.out.find("equal-sign violation: cone((1,0),(0,1))") != std::string::npos);
  auto ok = run({"validate", "--input", data("p1p1_coordinate.json")});
  CHECK(ok.code == Ok);
}

TEST_CASE("poset on a single-layer job has one element") {
  auto r = run({"poset", "--format", "json", "--input", data("p1_one_point.json")});
  CHECK(r.code == Ok);
  CHECK(Json::parse(r.out)["elements"].size() == 1);
}

TEST_CASE("text rendering") {
  auto r = run({"present", "--input", data("p1_one_point.json")});
  CHECK(r.code == Ok);
  for (const char* s : {"t1*c(+1)", "t1*c(-1)", "-t1 + c(-1)"}) CHECK(r.out.find(s) != std::string::npos);

  auto empty = run({"present", "--input", data("p2_empty.json")});
  CHECK(empty.code == Ok);
  CHECK(empty.out.find("t variables: none") != std::string::npos);
  CHECK(empty.out.find("relations tc") == std::string::npos);
  CHECK(empty.out.find("relations F") == std::string::npos);
  CHECK(empty.out.find("relations SR") != std::string::npos);

  auto s = run({"stratum", "--nested", "G1", "--input", data("p1p1_coordinate.json")});
  CHECK(s.code == Ok);
  CHECK(s.out.find("relations stratum_c:") != std::string::npos);
}

TEST_CASE("render_polynomial ordering") {
  Fan f = p1();
  Polynomial t1 = Polynomial::variable(3, 2), cp = Polynomial::variable(3, 0), cm = Polynomial::variable(3, 1);
  CHECK(render_polynomial(cm - t1, f) == "-t1 + c(-1)");
  CHECK(render_polynomial(t1 * t1 - Integer(3) * t1 * cp + cm * cm, f) == "t1^2 - 3*t1*c(+1) + c(-1)^2");
  CHECK(render_polynomial(Polynomial(3), f) == "0");
  CHECK(ray_name(vec({1, 0})) == "c(+1,0)");
  CHECK(ray_name(vec({0, -1})) == "c(0,-1)");
}

TEST_CASE("goodfan search") {
  auto r = run({"goodfan", "--search", "--format", "json", "--input", data("p2_diagonal.json")});
  CHECK(r.code == Ok);
  auto j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["subdivisions"] == 1);
  CHECK(j["budget"] == 8);
  auto starved = run({"goodfan", "--search", "--budget", "0", "--input", data("p2_diagonal.json")});
  CHECK(starved.code == BudgetExhausted);
  auto plain = run({"goodfan", "--input", data("p2_diagonal.json")});
  CHECK(plain.code == ValidationFailure);
}

TEST_CASE("WONDER_SEED is recorded") {
  setenv("WONDER_SEED", "7", 1);
  auto r = run({"goodfan", "--search", "--format", "json", "--input", data("p2_diagonal.json")});
  unsetenv("WONDER_SEED");
  CHECK(Json::parse(r.out)["seed"] == 7);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"check", "--input", temp_file("broken.json", "{ not json")}).code == SchemaError);
  CHECK(run({"check", "--input", temp_file("nofan.json", R"({"layers": []})")}).code == SchemaError);
  CHECK(run({"check", "--input", temp_file("badphi.json", slurp(data("p1_one_point.json")).replace(
                                                           slurp(data("p1_one_point.json")).find("\"0\""), 3, "\"x\""))})
            .code == SchemaError);
  CHECK(run({"check", "--input", source_dir + "/data/missing.json"}).code == SchemaError);
  CHECK(run({"frobnicate", "--input", data("p1_one_point.json")}).code == SchemaError);
  CHECK(run({"check"}).code == SchemaError);
  CHECK(run({"stratum", "--nested", "G9", "--input", data("p1p1_coordinate.json")}).code == SchemaError);
  CHECK(run({"stratum", "--nested", "D0,D1", "--input", data("p1p1_coordinate.json")}).code == ValidationFailure);
  CHECK(run({"check", "--input", data("p1p1_diagonals.json")}).code == ValidationFailure);
  // unsaturated lattice: not a split summand
  std::string two = R"({"fan": {"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]},
                        "layers": [{"gamma": [[2]], "phi": ["0"]}]})";
  CHECK(run({"check", "--input", temp_file("unsplit.json", two)}).code == ValidationFailure);
}

TEST_CASE("outputs are deterministic and --output writes the same bytes") {
  for (auto& args : std::vector<std::vector<std::string>>{
           {"present", "--format", "json", "--input", data("p1p1_coordinate.json")},
           {"nested", "--input", data("p1p1_coordinate.json")},
           {"check", "--jobs", "1", "--input", data("p1p1p1_coordinate.json")}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    auto path = (std::filesystem::temp_directory_path() / "wonder_test_output.txt").string();
    auto with_file = args;
    with_file.insert(with_file.end(), {"--output", path});
    auto c = run(with_file);
    CHECK(c.out.empty());
    CHECK(slurp(path) == a.out);
  }
  auto serial = run({"check", "--jobs", "1", "--input", data("p1p1p1_coordinate.json")});
  auto parallel = run({"check", "--jobs", "4", "--input", data("p1p1p1_coordinate.json")});
  CHECK(serial.out == parallel.out);
}

TEST_CASE("golden outputs") {
  struct Golden {
    std::vector<std::string> args;
    std::string file;
  };
  std::vector<Golden> goldens{
      {{"check", "--input", data("p1p1_coordinate.json")}, "check_p1p1_coordinate.txt"},
      {{"present", "--input", data("p1_one_point.json")}, "present_p1_one_point.txt"},
      {{"present", "--format", "json", "--input", data("p1p1_coordinate.json")}, "present_p1p1_coordinate.json"},
      {{"stratum", "--nested", "G1", "--input", data("p1p1_coordinate.json")}, "stratum_p1p1_point.txt"},
      {{"betti", "--input", data("p1p1p1_coordinate.json")}, "betti_p1p1p1_coordinate.txt"},
      {{"nested", "--input", data("p1p1_coordinate.json")}, "nested_p1p1_coordinate.txt"},
      {{"validate", "--input", data("p2_diagonal.json")}, "validate_p2_diagonal.txt"},
      {{"goodfan", "--search", "--format", "json", "--input", data("p2_diagonal.json")}, "goodfan_p2_diagonal.json"},
      {{"present", "--input", data("p2_empty.json")}, "present_p2_empty.txt"},
  };
  for (auto& g : goldens) {
    CAPTURE(g.file);
    CHECK(run(g.args).out == slurp(source_dir + "/tests/golden/" + g.file));
  }
}

TEST_CASE("JSON round trips") {
  for (auto& name : {"p1_one_point.json", "p1p1_coordinate.json", "p1p1_diagonals_subdivided.json", "p2_diagonal.json",
                     "p1p1p1_coordinate.json", "p2_empty.json"}) {
    Json raw = Json::parse(slurp(data(name)));
    JobSpec job = job_from_json(raw);
    CHECK(to_json(job.fan).dump() == raw["fan"].dump());
    CHECK(fan_from_json(to_json(job.fan)) == job.fan);
    JobSpec again = job_from_json(to_json(job));
    CHECK(again.fan == job.fan);
    CHECK(again.layers == job.layers);
    CHECK(to_json(again).dump() == to_json(job).dump());
    for (auto& l : job.layers) CHECK(layer_from_json(to_json(l), job.rank) == l);
  }
  auto m = model(p1p1(), coordinate_lines());
  auto p = assemble_model_ideal(m.ring, m.building);
  for (auto& r : p.relations)
    CHECK(polynomial_from_json(polynomial_to_json(r.poly, p.ray_count()), p.ray_count(), p.member_count()) == r.poly);
  auto h = hilbert_function(p, 3);
  Json pj = to_json(p, h);
  CHECK(Json::parse(pj.dump()) == pj);
  CHECK(pj["hilbert"] == Json::parse("[1,3,1,0]"));
  CHECK(pj["relations"].size() == p.relations.size());
}
