#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "epx/errors.hpp"
#include "epx/io.hpp"
#include "epx/report.hpp"
#include "epx/verify.hpp"
#include "support.hpp"

using namespace epx;
using testing::D;

namespace {

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "epx_test_io_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(EPX_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parsing spaces") {
  const EpMetricSpace m = parse_space(R"({"labels": ["a", "b"], "matrix": [[0, "inf"], ["INF", 0]]})", "json-matrix");
  REQUIRE(m.size() == 2);
  CHECK(m.label(1) == "b");
  CHECK(m.d(0, 1).is_inf());

  const EpMetricSpace p = parse_space(R"({"points": [[0], [1], [3]]})", "json-points");
  REQUIRE(p.size() == 3);
  CHECK(p.d(0, 2) == D(3));
  CHECK(p.d(1, 2) == D(2));

  const EpMetricSpace c = parse_space(",a,b\na,0,2\nb,2,0\n", "csv");
  CHECK(c.labels() == std::vector<std::string>{"a", "b"});
  CHECK(c.d(0, 1) == D(2));
  const EpMetricSpace bare = parse_space("a,b\n0,Infinity\ninf,0\n", "csv");
  CHECK(bare.d(1, 0).is_inf());

  try {
    parse_space("{\"matrix\": [[0, 1],\n [1, 0]", "json-matrix");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_space("a,b\n0,1\n1,x\n", "csv"), ParseError);
  CHECK_THROWS_AS(parse_space(R"({"matrix": [[0, -1], [-1, 0]]})", "json-matrix"), ParseError);
  CHECK_THROWS_AS(parse_space("{}", "yaml"), ParseError);
  CHECK_THROWS_AS(parse_space(R"({"matrix": [[0, 1], [2, 0]]})", "json-matrix"), Error);
}

TEST_CASE("reports are deterministic") {
  SuiteOptions o;
  o.count = 3;
  const SuiteReport a = run_suite("theorem16", o);
  const SuiteReport b = run_suite("theorem16", o);
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(report_tsv(a) == report_tsv(b));
  CHECK_FALSE(report_json(a).contains("duration_seconds"));

  const std::string p1 = (scratch() / "r1.json").string();
  const std::string p2 = (scratch() / "r2.json").string();
  emit_report(a, p1, "json");
  emit_report(b, p2, "json");
  CHECK(read_file(p1) == read_file(p2));

  SuiteReport empty;
  empty.name = "none";
  CHECK(empty.passed());
  const nlohmann::json e = report_json(empty);
  CHECK(e["checks"].empty());
  CHECK(e["passed"] == true);

  SuiteReport dup;
  dup.add("x", "p", true, "");
  CHECK_THROWS_AS(dup.add("x", "p", true, ""), std::logic_error);
  CHECK_THROWS_AS(run_suite("no-such-suite", o), UnknownSuite);
}

TEST_CASE("command-line exit codes") {
  const std::string square = write_file("square.json", R"({"points": [[0,0],[1,0],[1,1],[0,1]]})");
  const std::string broken = write_file("broken.json", "{\"matrix\": [[0, 1]");
  const std::string csv = write_file("pair.csv", "a,b\n0,1\n1,0\n");
  const std::string out = (scratch() / "out.json").string();

  CHECK(run("vr --input " + square) == 0);
  CHECK(run("singular --input " + square + " --dim 2 --t 1,inf") == 0);
  CHECK(run("realize --input " + csv) == 0);
  CHECK(run("partial-realize --input " + square + " --t 1") == 0);
  CHECK(run("betti --input " + square + " --out-format tsv") == 0);
  CHECK(run("barcode --input " + csv + " --system degree-rips --k 2") == 0);
  CHECK(run("compare --input " + square + " --out " + out) == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(out));
  CHECK(doc["passed"] == true);
  CHECK_FALSE(doc["rows"].empty());
  CHECK(run("suite --suite axioms --count 2") == 0);

  CHECK(run("") == 2);
  CHECK(run("vr") == 2);
  CHECK(run("vr --input " + broken) == 2);
  CHECK(run("vr --input /nonexistent/space.json") == 2);
  CHECK(run("betti --input " + square + " --dim 2 --kmax 2") == 2);
  CHECK(run("barcode --input " + csv + " --system degree-rips --k 5") == 2);
  CHECK(run("suite --suite nonsense") == 2);
  CHECK(run("vr --input " + square + " --out-format xml") == 2);
}
