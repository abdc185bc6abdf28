#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "morita/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "morita");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = morita::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(std::string const& name) {
  return std::filesystem::temp_directory_path() / ("morita_cli_test_" + name);
}

nlohmann::json read_json(std::filesystem::path const& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("duality transfer passes on E1") {
    auto report = temp_path("33.json");
    auto r = run({"theorem", "3.3", "--fixture", "E1", "--bound", "2", "--report", report.string()});
    CHECK(r.code == 0);
    auto j = read_json(report);
    CHECK(j["verdict"] == "pass");
    CHECK(j["exit_code"] == 0);
    CHECK(j["parameters"]["bound"] == 2);
    CHECK(j.contains("hypotheses"));
    CHECK(j.contains("witnesses"));
    std::filesystem::remove(report);
  }

  TEST_CASE("gorenstein transfer is consistent up to the window") {
    auto report = temp_path("43.json");
    auto r = run({"theorem", "4.3", "--fixture", "E2", "--window", "4", "--report", report.string()});
    CHECK(r.code == 2);
    auto j = read_json(report);
    CHECK(j["verdict"] == "consistent-up-to-bound");
    CHECK(j["parameters"]["window"] == 4);
    std::filesystem::remove(report);
  }

  TEST_CASE("classification") {
    CHECK(run({"classify", "proj", "Delta", "--fixture", "E2"}).code == 0);
    CHECK(run({"classify", "proj", "k", "--fixture", "E2"}).code == 1);
    CHECK(run({"classify", "flat", "Tk", "--fixture", "E2"}).code == 1);
    CHECK(run({"classify", "inj", "A", "--fixture", "E2"}).code == 0);
  }

  TEST_CASE("module and tuple commands") {
    CHECK(run({"validate", "--fixture", "E1"}).code == 0);
    CHECK(run({"dual", "Tk", "--fixture", "E2"}).code == 0);
    CHECK(run({"dual", "k", "--fixture", "E2"}).code == 0);
    CHECK(run({"tensor", "M", "k", "--fixture", "E2"}).code == 0);
    CHECK(run({"functor", "t_A", "k", "--fixture", "E2"}).code == 0);
    CHECK(run({"functor", "h_A", "k", "--fixture", "E2"}).code == 0);
    CHECK(run({"functor", "t_B", "B", "--fixture", "E2"}).code == 0);
    CHECK(run({"pack", "Tk", "--fixture", "E2"}).code == 0);
    CHECK(run({"unpack", "Delta", "--fixture", "E2"}).code == 0);
    CHECK(run({"class-member", "A", "Tk", "--fixture", "E2", "--c1", "all", "--d1", "all"}).code == 0);
    CHECK(run({"class-member", "B", "Tk", "--fixture", "E2"}).code == 1);
    auto e = run({"enumerate", "--fixture", "E2", "--max-dim", "1"});
    CHECK(e.code == 0);
    CHECK(e.out.find("count") != std::string::npos);
  }

  TEST_CASE("duality pairs from the command line") {
    CHECK(run({"duality-pair", "--fixture", "E2", "--left", "flat@A", "--right", "fp-injective"}).code == 0);
    CHECK(run({"duality-pair", "--fixture", "E2", "--left", "C1", "--right", "C2", "--complete"}).code == 0);
    CHECK(run({"duality-pair", "--fixture", "E2", "--left", "flat@A", "--right", "all"}).code == 1);
  }

  TEST_CASE("other theorem keys") {
    CHECK(run({"theorem", "4.7", "--fixture", "E1", "--bound", "2"}).code == 0);
    CHECK(run({"theorem", "3.6", "--fixture", "E2"}).code == 0);
    CHECK(run({"theorem", "perfect-transfer", "--fixture", "E3"}).code == 0);
    CHECK(run({"theorem", "4.8", "--fixture", "E2"}).code == 2);
  }

  TEST_CASE("input errors exit with 4 and still write a report") {
    auto report = temp_path("err.json");
    auto r = run({"theorem", "9.9", "--fixture", "E1", "--report", report.string()});
    CHECK(r.code == 4);
    CHECK(read_json(report)["verdict"] == "input-error");
    std::filesystem::remove(report);
    CHECK(run({"theorem", "3.3", "--fixture", "E9"}).code == 4);
    CHECK(run({"theorem", "3.3"}).code == 4);
    CHECK(run({"classify", "proj", "nothing", "--fixture", "E2"}).code == 4);
    CHECK(run({"classify", "proj", "k", "--fixture", "E2", "--bound", "x"}).code == 4);
    CHECK(run({"functor", "t_Q", "k", "--fixture", "E2"}).code == 4);
    CHECK(run({"theorem", "3.3", "--fixture", "E1", "--c1", "C9"}).code == 4);
    CHECK(run({}).code == 4);
  }

  TEST_CASE("malformed workspace files exit with 4") {
    auto path = temp_path("bad.ws");
    std::ofstream(path) << "field 2\nalgebra A 1\n  basis 1\n  unit 1\n  mul 0 0 1\n";
    auto r = run({"validate", "--workspace", path.string()});
    CHECK(r.code == 4);
    CHECK(r.err.find("bad.ws:") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("a missing projective coresolution is a hypothesis failure") {
    auto path = std::string(MORITA_TEST_DATA) + "/path_algebra.ws";
    CHECK(run({"validate", "--workspace", path}).code == 0);
    auto report = temp_path("window.json");
    CHECK(run({"theorem", "4.3", "--workspace", path, "--report", report.string()}).code == 3);
    CHECK(read_json(report)["verdict"] == "hypothesis-failure");
    std::filesystem::remove(report);
  }

  TEST_CASE("budget exhaustion is an input error") {
    ::setenv("MORITA_ENUM_BUDGET", "3", 1);
    CHECK(run({"enumerate", "--fixture", "E2", "--max-dim", "2"}).code == 4);
    ::unsetenv("MORITA_ENUM_BUDGET");
  }
}
