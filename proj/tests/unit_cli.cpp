#include "commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace artifact::cli;

namespace {
std::string data(const std::string &name) { return std::string(ARTIFACT_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gauge_cli");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}
} // namespace

TEST_CASE("homology command") {
  auto r = run_cli({"homology", "--input", data("sphere2.txt"), "--coeff", "Z/3", "--complex", "ext-config"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("H_1 = Z/3\n") != std::string::npos);
  auto e = run_cli({"homology", "--input", data("edge.txt"), "--coeff", "Z/2", "--complex", "local"});
  CHECK(e.out.find("H_1 = Z/2\n") != std::string::npos);
  auto o = run_cli({"homology", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--which", "ext-obs"});
  CHECK(o.out.find("H_-1 = Z/2\n") != std::string::npos);
}

TEST_CASE("verify command exit codes") {
  CHECK(run_cli({"verify", "--input", data("simplex2.txt"), "--coeff", "Z/2", "--suite", "eta"}).code == exit_ok);
  CHECK(run_cli({"verify", "--input", data("simplex3.txt"), "--coeff", "Z/6", "--suite", "zeta"}).code == exit_ok);
  auto d = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "deligne-compare"});
  CHECK(d.code == exit_ok);
  CHECK(d.out.find("[PASS] psi is a quasi-isomorphism") != std::string::npos);
  CHECK(run_cli({"verify", "--input", data("path.txt"), "--coeff", "Z/2", "--suite", "engine-vs-hand"}).code == exit_ok);
  CHECK(run_cli({"verify", "--input", data("path.txt"), "--coeff", "Z/3", "--suite", "pairing"}).code == exit_ok);

  auto z = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z", "--suite", "pairing"});
  CHECK(z.code == exit_usage);
  CHECK(z.err.find("observables are undefined for Z") != std::string::npos);

  // not the star of a simplex
  CHECK(run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "eta"}).code == exit_usage);

  auto s = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "separation"});
  CHECK(s.code == exit_inconclusive);
  auto s2 = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "separation", "--samples", "200"});
  CHECK(s2.code == exit_ok);
  CHECK(s2.out.find("witness in degree 0") != std::string::npos);
}

TEST_CASE("constant-sheaf command") {
  auto r = run_cli({"constant-sheaf", "--input", data("sphere2.txt"), "--coeff", "Z", "--degree", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("H_0 = Z    expected Z\nH_1 = 0    expected 0\nH_2 = Z    expected Z\n") != std::string::npos);
  auto p = run_cli({"constant-sheaf", "--input", data("path.txt"), "--coeff", "Z", "--degree", "0", "--format", "json"});
  CHECK(p.code == exit_ok);
  auto two = run_cli({"constant-sheaf", "--input", temp_file("two.txt", "a b\nc d\n"), "--coeff", "Z", "--degree", "0"});
  CHECK(two.out.find("H_0 = Z^2    expected Z^2") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
  CHECK(run_cli({}).code == exit_usage);
  CHECK(run_cli({"homology"}).code == exit_usage);
  CHECK(run_cli({"verify", "--input", data("edge.txt"), "--suite", "nonsense"}).code == exit_usage);
  CHECK(run_cli({"homology", "--input", data("edge.txt"), "--coeff", "Q"}).code == exit_usage);
  CHECK(run_cli({"homology", "--input", data("edge.txt"), "--coeff", "Z/1"}).code == exit_usage);
  auto empty = run_cli({"homology", "--input", temp_file("empty.txt", "# nothing\n")});
  CHECK(empty.code == exit_usage);
  CHECK(empty.err.find("no simplices") != std::string::npos);
  auto rep = run_cli({"homology", "--input", temp_file("repeat.txt", "a b\n\nc c d\n")});
  CHECK(rep.code == exit_usage);
  CHECK(rep.err.find("line 3") != std::string::npos);
  CHECK(run_cli({"homology", "--input", "/nonexistent/complex.txt"}).code == exit_usage);
  CHECK(run_cli({"--help"}).code == exit_ok);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  std::vector<std::vector<std::string>> cmds = {
      {"homology", "--input", data("torus7.txt"), "--coeff", "Z/2", "--complex", "deligne"},
      {"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "separation", "--samples", "100", "--seed", "9"},
      {"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "pairing", "--budget", "10"},
      {"constant-sheaf", "--input", data("sphere2.txt"), "--coeff", "Z/4", "--degree", "2"},
  };
  for (auto args : cmds) {
    args.push_back("--format");
    args.push_back("json");
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.out == b.out);
    Report r = report_from_json(nlohmann::json::parse(a.out));
    CHECK(render_json(r) == a.out);
    CHECK(report_from_json(to_json(r)) == r);
    CHECK(exit_code(r) == a.code);
  }
  // different seeds give different witnesses but the same verdict
  auto s1 = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "separation", "--samples", "50", "--seed", "1"});
  auto s2 = run_cli({"verify", "--input", data("sphere2.txt"), "--coeff", "Z/2", "--suite", "separation", "--samples", "50", "--seed", "2"});
  CHECK(s1.code == s2.code);
}
