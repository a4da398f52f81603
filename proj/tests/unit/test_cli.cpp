#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "thv/cli.hpp"
#include "thv/json_io.hpp"
#include "thv/modules.hpp"

using namespace thv;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("thv_cli_" + name);
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run_cli({"bracket", "--t", "1", "--x", "L[2]", "--y", "L[-2]"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "4*L[0] + 1/2*c1\n");

  r = run_cli({"aut", "--l2", "0", "--l3", "1"});
  CHECK(r.status == cli::kExitOk);
  CHECK(io::json::parse(r.out).at("case") == "Z2");

  r = run_cli({"check-commutator", "--t", "3", "--max-mode", "3", "--max-level", "3", "--l3", "0"});
  CHECK(r.status == cli::kExitOk);
  CHECK(io::json::parse(r.out).at("failures") == 0);
}

TEST_CASE("every command runs") {
  const std::vector<std::vector<std::string>> jobs{
      {"act", "--t", "2", "--x", "L[1]", "--v", "L[-1]|0>"},
      {"basis", "--t", "1", "--level", "3"},
      {"dim", "--t", "2", "--max-level", "2"},
      {"character", "--t", "2", "--k1", "1", "--k3", "1", "--h", "1/3", "--max-level", "1"},
      {"gram", "--t", "2", "--level", "1"},
      {"irrdim", "--t", "3", "--k1", "1", "--k3", "1", "--h", "0", "--level", "2/3"},
      {"singular", "--t", "3", "--k1", "1", "--k3", "1", "--h", "0", "--level", "2/3"},
      {"check-jacobi", "--t", "2", "--max-index", "2"},
      {"check-delta", "--m", "2", "--n", "1"},
      {"check-conformal", "--l1", "2", "--l2", "0", "--l3", "1", "--max-level", "1", "--max-mode", "1"},
  };
  for (const auto& job : jobs) {
    CAPTURE(job.front());
    const auto r = run_cli(job);
    CHECK(r.status == cli::kExitOk);
    CHECK_FALSE(r.out.empty());
    CHECK(r.err.empty());
  }
}

TEST_CASE("exit status 1 on a failing check") {
  const auto r = run_cli({"check-commutator", "--t", "3", "--max-mode", "1", "--max-level", "1"});
  CHECK(r.status == cli::kExitCheckFailed);
  CHECK(io::json::parse(r.out).at("failures").get<int>() > 0);
}

TEST_CASE("usage errors name the offending field") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"bracket", "--x", "L[2", "--y", "L[1]"}, "--x"},
      {{"bracket", "--x", "L[2]", "--y", "I[1/2]"}, "--y"},
      {{"bracket", "--x", "L[2]"}, "--y"},
      {{"aut", "--l2", "1/0", "--l3", "1"}, "--l2"},
      {{"act", "--t", "2", "--x", "L[1]", "--v", "L[-1]"}, "--v"},
      {{"basis", "--t", "2", "--level", "1/3"}, "--level"},
      {{"gram", "--t", "2", "--l2", "1", "--level", "1"}, "--l2"},
      {{"dim", "--t", "1", "--k3", "1", "--level", "1"}, "--k3"},
      {{"singular", "--t", "2", "--k1", "1", "--k3", "1", "--level", "1"}, "--h"},
      {{"gram", "--t", "2", "--level", "1", "--format", "xml"}, "--format"},
      {{"frobnicate"}, "command"},
  };
  for (const auto& [args, field] : cases) {
    CAPTURE(args.front());
    const auto r = run_cli(args);
    CHECK(r.status == cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.find(field) != std::string::npos);
  }
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> job{"gram", "--t", "2", "--level", "3/2"};
  CHECK(run_cli(job).out == run_cli(job).out);
  const std::vector<std::string> sweep{"check-commutator", "--t", "2", "--max-mode", "2", "--max-level", "1"};
  CHECK(run_cli(sweep).out == run_cli(sweep).out);
}

TEST_CASE("printed elements and vectors parse back") {
  const auto b = run_cli({"bracket", "--t", "2", "--x", "L[3/1] + I[1/2]", "--y", "L[-3] + 2*I[-1/2]"});
  REQUIRE(b.status == cli::kExitOk);
  const std::string element = b.out.substr(0, b.out.size() - 1);
  CHECK(AlgebraElement::parse(element).str() == element);

  const auto a = run_cli({"act", "--t", "1", "--x", "L[1] + I[2]", "--v", "L[-2]I[-1]I[-1]|0>", "--format", "json"});
  REQUIRE(a.status == cli::kExitOk);
  const auto j = io::json::parse(a.out);
  const Module vac(ModuleDescriptor::vacuum());
  const ModuleVector v = vac.parse_vector(j.at("text").get<std::string>());
  CHECK(v.str() == j.at("text").get<std::string>());
  CHECK(io::vector_from_json(vac, j.at("result")) == v);
}

TEST_CASE("csv character report") {
  const auto r =
      run_cli({"character", "--t", "2", "--k1", "1", "--k3", "1", "--h", "1/3", "--max-level", "1", "--format", "csv"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "level,verma_dim,irr_dim,nullity\n0,1,1,0\n1/2,1,1,0\n1,2,2,0\n");
}

TEST_CASE("config file with flag override and --out") {
  const auto cfg = scratch("job.toml");
  const auto out = scratch("report.json");
  {
    std::ofstream f(cfg);
    f << "command = \"gram\"\nt = 2\nlevel = \"1/2\"\nl3 = \"2\"\n";
  }
  auto r = run_cli({"--config", cfg.string(), "--format", "text"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.find("[1]") != std::string::npos);

  r = run_cli({"--config", cfg.string(), "--l3", "5", "--out", out.string()});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const auto j = io::json::parse(in);
  CHECK(j.at("entries").dump() == R"([["5/2"]])");

  r = run_cli({"--config", scratch("missing.toml").string()});
  CHECK(r.status == cli::kExitUsage);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
