#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dz/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dz::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("dz_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("chars lists even characters") {
  const auto r = run({"chars", "--parity", "even", "--qmax", "21"});
  CHECK(r.code == 0);
  const auto lines = data_lines(r.out);
  std::vector<int> qs;
  for (std::size_t i = 1; i < lines.size(); ++i) qs.push_back(std::stoi(lines[i]));
  for (int q : {5, 8, 10, 12, 13, 15, 17, 21}) CHECK(std::find(qs.begin(), qs.end(), q) != qs.end());
  CHECK(r.out.find("primitive") != std::string::npos);
}

TEST_CASE("chars lists odd characters") {
  const auto r = run({"chars", "--parity", "odd", "--qmax", "19"});
  CHECK(r.code == 0);
  const auto lines = data_lines(r.out);
  std::vector<int> qs;
  for (std::size_t i = 1; i < lines.size(); ++i) qs.push_back(std::stoi(lines[i]));
  for (int q : {3, 4, 6, 7, 11, 12, 14, 15, 19}) CHECK(std::find(qs.begin(), qs.end(), q) != qs.end());
}

TEST_CASE("chars with a small bound is empty") {
  const auto r = run({"chars", "--qmax", "2"});
  CHECK(r.code == 0);
  CHECK(data_lines(r.out).size() <= 1);
  const auto j = run({"chars", "--qmax", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).empty());
  CHECK(run({"chars", "--qmax", "-4"}).code == 2);
}

TEST_CASE("verify-fe on the family") {
  const auto r = run({"verify-fe", "--family", "q5", "--tau", "0.5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["max_residual"].get<double>() < 1e-8);
  CHECK(j["verdict"] == "PASS");
}

TEST_CASE("verify-fe detects a mismatched equation") {
  const auto r = run({"verify-fe", "--f", "zeta", "--fe", "q8"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "FAIL");
  CHECK(run({"verify-fe", "--f", "f0", "--q", "5", "--increasing-power"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"verify-fe", "--family", "q5", "--tau", "1.5"}).code == 2);
  CHECK(run({"report", "--q", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"zeros", "scan", "--f", "zeta", "--t", "1:80"}).code == 2);
  CHECK(run({"zeros", "scan", "--f", "zeta", "--t", "banana"}).code == 2);
  CHECK(run({"eval", "--f", "zeta", "--s", "1:0"}).code == 2);
  CHECK(run({"verify-fe", "--family", "q10"}).code == 2);
  CHECK(run({"chars", "--format", "xml"}).code == 2);
}

TEST_CASE("zeros scan for zeta") {
  const auto r = run({"zeros", "scan", "--f", "zeta", "--t", "1:30"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# deform-zeros v1", 0) == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "t,sigma,kind,residual");
  CHECK(lines[1].rfind("14.1347251417,0.5,nontrivial,", 0) == 0);
}

TEST_CASE("zeros scan for f0 finds the factor zero") {
  const auto r = run({"zeros", "scan", "--f", "f0", "--q", "5", "--t", "0:2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  // pi / log 5
  CHECK(std::abs(j[0]["t"].get<double>() - 1.95198126583) < 1e-10);
  CHECK(j[0]["kind"] == "trivial_factor");
}

TEST_CASE("zeros verify and count") {
  const auto r = run({"zeros", "verify", "--family", "q5", "--tau", "0.25", "--box", "-1:2:1:30"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["winding"] == j["line_count"]);
  const auto c = run({"zeros", "count", "--f", "zeta", "--box", "-1:2:1:30"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["winding"] == 3);
}

TEST_CASE("eval writes a grid row") {
  const auto r = run({"eval", "--f", "zeta", "--s", "2:0"});
  CHECK(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].rfind("2,0,1.64493406685,0,", 0) == 0);
}

TEST_CASE("track writes per-tau zero files and trajectories") {
  const auto dir = fresh_dir("track");
  const auto r = run({"track", "--family", "q5", "--t", "0:30", "--out", dir.string()});
  CHECK(r.code == 0);
  for (const char* name : {"zeros_tau_0.csv", "zeros_tau_0.25.csv", "zeros_tau_0.5.csv", "zeros_tau_0.75.csv",
                           "zeros_tau_1.csv", "trajectories.csv"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(dir / name));
    CHECK(slurp(dir / name).rfind("# deform-zeros v1", 0) == 0);
  }
  CHECK(data_lines(slurp(dir / "zeros_tau_1.csv")).size() == 12);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["n0"].get<int>() - j["n1"].get<int>()) <= 1);
}

TEST_CASE("track below the first zero is empty") {
  const auto dir = fresh_dir("track_empty");
  const auto r = run({"track", "--family", "q5", "--t", "0:0.5", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(data_lines(slurp(dir / "trajectories.csv")).size() == 1);
  CHECK(data_lines(slurp(dir / "zeros_tau_0.csv")).size() == 1);
}

TEST_CASE("track for q = 8") {
  const auto dir = fresh_dir("track8");
  const auto r = run({"track", "--family", "q8", "--t", "0:30", "--steps", "128", "--out", dir.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n0"] == 14);
  CHECK(j["n1"] == 13);
  CHECK(j["merged"] == 1);
}

TEST_CASE("report for the odd degenerate case uses the cosine factor") {
  const auto r = run({"report", "--q", "3", "--parity", "odd", "--tmax", "20"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"]["trig_factor"] == "cos");
  CHECK(j["verdict"] == "PASS");
}

TEST_CASE("config files mirror flags") {
  const auto dir = fresh_dir("config");
  const auto cfg = dir / "run.ini";
  {
    std::ofstream f(cfg);
    f << "family=q5\ntau=0.5\n";
  }
  const auto a = run({"verify-fe", "--config", cfg.string()});
  const auto b = run({"verify-fe", "--family", "q5", "--tau", "0.5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // Command-line flags override the file.
  const auto c = run({"verify-fe", "--config", cfg.string(), "--tau", "1.5"});
  CHECK(c.code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"chars", "--parity", "even", "--qmax", "30", "--format", "json"},
      {"zeros", "scan", "--f", "L", "--q", "5", "--char", "3", "--t", "0:30"},
      {"verify-fe", "--family", "q8", "--tau", "0.75"},
      {"report", "--q", "7", "--parity", "odd", "--tmax", "20"}};
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  const auto d1 = fresh_dir("det1");
  const auto d2 = fresh_dir("det2");
  run({"track", "--family", "q5", "--t", "10:20", "--out", d1.string()});
  run({"track", "--family", "q5", "--t", "10:20", "--out", d2.string()});
  for (const auto& e : fs::directory_iterator(d1)) CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
}

TEST_CASE("eval emits JSON on request") {
  const auto r = run({"eval", "--f", "zeta", "--s", "2:0", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(std::abs(j[0]["re_f"].get<double>() - 1.64493406685) < 1e-11);
}
