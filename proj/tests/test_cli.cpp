#include "liecheck_cli.hpp"

#include "liecheck/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace liecheck;
using namespace liecheck::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("liecheck-cli-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string operator/(const std::string& s) const { return (path / s).string(); }
};

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liecheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Report text without the timing field.
std::string without_millis(const fs::path& p) { return to_json(report_from_json(slurp(p)), false); }

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.path().extension() == ".json" && e.path().filename() != "summary.json") out.push_back(fs::relative(e.path(), dir));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("verify: passing instances") {
  TempDir tmp;
  auto r = run({"verify", "peterson", "A2", "1,1", "--out", tmp / "r"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("PASS  peterson  A2") != std::string::npos);
  CHECK(r.out.find("lhs  1,1,2,2,1") != std::string::npos);
  CHECK(r.out.find("rhs  1,1,2,2,1") != std::string::npos);
  CHECK(fs::exists(tmp.path / "r" / "A2" / "peterson-1_1.json"));

  CHECK(run({"verify", "mult1", "G2", "1,0", "--out", tmp / "r"}).code == kExitPass);
  r = run({"verify", "peterson", "--type", "A1", "--weight", "0", "--out", tmp / "r"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("lhs  1  ") != std::string::npos);
  CHECK(run({"verify", "hilb4", "G2", "--no-write"}).code == kExitPass);
  CHECK(run({"verify", "cells", "A2", "1,1", "--no-write"}).code == kExitPass);
}

TEST_CASE("verify: exit codes") {
  TempDir tmp;
  CHECK(run({"verify", "peterson", "A2", "1,x", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "peterson", "E6", "1,0,0,0,0,0", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense", "A2", "1,1", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "peterson", "A2", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "kkk", "A2", "1,0", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "key2", "A2", "1,1", "--mu", "1,0", "--no-write"}).code == kExitUsage);
  CHECK(run({"verify", "peterson", "A2", "-1,1", "--no-write"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
  auto skip = run({"verify", "peterson", "A2", "6,6", "--dim-bound", "100", "--out", tmp / "r"});
  CHECK(skip.code == kExitSkip);
  CHECK(report_from_json(slurp(tmp.path / "r" / "A2" / "peterson-6_6.json")).verdict == Verdict::Skip);
  CHECK(run({"verify", "nilcone", "B3", "--no-write"}).code == kExitSkip);
  // the one known failing instance
  CHECK(run({"verify", "surj", "A2", "1,1", "--no-write"}).code == kExitFail);
}

TEST_CASE("exit codes follow verdicts, including a synthetic failing pair") {
  CheckReport r;
  r.series_lhs = GradedSeries::from_ints({1, 1});
  r.series_rhs = GradedSeries::from_ints({1, 2});
  r.verdict = equals(*r.series_lhs, *r.series_rhs) ? Verdict::Pass : Verdict::Fail;
  CHECK(exit_code_for(r.verdict) == kExitFail);
  CHECK(exit_code_for(Verdict::Pass) == kExitPass);
  CHECK(exit_code_for(Verdict::DivergentOracle) == kExitPass);
  CHECK(exit_code_for(Verdict::Skip) == kExitSkip);
}

TEST_CASE("verify --json round trips and is reproducible") {
  TempDir tmp;
  const auto a = run({"verify", "peterson", "B2", "1,1", "--json", "--out", tmp / "a"});
  const auto b = run({"verify", "peterson", "B2", "1,1", "--json", "--out", tmp / "b"});
  REQUIRE(a.code == kExitPass);
  const auto ra = report_from_json(a.out), rb = report_from_json(b.out);
  CHECK(to_json(ra, false) == to_json(rb, false));
  CHECK(ra.lowest_weight == Weight{-1, -1});
  CHECK(without_millis(tmp.path / "a" / "B2" / "peterson-1_1.json") ==
        without_millis(tmp.path / "b" / "B2" / "peterson-1_1.json"));
}

TEST_CASE("environment overrides the output directory") {
  TempDir tmp;
  const auto dir = tmp / "from-env";
  setenv("LIECHECK_OUT_DIR", dir.c_str(), 1);
  CHECK(run({"verify", "mult1", "A1", "2"}).code == kExitPass);
  unsetenv("LIECHECK_OUT_DIR");
  CHECK(fs::exists(fs::path(dir) / "A1" / "mult1-2.json"));
}

TEST_CASE("sweep: empty type list") {
  TempDir tmp;
  const auto r = run({"sweep", "--types", "", "--out", tmp / "s", "--quiet"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("instances 0") != std::string::npos);
  CHECK(slurp(tmp.path / "s" / "summary.csv") == "type,lambda,lowest_weight,check,verdict,lhs,rhs,flag\n");
}

TEST_CASE("sweep: a tiny dimension bound skips, never fails") {
  TempDir tmp;
  const auto r = run({"sweep", "--types", "A1,A2,B2", "--checks", "peterson,mult1,kkk,key2", "--dim-bound", "10",
                      "--sweep-dim", "40", "--out", tmp / "s", "--quiet"});
  CHECK(r.code == kExitPass);
  const auto summary = slurp(tmp.path / "s" / "summary.csv");
  CHECK(summary.find(",FAIL,") == std::string::npos);
  std::size_t skips = 0, passes = 0;
  for (std::size_t p = 0; (p = summary.find(",SKIP,", p)) != std::string::npos; ++p) ++skips;
  for (std::size_t p = 0; (p = summary.find(",PASS,", p)) != std::string::npos; ++p) ++passes;
  CHECK(skips > passes);
}

TEST_CASE("sweep: output does not depend on the number of jobs") {
  TempDir tmp;
  const std::vector<std::string> base = {"sweep", "--types", "A2,G2", "--checks", "peterson,mult1,key2,kb",
                                         "--sweep-dim", "30", "--quiet"};
  auto one = base, three = base;
  one.insert(one.end(), {"--jobs", "1", "--out", tmp / "one"});
  three.insert(three.end(), {"--jobs", "3", "--out", tmp / "three"});
  const auto r1 = run(one), r3 = run(three);
  CHECK(r1.code == kExitPass);
  CHECK(r1.out == r3.out);
  CHECK(slurp(tmp.path / "one" / "summary.csv") == slurp(tmp.path / "three" / "summary.csv"));
  const auto files = json_files(tmp.path / "one");
  CHECK(files == json_files(tmp.path / "three"));
  for (const auto& f : files) CHECK(without_millis(tmp.path / "one" / f) == without_millis(tmp.path / "three" / f));
}

TEST_CASE("sweep: a failing instance makes the exit code nonzero") {
  TempDir tmp;
  const auto r = run({"sweep", "--types", "A2", "--checks", "surj", "--sweep-dim", "8", "--out", tmp / "s", "--quiet"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("FAIL surj A2 1,1") != std::string::npos);
}

TEST_CASE("table") {
  TempDir tmp;
  fs::create_directories(tmp.path / "empty");
  auto t = run({"table", tmp / "empty"});
  CHECK(t.code == kExitPass);
  CHECK(t.out == "type,lambda,lowest_weight,check,verdict,lhs,rhs,flag\n");
  CHECK(run({"table", tmp / "missing"}).code == kExitUsage);

  REQUIRE(run({"verify", "peterson", "A2", "1,1", "--out", tmp / "r"}).code == kExitPass);
  t = run({"table", tmp / "r"});
  CHECK(t.out ==
        "type,lambda,lowest_weight,check,verdict,lhs,rhs,flag\n"
        "A2,\"1,1\",\"-1,-1\",peterson,PASS,\"1,1,2,2,1\",\"1,1,2,2,1\",\n");

  // the table echoes stored series, it does not recompute them
  auto rep = report_from_json(slurp(tmp.path / "r" / "A2" / "peterson-1_1.json"));
  rep.lambda = {2, 2};
  rep.series_rhs = GradedSeries::from_ints({1, 2, 3});
  rep.verdict = Verdict::Fail;
  {
    std::ofstream out(tmp.path / "r" / "A2" / "synthetic.json");
    out << to_json(rep);
  }
  t = run({"table", tmp / "r", "--format", "md"});
  CHECK(t.out.find("| A2 | 2,2 | -1,-1 | peterson | FAIL | 1,1,2,2,1 | 1,2,3 | **FAIL** |") != std::string::npos);

  {
    std::ofstream out(tmp.path / "r" / "broken.json");
    out << "{ not json";
  }
  t = run({"table", tmp / "r"});
  CHECK(t.code == kExitUsage);
  CHECK(t.err.find("broken.json") != std::string::npos);
  CHECK(t.out.find("peterson,PASS") != std::string::npos);
}

TEST_CASE("cache command and cached verification") {
  TempDir tmp;
  auto r = run({"cache", "build", "--types", "A2,G2", "--cache-dir", tmp / "c"});
  CHECK(r.code == kExitPass);
  r = run({"cache", "list", "--cache-dir", tmp / "c"});
  CHECK(r.out == "A2-v1.constants\nG2-v1.constants\n");
  const auto first = run({"verify", "peterson", "A2", "1,1", "--cache-dir", tmp / "c", "--json", "--no-write"});
  const auto second = run({"verify", "peterson", "A2", "1,1", "--cache-dir", tmp / "c", "--json", "--no-write"});
  CHECK(first.code == kExitPass);
  CHECK(to_json(report_from_json(first.out), false) == to_json(report_from_json(second.out), false));
  CHECK(fs::exists(tmp.path / "c" / "A2-1_1-v1.module"));
  r = run({"cache", "clear", "--cache-dir", tmp / "c"});
  CHECK(r.out == "removed 3 files\n");
  CHECK(run({"cache", "frobnicate", "--cache-dir", tmp / "c"}).code == kExitUsage);
}
