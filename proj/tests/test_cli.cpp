#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "crystalpath_cli_out.txt";
  std::string cmd = std::string(CRYSTALPATH_BIN) + " " + args + " > " + tmp.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream is(tmp);
  std::stringstream ss;
  ss << is.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph export") {
  RunResult dot = run("graph --family A --n 2 --l 1 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(count_lines_with(dot.out, "label=\"(") == 2);   // nodes
  CHECK(count_lines_with(dot.out, " -> ") == 2);        // f-arrows
  CHECK(dot.out.find("label=\"0\"") != std::string::npos);
  CHECK(dot.out.find("label=\"1\"") != std::string::npos);

  RunResult json = run("graph --family C --n 2 --l 1 --format json");
  CHECK(json.exit_code == 0);
  CHECK(count_lines_with(json.out, "\"(") == 4);  // 4 elements

  RunResult bad = run("graph --family X --n 2 --l 1");
  CHECK(bad.exit_code == 2);
  RunResult badfmt = run("graph --family A --n 2 --l 1 --format gif");
  CHECK(badfmt.exit_code == 2);
}

TEST_CASE("verify suites exit codes") {
  CHECK(run("verify axioms --family A --n 3 --l 2").exit_code == 0);
  CHECK(run("verify axioms --family C --n 2 --l 3 --m 1").exit_code == 0);
  RunResult fault = run("verify axioms --family C --n 2 --l 1 --inject-fault");
  CHECK(fault.exit_code == 1);
  CHECK(fault.out.find("violation") != std::string::npos);

  CHECK(run("verify simple --family C --n 2 --l 3").exit_code == 0);
  CHECK(run("verify cfin --family A --n 3 --l 2").exit_code == 0);
  CHECK(run("verify rmatrix --family A --n 3 --l 2 --m 1").exit_code == 0);
  CHECK(run("verify energy --family A --n 2 --l 2 --m 2").exit_code == 0);
  CHECK(run("verify energy --family C --n 2 --l 1").exit_code == 0);
  CHECK(run("verify hoftensor --family A --n 2 --l 2 --m 1").exit_code == 0);
  CHECK(run("verify case1 --n 2 --l 3 --lambda 1,0,0 --depth 3").exit_code == 0);
  CHECK(run("verify ex2 --n 3 --l 2 --m 1 --lambda 1,0,0 --mu 1,0,0 --depth 3").exit_code == 0);
  CHECK(run("verify kmn2 --n 3 --l 1 --mu 1,0,0 --depth 5").exit_code == 0);
  CHECK(run("verify main --example identity --n 3 --l 1 --mu 1,0,0 --depth 3").exit_code == 0);
  CHECK(run("verify main --example case1 --n 2 --l 3 --lambda 1,0,0 --depth 3").exit_code == 0);
  CHECK(run("verify main --example ex2 --n 3 --l 2 --m 1 --lambda 1,0,0 --mu 1,0,0 --depth 3")
            .exit_code == 0);

  // usage errors
  CHECK(run("verify axioms --family C --n 2 --l 2").exit_code == 2);  // even degree
  CHECK(run("verify case1 --n 2 --l 3 --lambda 1,0 --depth 2").exit_code == 2);
  CHECK(run("verify nosuchsuite --n 2 --l 1").exit_code == 2);
  CHECK(run("verify axioms").exit_code == 2);  // missing --n
}

TEST_CASE("experimental gate for the smallest A-type rank") {
  CHECK(run("census --kind hw --family A --n 2 --l 1 --mu 1,0 --depth 3").exit_code == 2);
  CHECK(run("census --kind hw --family A --n 2 --l 1 --mu 1,0 --depth 3 --experimental")
            .exit_code == 0);
}

TEST_CASE("census output shape") {
  RunResult hw = run("census --kind hw --family C --n 2 --l 3 --lambda 1,0,0 --depth 2");
  CHECK(hw.exit_code == 0);
  CHECK(hw.out.rfind("depth\tweight\tdelta\tcount\n", 0) == 0);
  CHECK(count_lines_with(hw.out, "\t") >= 3);

  RunResult d0 = run("census --kind hw --family C --n 2 --l 3 --lambda 1,0,0 --depth 0");
  CHECK(d0.exit_code == 0);
  CHECK(d0.out == "depth\tweight\tdelta\tcount\n0\t2,0,0\t0\t1\n");

  RunResult r = run(
      "census --kind restricted --family C --n 2 --l 1 --lambda 0,0,0 "
      "--restrict 1,0,0 --depth 2");
  CHECK(r.exit_code == 0);
  RunResult missing = run("census --kind restricted --family C --n 2 --l 1 --lambda 0,0,0 --depth 2");
  CHECK(missing.exit_code == 2);
}

namespace {

struct CensusRow {
  int depth;
  std::vector<int> weight;
  long long delta;
  long long count;
  auto tied() const { return std::tie(depth, weight, delta, count); }
  bool operator<(const CensusRow& o) const { return tied() < o.tied(); }
  bool operator==(const CensusRow& o) const { return tied() == o.tied(); }
};

std::vector<CensusRow> parse_census(const std::string& tsv) {
  std::vector<CensusRow> rows;
  std::stringstream ss(tsv);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string depth, weight, delta, count;
    std::getline(ls, depth, '\t');
    std::getline(ls, weight, '\t');
    std::getline(ls, delta, '\t');
    std::getline(ls, count, '\t');
    CensusRow r;
    r.depth = std::stoi(depth);
    std::stringstream ws(weight);
    std::string tok;
    while (std::getline(ws, tok, ',')) r.weight.push_back(std::stoi(tok));
    r.delta = std::stoll(delta);
    r.count = std::stoll(count);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

TEST_CASE("forced single-row census for the degree-one A-type space") {
  for (int depth : {1, 3, 5}) {
    RunResult r = run("census --kind hw --family A --n 3 --l 1 --mu 1,0,0 --depth " +
                      std::to_string(depth));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "depth\tweight\tdelta\tcount\n0\t1,0,0\t0\t1\n");
  }
}

TEST_CASE("hw census equals the projected restricted census after the weight shift") {
  RunResult hw = run("census --kind hw --family C --n 2 --l 3 --lambda 1,0,0 --depth 3");
  RunResult re = run(
      "census --kind restricted --family C --n 2 --l 1 --lambda 0,0,0 "
      "--restrict 1,0,0 --depth 3");
  REQUIRE(hw.exit_code == 0);
  REQUIRE(re.exit_code == 0);
  auto hw_rows = parse_census(hw.out);
  auto re_rows = parse_census(re.out);
  const std::vector<int> lambda{1, 0, 0};
  for (auto& r : re_rows)
    for (std::size_t i = 0; i < r.weight.size(); ++i) r.weight[i] += lambda[i];
  std::sort(hw_rows.begin(), hw_rows.end());
  std::sort(re_rows.begin(), re_rows.end());
  CHECK(hw_rows == re_rows);
}

TEST_CASE("energy suite accepts an anchor offset") {
  CHECK(run("verify energy --family A --n 3 --l 2 --m 1 --anchor-value 7").exit_code == 0);
}

TEST_CASE("simplicity of products via the factor criterion") {
  CHECK(run("verify simple --family A --n 3 --l 2 --m 1").exit_code == 0);
  CHECK(run("verify simple --family C --n 2 --l 3 --m 1").exit_code == 0);
}

TEST_CASE("experimental multi-component instance") {
  RunResult r = run(
      "verify main --example multi --n 3 --l 3 --m 2 --l3 1 "
      "--lambda 1,0,0 --mu 1,0,0 --nu 1,0,0 --depth 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("non-normative") != std::string::npos);
}

TEST_CASE("deterministic output and cache transparency") {
  fs::path cache = fs::temp_directory_path() / "crystalpath_cache_test";
  fs::remove_all(cache);
  fs::create_directories(cache);
  std::string census_args =
      "census --kind hw --family A --n 3 --l 2 --m 1 --lambda 1,0,0 --mu 1,0,0 --depth 3";

  RunResult nocache = run(census_args);
  RunResult cold = run(census_args + " --cache-dir " + cache.string());
  CHECK(fs::exists(cache / "H_A_n3_l2_m1_square.json"));
  RunResult warm = run(census_args + " --cache-dir " + cache.string());
  CHECK(nocache.exit_code == 0);
  CHECK(cold.exit_code == 0);
  CHECK(warm.exit_code == 0);
  CHECK(nocache.out == cold.out);
  CHECK(cold.out == warm.out);

  // a corrupted cache entry is recomputed, not trusted
  {
    std::ofstream os(cache / "H_A_n3_l2_m1_square.json");
    os << "{\"key\":{},\"garbage\":true}\n";
  }
  RunResult repaired = run(census_args + " --cache-dir " + cache.string());
  CHECK(repaired.exit_code == 0);
  CHECK(repaired.out == nocache.out);

  RunResult v1 = run("verify ex2 --n 3 --l 2 --m 1 --lambda 1,0,0 --mu 1,0,0 --depth 3 --json");
  RunResult v2 = run("verify ex2 --n 3 --l 2 --m 1 --lambda 1,0,0 --mu 1,0,0 --depth 3 --json");
  CHECK(v1.out == v2.out);

  // R-matrix caching is equally transparent
  std::string rargs = "verify rmatrix --family A --n 3 --l 2 --m 1 --cache-dir " + cache.string();
  RunResult r_cold = run(rargs);
  CHECK(fs::exists(cache / "R_A_n3_l2_m1_pair.json"));
  RunResult r_warm = run(rargs);
  CHECK(r_cold.exit_code == 0);
  CHECK(r_warm.exit_code == 0);
  CHECK(r_cold.out == r_warm.out);
  fs::remove_all(cache);
}
