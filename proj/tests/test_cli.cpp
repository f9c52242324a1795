#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PDET_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(PDET_TEST_DATA) + "/" + name; }

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
  const auto r = run(args + " --format json --no-timing");
  EXPECT_EQ(r.exit_code, expected_exit) << args << '\n' << r.out;
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> verdicts(const nlohmann::json& j) {
  std::vector<std::string> out;
  for (const auto& v : j["verdicts"]) out.push_back(v["verdict"]);
  return out;
}

}  // namespace

TEST(Cli, PdetReport) {
  const auto j = run_json("pdet " + data("sym3.txt"));
  EXPECT_EQ(j["command"], "pdet");
  EXPECT_EQ(j["results"]["pseudo_det"], "-41");
  EXPECT_EQ(j["results"]["char_poly"], (nlohmann::json{"0", "41", "6", "-1"}));
  EXPECT_EQ(j["results"]["spectral_count"], 2);
  EXPECT_EQ(j["results"]["rank"], 2);
  ASSERT_EQ(j["inputs"].size(), 1u);
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(j["duration_ms"], 0);
}

TEST(Cli, SchemaKeysInOrder) {
  const auto j = nlohmann::ordered_json::parse(
      run("pdet " + data("rank1.txt") + " --format json --no-timing").out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "results", "verdicts",
                                            "duration_ms"}));
  EXPECT_EQ(j["results"]["pseudo_det"], "17");
  EXPECT_EQ(j["results"]["spectral_count"], 1);
}

TEST(Cli, CharpolyIsSubset) {
  const auto j = run_json("charpoly " + data("sym3.txt"));
  EXPECT_EQ(j["results"]["pseudo_det"], "-41");
  EXPECT_FALSE(j["results"].contains("rank"));
}

TEST(Cli, CauchyBinetPaperPairs) {
  const auto j = run_json("cauchy-binet " + data("f3.txt") + " " + data("g3.txt"));
  for (const auto& v : verdicts(j)) EXPECT_EQ(v, "pass");
  EXPECT_EQ(j["results"]["pseudo_det"], "11");
  bool saw_det_line = false;
  for (const auto& v : j["verdicts"])
    if (v["name"].get<std::string>().rfind("pseudo_det via minors", 0) == 0) {
      saw_det_line = true;
      EXPECT_EQ(v["lhs"], "11");
      EXPECT_EQ(v["rhs"], "11");
    }
  EXPECT_TRUE(saw_det_line);

  const auto k = run_json("cauchy-binet " + data("f4.txt") + " " + data("g4.txt"));
  EXPECT_EQ(k["results"]["pseudo_det"], "12");
  EXPECT_EQ(k["results"]["spectral_count"], 1);
  EXPECT_EQ(k["results"]["coefficients"][1]["minor_pair_sum"], "12");
}

TEST(Cli, CauchyBinetRandomPair) {
  const auto j = run_json("cauchy-binet --random 5x7 --seed 3");
  EXPECT_EQ(j["inputs"].size(), 2u);
  for (const auto& v : verdicts(j)) EXPECT_EQ(v, "pass");
  EXPECT_EQ(j["results"]["coefficients"].size(), 8u);
}

TEST(Cli, CauchyBinetBudgetSkips) {
  const auto j = run_json("cauchy-binet --random 6x8 --seed 3 --budget 100");
  std::size_t skipped = 0;
  for (const auto& v : verdicts(j)) {
    EXPECT_NE(v, "fail");
    if (v == "skipped-budget") ++skipped;
  }
  EXPECT_GT(skipped, 0u);
}

TEST(Cli, Exterior) {
  const auto j = run_json("exterior " + data("wide.txt") + " --k 2");
  EXPECT_EQ(j["results"]["compound"], (nlohmann::json{{"-3", "-6", "-3"}}));
}

TEST(Cli, GraphTreesAndForests) {
  const auto t = run_json("graph " + data("k4.txt") + " --analysis trees");
  EXPECT_EQ(t["results"]["spanning_trees"], "16");
  EXPECT_EQ(verdicts(t), std::vector<std::string>{"pass"});
  const auto f = run_json("graph " + data("k3.txt") + " --analysis forests");
  EXPECT_EQ(f["results"]["rooted_forests"], "16");
  EXPECT_EQ(verdicts(f), std::vector<std::string>{"pass"});
}

TEST(Cli, GraphDiracOnCycle) {
  const auto j = run_json("graph " + data("c4.txt") + " --analysis dirac");
  EXPECT_EQ(j["results"]["pseudo_det_dirac"], "-16");
  EXPECT_EQ(j["results"]["pseudo_det_dirac_squared"], "256");
  EXPECT_EQ(j["results"]["betti"], (nlohmann::json{1, 1}));
  for (const auto& v : j["verdicts"]) {
    EXPECT_EQ(v["verdict"], "pass");
    if (v["name"] == "Euler characteristic") {
      EXPECT_EQ(v["lhs"], "0");
      EXPECT_EQ(v["rhs"], "0");
    }
  }
}

TEST(Cli, GraphBettiAndSimplexGraph) {
  const auto b = run_json("graph " + data("two_edges.txt") + " --analysis betti");
  EXPECT_EQ(b["results"]["betti"], (nlohmann::json{2, 0}));
  const auto s = run_json("graph " + data("k3.txt") + " --analysis simplexgraph");
  EXPECT_EQ(s["results"]["simplex_graph_vertices"], 7);
  EXPECT_EQ(s["results"]["simplex_graph_edges"], 9);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("pdet " + data("wide.txt")).exit_code, 2);
  EXPECT_EQ(run("pdet " + data("ragged.txt")).exit_code, 2);
  EXPECT_EQ(run("pdet " + data("missing.txt")).exit_code, 2);
  EXPECT_EQ(run("graph " + data("loop.txt")).exit_code, 2);
  EXPECT_EQ(run("graph " + data("two_edges.txt") + " --analysis trees").exit_code, 2);
  EXPECT_EQ(run("cauchy-binet " + data("f3.txt") + " " + data("f4.txt")).exit_code, 2);
  EXPECT_EQ(run("graph " + data("k3.txt") + " --analysis nonsense").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(Cli, SelftestPassesAndSkips) {
  const auto j = run_json("selftest --seed 7 --budget 4");
  EXPECT_FALSE(j["verdicts"].empty());
  for (const auto& v : verdicts(j)) EXPECT_EQ(v, "pass");
  const auto z = run_json("selftest --budget 0");
  for (const auto& v : verdicts(z)) EXPECT_EQ(v, "skipped-budget");
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::string& args : std::vector<std::string>{"selftest --seed 11 --budget 3", "cauchy-binet --random 4x6 --seed 9",
                                 "graph " + data("c4.txt") + " --analysis dirac"}) {
    const auto a = run(args + " --no-timing");
    const auto b = run(args + " --no-timing");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out) << args;
    const auto ja = run(args + " --no-timing --format json");
    const auto jb = run(args + " --no-timing --format json");
    EXPECT_EQ(ja.out, jb.out) << args;
  }
}

TEST(Cli, TextFormatShowsBothSides) {
  const auto r = run("cauchy-binet " + data("f3.txt") + " " + data("g3.txt"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("11 = 11"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[pass]"), std::string::npos);
}

#include "../tools/report.hpp"

TEST(Report, ExactValuesAreStrings) {
  pdet::cli::ResultReport r;
  r.command = "x";
  r.results["value"] = pdet::cli::scalar_json(pdet::Scalar(-30517578125LL));
  r.results["big"] = pdet::cli::scalar_json(pdet::parse_scalar("123456789012345678901234567891/2"));
  const auto j = r.to_json();
  EXPECT_TRUE(j["results"]["value"].is_string());
  EXPECT_EQ(j["results"]["big"], "123456789012345678901234567891/2");
}

TEST(Report, AnyFailureTracksVerdicts) {
  pdet::cli::ResultReport r;
  EXPECT_FALSE(r.any_failure());
  r.add_skipped("s", "budget");
  r.add_verdict("p", true, "1", "1");
  EXPECT_FALSE(r.any_failure());
  r.add_verdict("f", false, "1", "2");
  EXPECT_TRUE(r.any_failure());
  EXPECT_NE(r.to_text().find("[fail] f: 1 != 2"), std::string::npos);
}

TEST(Report, Sha256KnownDigest) {
  EXPECT_EQ(pdet::cli::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
