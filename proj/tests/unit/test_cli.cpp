#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "ehrhart/constructions.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/json_io.hpp"
#include "ehrhart/report.hpp"

using namespace ehrhart;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " EHRHART_CLI " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_code = 0) {
  const auto r = run(args);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("json round trips") {
  for (const auto& Q : {pentagon_P(3), simplex_S(4, 2), face_FW(3, 2)}) {
    const auto j = to_json(Q);
    CHECK(polytope_from_json(Json::parse(j.dump())) == Q);
  }
  const auto B = barn_B(3, 2);
  const auto u = union_from_json(Json::parse(to_json(B).dump()));
  CHECK(u.pieces == B.pieces);
  REQUIRE(u.product_structure);
  for (std::int64_t k = 1; k <= 3; ++k) CHECK(count_union(u, k) == count_union(B, k));
  const auto f = fit(counter(pentagon_P(2)), 2, 2);
  CHECK(quasipolynomial_from_json(to_json(f)) == f);
  CHECK(integer_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(integer_json(Integer(-5)) == -5);
  CHECK(integer_from_json(Json("-99999999999999999999")) == Integer("-99999999999999999999"));
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"vertices": [["1/0"]]})")), ParseError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 2, "vertices": [["1"]]})")), DimensionMismatch);
}

TEST_CASE("reports embed their counts") {
  const auto r = verify_heptagon(2);
  CHECK(r.passed());
  const auto j = to_json(r);
  CHECK(j["claim"] == "heptagon");
  CHECK(j["outcome"] == "pass");
  CHECK(j["witness"]["fit"]["period_sequence"] == Json::array({1, 2, 1}));
  // Refit from the embedded counts alone.
  std::map<std::int64_t, Integer> counts;
  for (std::size_t i = 0; i < j["witness"]["counts"]["k"].size(); ++i)
    counts[j["witness"]["counts"]["k"][i].get<std::int64_t>()] = integer_from_json(j["witness"]["counts"]["count"][i]);
  const CountFunction replay{[&](std::int64_t k) { return counts.at(k); }, CountStrategy::Enumerate};
  CHECK(to_json(fit(replay, 2, 2)) == j["witness"]["fit"]);
}

TEST_CASE("verify_all small ranges") {
  const auto reports = verify_all(VerifyAllOptions{1, 3, kDefaultPointBudget});
  std::size_t last = 0;
  const auto& ids = claim_ids();
  for (const auto& r : reports) {
    CHECK(r.passed());
    const auto pos = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), r.claim) - ids.begin());
    CHECK(pos >= last);
    last = pos;
    // p = 1 degenerates to lattice polytopes.
    const auto j = to_json(r);
    if (j["witness"].contains("fit"))
      for (const auto& p : j["witness"]["fit"]["period_sequence"]) CHECK(p == 1);
  }
  const auto partial = verify_hn_periods(3, 3, CountOptions{100});
  CHECK(partial.outcome == Outcome::Partial);
  CHECK(verify_barn_periods(12, 2).outcome == Outcome::NotAvailable);
  CHECK(verify_barn_periods(12, 2).detail == "NotAvailable: PTE size 11");
}

TEST_CASE("cli construct") {
  const auto j = run_json("construct --family pentagon --p 3");
  CHECK(j["object"]["vertices"] ==
        Json::parse(R"([["-7","0"],["-6","1"],["0","7/3"],["6","1"],["7","0"]])"));
  CHECK(j["q"] == 7);
  CHECK(j["provenance"].is_string());
  const auto b = run_json("construct --family barn --n 3 --p 2 --s 0,3 --t 1,2");
  CHECK(b["object"]["pieces"].size() == 2);
  CHECK(run("construct --family barn --n 12 --p 2").code == 1);
}

TEST_CASE("cli verify") {
  auto j = run_json("verify heptagon --p 2");
  CHECK(j["reports"][0]["outcome"] == "pass");
  CHECK(j["reports"][0]["witness"]["fit"]["period_sequence"] == Json::array({1, 2, 1}));
  j = run_json("verify barn --n 4 --p 2");
  CHECK(j["reports"][0]["outcome"] == "pass");
  CHECK(j["reports"][0]["witness"]["fit"]["period_sequence"] == Json::array({1, 1, 1, 2, 1}));
  j = run_json("verify barn --n 12 --p 2");
  CHECK(j["reports"][0]["outcome"] == "not-available");
  CHECK(j["reports"][0]["detail"] == "NotAvailable: PTE size 11");
  j = run_json("verify mcmullen --family heptagon --p 2");
  CHECK(j["summary"]["pass"] == 1);
  const auto csv = run("verify pyramid-equivalence --p 2 --i 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "claim,parameters,outcome\npyramid-equivalence,p=2 i=2,pass\n");
  j = Json::parse(run("verify hn-periods --n 3 --p 3", "EHRHART_BUDGET=100").out);
  CHECK(j["reports"][0]["outcome"] == "partial");
}

TEST_CASE("cli counting subcommands") {
  auto r = run("count --family pentagon --p 2 --k-max 4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "k,count\n1,12\n2,34\n3,69\n4,115\n");
  auto j = run_json("periods --family hull --n 3 --p 2");
  CHECK(j["period_sequence"] == Json::array({1, 2, 1, 1}));
  j = run_json("indices --family simplex --n 3 --p 2");
  CHECK(j["index_sequence"] == Json::array({2, 1, 1}));
  CHECK(j["mcmullen_ok"] == true);
  j = run_json("fit --family segment --p 2");
  CHECK(j["fit"]["coeffs"] == Json::parse(R"([["1","1/2"],["1/2","1/2"]])"));
  j = run_json("series --family segment --p 2");
  CHECK(j["series"]["numerator"] == Json::array({1, 1}));
  j = run_json("series --family segment --p 2 --pyramid 1");
  CHECK(j["series"]["power"] == 3);
  r = run("count --family barn --n 3 --p 2 --k-max 2 --strategy enumerate --format csv");
  CHECK(r.out == "k,count\n1,48\n2,253\n");

  const std::string path = "cli_input_polytope.json";
  std::ofstream(path) << to_json(pentagon_P(2)).dump();
  r = run("count --input " + path + " --k-max 2 --format csv");
  CHECK(r.out == "k,count\n1,12\n2,34\n");
  std::remove(path.c_str());
}

TEST_CASE("cli pte") {
  auto j = run_json("pte list");
  CHECK(j["entries"].size() == 10);
  j = run_json("pte verify --s 1,5,6 --t 2,3,7");
  CHECK(j["s"] == Json::array({1, 2, 6}));
  CHECK(j["verified"] == true);
  j = run_json("pte verify");
  CHECK(j["reports"][0]["outcome"] == "pass");
  CHECK(run("pte verify --s 1,2 --t 2,0").code == 1);
}

TEST_CASE("cli usage errors and determinism") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count --family dodecahedron").code == 2);
  CHECK(run("count --family pentagon --format xml").code == 2);
  CHECK(run("verify no-such-claim").code == 2);
  CHECK(run("count").code == 2);
  CHECK(run("count --family pentagon", "EHRHART_BUDGET=abc").code == 2);
  CHECK(run("--help").code == 0);
  const auto a = run("verify all --max-p 2 --max-n 3");
  const auto b = run("verify all --max-p 2 --max-n 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
