#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "luroth/figures.hpp"
#include "luroth/json_io.hpp"
#include "luroth/suite.hpp"

using namespace luroth;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LUROTH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("word json round trip") {
  const auto w = canonical_word({4, 2, 42}, {2});
  const auto j = to_json(w);
  CHECK(word_from_json(j) == w);
  CHECK(j["preperiod"] == nlohmann::json({4, 2, 42}));
  CHECK(j["period"] == nlohmann::json({2}));
  // non-canonical input is normalised on parse
  CHECK(word_from_json(nlohmann::json::parse(R"({"preperiod":[3,2],"period":[2]})")) ==
        canonical_word({3}, {2}));
}

TEST_CASE("report serialisation carries exact fractions") {
  const auto rep = hlavka_pair_check(summarize_band(2, 4), summarize_band(2, 4));
  const auto j = to_json(rep);
  CHECK(j["criterion"] == "hlavka-pair");
  CHECK(j["conditions"][0]["lhs"] == "1/25");
  CHECK(j["conditions"][0]["rhs"] == "16/225");
  CHECK(j["verdict"]["kind"] == "certified_interval");
  CHECK(j["verdict"]["interval"] == nlohmann::json({"6/11", "2"}));
  CHECK(j.contains("discrepancies"));
}

TEST_CASE("verification catalogue") {
  const auto suite = run_suite();
  CHECK(suite.entries.size() >= 25);
  CHECK(suite.mismatches == 0);
  CHECK(suite.flagged >= 3);  // the published thickness table for the three smallest bands
  bool saw_gamma_316 = false;
  for (const auto& e : suite.entries)
    if (e.claim_id == "gamma-3-16") {
      saw_gamma_316 = true;
      CHECK(e.actual == "2821/8440");
      CHECK(e.status == SuiteEntry::Status::match);
    }
  CHECK(saw_gamma_316);

  const auto filtered = run_suite("thickness");
  CHECK(!filtered.entries.empty());
  for (const auto& e : filtered.entries) CHECK(e.section == "thickness");

  const auto j = to_json(suite);
  CHECK(j["pass"] == true);
  CHECK(j["entries"].size() == suite.entries.size());
}

TEST_CASE("figures are deterministic and carry the expected geometry") {
  const auto a = svg_scc(2, 3, 2);
  const auto b = svg_scc(2, 3, 2);
  CHECK(a == b);
  // level-2 rectangles on the exact x1000 scale: 2/5 -> 400, 9/20 -> 450,
  // 7/10 -> 700, 17/20 -> 850, offset by the 40px gutter
  CHECK(a.find("x=\"440.000\"") != std::string::npos);
  CHECK(a.find("x=\"490.000\"") != std::string::npos);
  CHECK(a.find("x=\"740.000\"") != std::string::npos);
  CHECK(a.find("x=\"890.000\"") != std::string::npos);

  const auto sq = svg_product_square(2, 3, 2, 2, 3, 2);
  CHECK(sq == svg_product_square(2, 3, 2, 2, 3, 2));
  // 4x4 black cells plus background and frame
  CHECK(std::count(sq.begin(), sq.end(), '\n') > 16);
  CHECK(sq.find("(1/2, 11/20) + Z") != std::string::npos);

  // fold closes up for the 3-4 pair; the raw sum split is drawn instead
  const auto sq34 = svg_product_square(2, 3, 3, 2, 4, 4);
  CHECK(sq34.find("(49/72, 899/1320)") != std::string::npos);
  CHECK(sq34.find("+ Z") == std::string::npos);

  const auto sum = svg_sum_cover(2, 3, 3, 2, 4, 4);
  CHECK(sum == svg_sum_cover(2, 3, 3, 2, 4, 4));
  CHECK(sum.find("(49/72, 899/1320)") != std::string::npos);
}

TEST_CASE("cli: expand and eval") {
  const auto r = run_cli("expand 1/2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["preperiod"] == nlohmann::json({3}));
  CHECK(j["period"] == nlohmann::json({2}));
  CHECK(j["value"] == "1/2");

  const auto r2 = run_cli("expand 12/41");
  CHECK(nlohmann::json::parse(r2.out)["preperiod"] == nlohmann::json({4, 2, 42}));

  const auto r3 = run_cli("eval '{\"preperiod\":[3,3],\"period\":[2]}'");
  CHECK(r3.exit_code == 0);
  CHECK(nlohmann::json::parse(r3.out)["value"] == "5/12");
}

TEST_CASE("cli: domain and usage errors exit 2") {
  CHECK(run_cli("expand 3/2").exit_code == 2);
  CHECK(run_cli("expand abc").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("verify nosuchtheorem -k 3").exit_code == 2);
}

TEST_CASE("cli: verification exit codes") {
  CHECK(run_cli("verify theorem1 --pair 4 4").exit_code == 0);
  CHECK(run_cli("verify theorem1 --triple 3 3 3").exit_code == 0);
  CHECK(run_cli("verify theorem1 --pair 3 3").exit_code == 0);  // refutation is decided
  CHECK(run_cli("verify theorem1 --pair 3 4").exit_code == 1);  // open either way
  CHECK(run_cli("verify theorem2 --ks 3 4 5 9 245").exit_code == 1);
  CHECK(run_cli("verify optimality -k 3").exit_code == 0);

  const auto r = run_cli("verify theorem1 --pair 4 4");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outcome"] == "certified_congruent");
  CHECK(j["interval"] == nlohmann::json({"6/11", "2"}));
}

TEST_CASE("cli: gap certificates and the part ceiling") {
  const auto r = run_cli("gap 2 3 2 3 --depths 2 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["certified_noncongruence"] == true);
  CHECK(j["gaps"]["open_intervals"][1] == nlohmann::json({"1/2", "11/20"}));

  const auto r2 = run_cli("gap 2 4 2 4 --depths 2 2");
  CHECK(r2.exit_code == 1);  // no gap: nothing is refuted
}

TEST_CASE("cli: part ceiling env override") {
  const std::string cmd = std::string("LUROTH_MAX_PARTS=8 ") + LUROTH_CLI_PATH +
                          " gap 2 3 2 3 --depths 9 9 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(out.find("ceiling") != std::string::npos);
}

TEST_CASE("cli: dim and thickness") {
  const auto r = run_cli("dim 2..3 --tol 1e-9");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["exact_sum_at_1"] == "2/3");

  const auto t = run_cli("thickness 3 16");
  const auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["gamma"] == "2821/8440");
  CHECK(jt["tau_closed_form"] == "2821/5619");
}

TEST_CASE("cli: suite json and figure output are byte-stable") {
  const auto dir = std::string(LUROTH_TEST_TMPDIR);
  const auto r1 = run_cli("suite --section thickness --json " + dir + "/s1.json");
  const auto r2 = run_cli("suite --section thickness --json " + dir + "/s2.json");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  const auto f1 = run_cli("figure scc 2 3 2 -o " + dir + "/f1.svg");
  const auto f2 = run_cli("figure scc 2 3 2 -o " + dir + "/f2.svg");
  CHECK(f1.exit_code == 0);
  CHECK(f2.exit_code == 0);
  auto slurp = [](const std::string& p) {
    FILE* f = fopen(p.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string s;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) s.append(buf.data(), n);
    fclose(f);
    return s;
  };
  CHECK(slurp(dir + "/s1.json") == slurp(dir + "/s2.json"));
  CHECK(slurp(dir + "/f1.svg") == slurp(dir + "/f2.svg"));
  CHECK(slurp(dir + "/f1.svg").find("<svg") != std::string::npos);
}
