#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hessring/cli_commands.hpp"
#include "hessring/report.hpp"
#include "hessring/suites.hpp"

using namespace hessring;

TEST_CASE("verify exit codes and json schema") {
  CliConfig cfg;
  cfg.n = 2;
  cfg.suite = "gkm";
  cfg.format = "json";
  std::ostringstream out;
  int code = cmd_verify(cfg, out);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "gkm");
  CHECK(j["summary"]["fail"] == 0);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
    CHECK(c.contains("elapsed_ms"));
    if (c["status"] == "fail") CHECK_FALSE(c["witness"].is_null());
  }
}

TEST_CASE("verify usage errors") {
  CliConfig cfg;  // neither n nor h
  std::ostringstream out;
  CHECK(cmd_verify(cfg, out) == 2);
  cfg.n = 3;
  cfg.suite = "no-such-suite";
  CHECK(cmd_verify(cfg, out) == 2);
  cfg.suite = "all";
  cfg.format = "xml";
  CHECK(cmd_verify(cfg, out) == 2);
  cfg.format = "text";
  cfg.h = HessFn({2, 2});  // disagrees with n=3
  CHECK(cmd_verify(cfg, out) == 2);
}

TEST_CASE("full suite passes at n=3") {
  CliConfig cfg;
  cfg.n = 3;
  cfg.suite = "all";
  cfg.format = "text";
  std::ostringstream out;
  CHECK(cmd_verify(cfg, out) == 0);
  CHECK(out.str().find("fail") != std::string::npos);  // the summary line mentions 0 fail
}

TEST_CASE("generators table lists the worked 3,3,4,5,6,6 example") {
  CliConfig cfg;
  cfg.h = HessFn::parse("3,3,4,5,6,6");
  std::ostringstream out;
  CHECK(cmd_table(cfg, "generators", out) == 0);
  std::string s = out.str();
  for (const std::string name :
       {"f_{3,1}", "f_{3,2}", "f_{4,3}", "f_{5,4}", "f_{6,5}", "f_{6,6}"})
    CHECK(s.find(name) != std::string::npos);
  CHECK(s.find("f_{6,1}") == std::string::npos);
}

TEST_CASE("hilbert table has one row per Hessenberg function") {
  CliConfig cfg;
  cfg.n = 3;
  cfg.format = "json";
  std::ostringstream out;
  CHECK(cmd_table(cfg, "hilbert", out) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["rows"].size() == 5);  // Catalan(3)
}

TEST_CASE("fixed-points table") {
  CliConfig cfg;
  cfg.h = HessFn({2, 3, 3});
  std::ostringstream out;
  CHECK(cmd_table(cfg, "fixed-points", out) == 0);
  CHECK(out.str().find("123 132 213 321") != std::string::npos);
}

TEST_CASE("unknown table kind is a usage error") {
  CliConfig cfg;
  cfg.n = 2;
  std::ostringstream out;
  CHECK(cmd_table(cfg, "nope", out) == 2);
}

TEST_CASE("xg output for h=2,2") {
  CliConfig cfg;
  cfg.h = HessFn({2, 2});
  cfg.format = "json";
  std::ostringstream out;
  CHECK(cmd_xg(cfg, out) == 0);
  auto j = nlohmann::json::parse(out.str());
  auto& entry = j["expansions"][0];
  REQUIRE(entry["records"].size() == 1);
  CHECK(entry["records"][0]["lambda"] == nlohmann::json::array({2}));
  CHECK(entry["records"][0]["coeff"] == nlohmann::json::array({1, 1}));
  CHECK(entry["trivial_coefficient_matches"] == true);
  CHECK(entry["s1n_coeff"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("xg with an edgeless graph stays in t-degree zero") {
  CliConfig cfg;
  cfg.h = HessFn({1, 2, 3});
  cfg.format = "json";
  std::ostringstream out;
  CHECK(cmd_xg(cfg, out) == 0);
  auto j = nlohmann::json::parse(out.str());
  for (const auto& rec : j["expansions"][0]["records"])
    CHECK(rec["coeff"].size() == 1);  // constant polynomials in t
  // Expansion of (x1+x2+x3)^3: multiplicities are hook dimensions 1, 2, 1
  // on [3], [2,1], [1,1,1] (after omega: conjugated).
  CHECK(j["expansions"][0]["records"].size() == 3);
}

TEST_CASE("gkm export") {
  CliConfig cfg;
  cfg.h = HessFn({2, 2});
  std::ostringstream out;
  CHECK(cmd_gkm_export(cfg, out) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["vertices"] == nlohmann::json::array({"12", "21"}));
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0]["from"] == "12");
  CHECK(j["edges"][0]["to"] == "21");
  CHECK(j["edges"][0]["label"] == "t1 - t2");
}

TEST_CASE("schur and betti tables") {
  CliConfig cfg;
  cfg.h = HessFn({2, 3, 3});
  cfg.format = "json";
  std::ostringstream out;
  CHECK(cmd_table(cfg, "schur", out) == 0);
  auto j = nlohmann::json::parse(out.str());
  REQUIRE(j["rows"].size() == 1);
  // omega X_G = t s_21 + (1+2t+t^2) s_3 for the path on three vertices.
  CHECK(j["rows"][0]["[3]"] == "1 2 1");
  CHECK(j["rows"][0]["[2,1]"] == "0 1");

  std::ostringstream out2;
  CHECK(cmd_table(cfg, "betti", out2) == 0);
  auto j2 = nlohmann::json::parse(out2.str());
  CHECK(j2["rows"][0]["coeffs"] == "1 4 1");
}

TEST_CASE("byte-stable tables across jobs settings") {
  for (const std::string kind : {"hilbert", "betti"}) {
    CliConfig a, b;
    a.n = b.n = 3;
    a.format = b.format = "csv";
    a.jobs = 1;
    b.jobs = 4;
    std::ostringstream oa, ob;
    CHECK(cmd_table(a, kind, oa) == 0);
    CHECK(cmd_table(b, kind, ob) == 0);
    CHECK(oa.str() == ob.str());
  }
}

TEST_CASE("csv quoting is rfc4180") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("report rendering") {
  Report r;
  r.suite = "demo";
  r.n = 2;
  r.checks.push_back({"ok-check", "pass", "", 1, ""});
  r.checks.push_back({"bad-check", "fail", "w=21", 2, ""});
  CHECK(r.count("pass") == 1);
  CHECK_FALSE(r.all_pass());
  std::string csv = report_to_csv(r);
  CHECK(csv.find("demo,ok-check,pass,,1\r\n") != std::string::npos);
  std::string text = report_to_text(r);
  CHECK(text.find("[fail] bad-check") != std::string::npos);
}
