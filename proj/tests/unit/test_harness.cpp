#include <doctest.h>

#include <filesystem>

#include "bsvy/config.hpp"
#include "bsvy/error.hpp"
#include "bsvy/harness.hpp"

using namespace bsvy;

TEST_CASE("INI parsing") {
  const auto doc = IniDocument::parse_string("[suite]\nname = defect\n[function]\nid = gaussian_bump\ndim = 1\n");
  CHECK(doc.has_section("suite"));
  CHECK(doc.get_string("suite", "name") == "defect");
  CHECK(doc.get_int("function", "dim", 0) == 1);
  CHECK(parse_number_list("1, 2 3e-1") == std::vector<double>{1.0, 2.0, 0.3});
  CHECK(std::isinf(parse_number("inf")));
  CHECK_THROWS_AS(parse_number("1.2x"), InvalidParameter);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(load_scenario(IniDocument::parse_string("[suite]\nname = bogus\n")), InvalidParameter);
  CHECK_THROWS_AS(load_scenario(IniDocument::parse_string("[suite]\nname = defect\n[extra]\nx = 1\n")), InvalidParameter);
  CHECK_THROWS_AS(load_scenario(IniDocument::parse_string("[suite]\nname = limit\n[functional]\nkk = 1\n")),
                  InvalidParameter);
  CHECK_THROWS_AS(load_scenario(IniDocument::parse_string("[suite]\nname = limit\n[function]\nid = nope\n")),
                  InvalidParameter);
  const Scenario sc = load_scenario(IniDocument::parse_file(BSVY_TEST_CONFIG_DIR "/limit_1d_k1.ini"), "x");
  CHECK(sc.suite == "limit");
  CHECK(sc.functional.gamma == -2.0);
  CHECK(sc.functions.size() == 1);
}

TEST_CASE("zero gamma is rejected before any computation") {
  const Scenario sc = load_scenario_file(BSVY_TEST_CONFIG_DIR "/invalid_gamma.ini");
  RunOptions o;
  o.write_files = false;
  CHECK_THROWS_AS(run_scenario(sc, o), InvalidParameter);
}

TEST_CASE("reports are deterministic and tables have fixed headers") {
  const Scenario sc = load_scenario_file(BSVY_TEST_CONFIG_DIR "/weights_power.ini");
  RunOptions o;
  o.write_files = false;
  const Report a = run_scenario(sc, o);
  const Report b = run_scenario(sc, o);
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(a.passed());
  REQUIRE_FALSE(a.tables.empty());
  CHECK(table_csv(a.tables[0]).rfind("p,depth40,depth80,depth160,stable,member\n", 0) == 0);
  for (const auto& c : report_json(a)["checks"]) {
    const std::string prov = c["provenance"];
    CHECK((prov == "literature" || prov == "trivial" || prov == "derived"));
  }
}

TEST_CASE("report files") {
  const auto dir = std::filesystem::temp_directory_path() / "bsvy_unit_reports";
  std::filesystem::remove_all(dir);
  const Scenario sc = load_scenario_file(BSVY_TEST_CONFIG_DIR "/oracles.ini");
  RunOptions o;
  o.out_dir = dir.string();
  run_scenario(sc, o);
  CHECK(std::filesystem::exists(dir / "oracles.report.json"));
  CHECK(std::filesystem::exists(dir / "oracles.oracle.csv"));
  CHECK(std::filesystem::exists(dir / "oracles.timing.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweeps reject unknown axes") {
  const Scenario sc = load_scenario_file(BSVY_TEST_CONFIG_DIR "/defect_1d.ini");
  RunOptions o;
  o.write_files = false;
  CHECK_THROWS_AS(sweep_scenario(sc, "nope", o), InvalidParameter);
  const Report r = sweep_scenario(sc, "epsilon", o);
  CHECK(r.tables.at(0).columns == std::vector<std::string>{"eps", "value"});
}

TEST_CASE("unknown suite keys are rejected") {
  CHECK_THROWS_AS(load_scenario(IniDocument::parse_string("[suite]\nname = weights\np_lsit = 1 2\n")), InvalidParameter);
  CHECK_NOTHROW(load_scenario(IniDocument::parse_string("[suite]\nname = weights\np_list = 1 2\n")));
}
