#include <doctest.h>

#include "dyckflaws/report.hpp"
#include "dyckflaws/verify.hpp"

using namespace dyck;

TEST_CASE("count table JSON") {
  const Json j = count_table_json(count_table(2, StatKind::Peak));
  CHECK(j.dump() ==
        R"({"n":2,"stat":"peak","rows":{"0":{"1":"1","2":"1"},"1":{"1":"2"},"2":{"0":"1","1":"1"}}})");
  const Json row = count_table_json(count_table(2, StatKind::Valley), 1);
  CHECK(row.dump() == R"({"n":2,"stat":"valley","rows":{"1":{"1":"2"}}})");
  CHECK_THROWS_AS(count_table_json(count_table(2, StatKind::Valley), 3), std::domain_error);
}

TEST_CASE("count table JSON keys are in numeric order") {
  const Json j = count_table_json(count_table(10, StatKind::DoubleAscent));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["rows"].items()) keys.push_back(k);
  REQUIRE(keys.size() == 11);
  CHECK(keys[2] == "2");
  CHECK(keys[10] == "10");
  CHECK(j["rows"]["7"]["4"] == "5292");  // C(9,4) C(10,4) / 5
}

TEST_CASE("count table CSV") {
  CHECK(count_table_csv(count_table(1, StatKind::Peak)) == "m,k,count\n0,1,1\n1,0,1\n");
  CHECK(count_table_csv(count_table(3, StatKind::DoubleAscent), 2) ==
        "m,k,count\n2,0,1\n2,1,3\n2,2,1\n");
}

TEST_CASE("identity report JSON") {
  std::vector<IdentityResult> rs(2);
  rs[0] = {"a", "", true, std::nullopt};
  rs[1] = {"e", "", false, CoefficientMismatch{1, -1, 0, 0, -1}};
  CHECK(identity_report_json(rs).dump() ==
        R"([{"identity":"a","status":"pass","first_failure":null},)"
        R"({"identity":"e","status":"fail","first_failure":{"n":1,"xexp":-1,"yexp":0,"expected":"0","got":"-1"}}])");
}

TEST_CASE("series JSON") {
  const Json j = series_json(build_P(1));
  CHECK(j.dump() ==
        R"([{"n":0,"xexp":0,"yexp":0,"coeff":"1"},{"n":1,"xexp":0,"yexp":1,"coeff":"1"},)"
        R"({"n":1,"xexp":1,"yexp":0,"coeff":"1"}])");
}

TEST_CASE("verification reports are deterministic") {
  const auto suites = *parse_suites("all");
  auto render = [&](unsigned threads) {
    Json out = Json::array();
    for (const auto& r : run_verification(suites, {5, 4, threads})) out.push_back(suite_report_json(r));
    return out.dump();
  };
  const std::string serial = render(1);
  CHECK(serial == render(1));
  CHECK(serial == render(4));
}

TEST_CASE("suite names") {
  CHECK(parse_suites("all")->size() == 4);
  CHECK((*parse_suites("series"))[0] == Suite::Series);
  CHECK_FALSE(parse_suites("everything").has_value());
}

TEST_CASE("small verification runs") {
  const std::vector<Suite> formulas = {Suite::Formulas};
  const auto r = run_verification(formulas, {1, 0, 1});
  CHECK(r[0].pass());

  const std::vector<Suite> bij = {Suite::Bijections};
  const auto b = run_verification(bij, {6, 0, 1});
  REQUIRE(b[0].pass());
  const Check& cf = b[0].checks[3];
  CHECK(cf.name == "cf_step_bijection");
  CHECK(cf.detail["class_sizes"]["6"] == Json::parse("[132,132,132,132,132,132]"));
}
