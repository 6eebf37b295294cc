#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "pfw/scenarios.hpp"

using namespace pfw;

namespace {

const char* kDir = PFW_SCENARIO_DIR;

Report masked(Report r) {
  r.millis = 0;
  for (auto& c : r.checks) c.millis = 0;
  return r;
}

bool same_masked(const Report& a, const Report& b) {
  return format_report_human(masked(a), false) == format_report_human(masked(b), false);
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = scenario_registry();
  REQUIRE(reg.size() == 19);
  CHECK(reg.front().name == "S01-toric-vanish");
  CHECK(reg.back().name == "S19-recover-cone");
  std::set<std::string> names, files;
  for (const auto& s : reg) {
    CHECK(names.insert(s.name).second);
    CHECK(files.insert(s.workspace_file).second);  // mutation isolation needs one file each
    CHECK(s.budget.count() > 0);
  }
}

TEST_CASE("unknown scenario is a distinguished error") {
  CHECK_THROWS_AS(find_scenario("no-such"), Error);
}

TEST_CASE("every verified identity is covered by at least one check anchor") {
  // Anchor vocabulary: one entry per displayed identity in scope.
  const std::set<std::string> required{
      "newton-polygon-monomials", "tag-relations", "colon-trick", "nine-binomials",
      "dp6-cubics", "extrasymmetric-6x6", "nine-relations-six-repeats", "pfaffians-specialise",
      "minors-equal-pfaffians", "tom1-matrix", "jerry23-matrix", "tom-condition",
      "jerry-condition", "double-jerry-pivot", "jerry-deformation-matrix", "x-free-pair",
      "cramer-minors", "x-equations", "a-equations", "long-equation", "involution",
      "cube-minors", "phi-roots", "tag-deformation", "deformation-matrix-23",
      "base-space-products", "unprojection-equations-family", "component-transformations",
      "elliptic-deformation-matrix", "elliptic-base-minors", "small-resolution-tom1",
      "recover-cone"};
  std::set<std::string> seen;
  for (const auto& s : scenario_registry()) {
    Report r = run_scenario(s, kDir);
    for (const auto& c : r.checks) {
      CHECK(!c.anchor.empty());
      seen.insert(c.anchor);
    }
  }
  for (const auto& a : required) {
    INFO("anchor: " << a);
    CHECK(seen.count(a) == 1);
  }
}

TEST_CASE("reports are deterministic across runs and schedules") {
  Report once = run_scenario_named("S02-colon-identity", kDir);
  Report twice = run_scenario_named("S02-colon-identity", kDir);
  CHECK(same_masked(once, twice));

  Report a = run_scenario_named("S04-extrasym-generic", kDir);
  Report b = run_scenario_named("S04-extrasym-generic", kDir);
  CHECK(same_masked(a, b));
}

TEST_CASE("mutating the long-equation workspace flips exactly that scenario") {
  const Scenario& s10 = find_scenario("S10-long-equation");
  Report clean = run_scenario(s10, kDir);
  CHECK(clean.overall == CheckStatus::Pass);

  Workspace ws = load_workspace(std::string(kDir) + "/" + s10.workspace_file);
  apply_mutation(ws, s10.mutation);
  Report corrupted = run_scenario(s10, kDir, std::move(ws));
  CHECK(corrupted.overall == CheckStatus::Fail);

  // Scenarios own their workspaces one-to-one, so no other report changes.
  Report neighbor = run_scenario_named("S02-colon-identity", kDir);
  CHECK(neighbor.overall == CheckStatus::Pass);
}

TEST_CASE("machine records have the five-field schema") {
  std::vector<Report> reports{run_scenario_named("S02-colon-identity", kDir)};
  std::istringstream in(format_reports_machine(reports));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
      auto tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == "S02-colon-identity");
    CHECK((fields[2] == "PASS" || fields[2] == "FAIL" || fields[2] == "ERROR"));
    CHECK(std::stoll(fields[3]) >= 0);
  }
  CHECK(rows == reports[0].checks.size());
}

TEST_CASE("empty report list formats cleanly") {
  CHECK(format_reports_human({}) == "0/0 scenarios passed\n");
  CHECK(format_reports_machine({}).empty());
}
