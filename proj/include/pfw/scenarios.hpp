// Registry of named verification scenarios with machine-checkable
// outcomes, plus the runner and report formatting.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfw/dsl.hpp"
#include "pfw/groebner.hpp"

namespace pfw {

enum class CheckStatus { Pass, Fail, Err };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string anchor;   // which verified identity the check pins down
  CheckStatus status;
  std::string witness;  // failure witness or informational note
  std::int64_t millis;
};

struct Report {
  std::string scenario;
  CheckStatus overall;
  std::vector<CheckResult> checks;
  std::int64_t millis;
};

/// Designates one coefficient sign in a workspace for the mutation
/// property: negating it must flip the owning scenario to FAIL.
struct MutationSite {
  enum class Kind { Poly, IdealGen, MatrixEntry, VarMapImage };
  Kind kind;
  std::string object;
  std::string variable;  // VarMapImage: which image
  std::size_t i = 0;     // IdealGen: generator index; MatrixEntry: row
  std::size_t j = 0;     // MatrixEntry: column
  std::size_t term = 0;  // term index in canonical order
};

void apply_mutation(Workspace& w, const MutationSite& site);

struct CheckOutcome {
  bool pass;
  std::string witness;
};

class ScenarioContext {
 public:
  ScenarioContext(Workspace ws, Deadline deadline) : workspace(std::move(ws)), deadline(deadline) {}

  Workspace workspace;
  Deadline deadline;

  void check(const std::string& name, const std::string& anchor,
             const std::function<CheckOutcome()>& body);

  std::vector<CheckResult> take_results() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

struct Scenario {
  std::string name;
  std::string summary;
  std::string workspace_file;
  std::chrono::seconds budget;
  MutationSite mutation;
  std::function<void(ScenarioContext&)> run;
};

const std::vector<Scenario>& scenario_registry();
const Scenario& find_scenario(const std::string& name);

/// Runs one scenario against the workspace loaded from dir (or the
/// provided one, e.g. a mutated copy).
Report run_scenario(const Scenario& scenario, const std::string& dir,
                    std::optional<Workspace> workspace = std::nullopt);
Report run_scenario_named(const std::string& name, const std::string& dir);

/// Runs every registered scenario; reports come back in registration
/// order regardless of the number of worker threads.
std::vector<Report> run_all(const std::string& dir, unsigned jobs = 1);

std::string format_report_human(const Report& report, bool timings = true);
std::string format_reports_human(const std::vector<Report>& reports, bool timings = true);
/// One tab-separated record per check: scenario, check, status, millis,
/// witness. The millis field is the only non-reproducible one.
std::string format_reports_machine(const std::vector<Report>& reports);

bool all_passed(const std::vector<Report>& reports);

}  // namespace pfw
