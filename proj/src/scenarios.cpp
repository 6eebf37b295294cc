// Scenario runner, mutation plumbing, and report formatting. The registry
// itself lives in scenario_defs.cpp.
#include "pfw/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace pfw {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Err:
      return "ERROR";
  }
  return "?";
}

namespace {

Polynomial negate_term(const Polynomial& p, std::size_t term) {
  auto span = p.terms();
  if (term >= span.size()) throw Error("mutation: term index out of range");
  std::vector<Term> terms(span.begin(), span.end());
  terms[term].coeff = -terms[term].coeff;
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

}  // namespace

void apply_mutation(Workspace& w, const MutationSite& site) {
  switch (site.kind) {
    case MutationSite::Kind::Poly: {
      for (auto& [name, p] : w.polynomials) {
        if (name == site.object) {
          p = negate_term(p, site.term);
          return;
        }
      }
      throw Error("mutation: no polynomial named '" + site.object + "'");
    }
    case MutationSite::Kind::IdealGen: {
      for (auto& [name, gens] : w.ideals) {
        if (name == site.object) {
          if (site.i >= gens.size()) throw Error("mutation: generator index out of range");
          gens[site.i] = negate_term(gens[site.i], site.term);
          return;
        }
      }
      throw Error("mutation: no ideal named '" + site.object + "'");
    }
    case MutationSite::Kind::MatrixEntry: {
      for (auto& [name, m] : w.matrices) {
        if (name == site.object) {
          m.set(site.i, site.j, negate_term(m.at(site.i, site.j), site.term));
          return;
        }
      }
      throw Error("mutation: no matrix named '" + site.object + "'");
    }
    case MutationSite::Kind::VarMapImage: {
      for (auto& [name, vm] : w.varmaps) {
        if (name == site.object) {
          std::size_t var = vm.ring()->index_or_throw(site.variable);
          vm.set(var, negate_term(vm.image(var), site.term));
          return;
        }
      }
      throw Error("mutation: no varmap named '" + site.object + "'");
    }
  }
}

void ScenarioContext::check(const std::string& name, const std::string& anchor,
                            const std::function<CheckOutcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult result{name, anchor, CheckStatus::Err, "", 0};
  try {
    CheckOutcome outcome = body();
    result.status = outcome.pass ? CheckStatus::Pass : CheckStatus::Fail;
    result.witness = std::move(outcome.witness);
  } catch (const BudgetExceeded&) {
    result.status = CheckStatus::Err;
    result.witness = "budget exceeded";
  } catch (const Error& e) {
    result.status = CheckStatus::Err;
    result.witness = e.what();
  }
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  results_.push_back(std::move(result));
}

const Scenario& find_scenario(const std::string& name) {
  for (const auto& s : scenario_registry())
    if (s.name == name) return s;
  throw Error("unknown scenario '" + name + "'");
}

Report run_scenario(const Scenario& scenario, const std::string& dir,
                    std::optional<Workspace> workspace) {
  auto start = std::chrono::steady_clock::now();
  Report report{scenario.name, CheckStatus::Err, {}, 0};
  try {
    Workspace ws = workspace ? std::move(*workspace)
                             : load_workspace(dir + "/" + scenario.workspace_file);
    Deadline deadline{start + scenario.budget};
    ScenarioContext ctx(std::move(ws), deadline);
    scenario.run(ctx);
    report.checks = ctx.take_results();
    report.overall = CheckStatus::Pass;
    for (const auto& c : report.checks) {
      if (c.status == CheckStatus::Err) {
        report.overall = CheckStatus::Err;
        break;
      }
      if (c.status == CheckStatus::Fail) report.overall = CheckStatus::Fail;
    }
  } catch (const Error& e) {
    report.checks.push_back({"setup", "", CheckStatus::Err, e.what(), 0});
    report.overall = CheckStatus::Err;
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

Report run_scenario_named(const std::string& name, const std::string& dir) {
  return run_scenario(find_scenario(name), dir);
}

std::vector<Report> run_all(const std::string& dir, unsigned jobs) {
  const auto& registry = scenario_registry();
  std::vector<Report> reports(registry.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < registry.size(); ++i) reports[i] = run_scenario(registry[i], dir);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= registry.size()) return;
      reports[i] = run_scenario(registry[i], dir);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<unsigned>(jobs, registry.size()); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return reports;
}

namespace {

std::string sanitize(std::string s) {
  for (auto& ch : s)
    if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace

std::string format_report_human(const Report& report, bool timings) {
  std::ostringstream os;
  os << report.scenario << " " << to_string(report.overall);
  if (timings) os << " (" << report.millis << " ms)";
  os << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << to_string(c.status) << "] " << c.name << " {" << c.anchor << "}";
    if (timings) os << " " << c.millis << " ms";
    if (!c.witness.empty()) os << " -- " << sanitize(c.witness);
    os << "\n";
  }
  return os.str();
}

std::string format_reports_human(const std::vector<Report>& reports, bool timings) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    os << format_report_human(r, timings);
    if (r.overall == CheckStatus::Pass) ++passed;
  }
  os << passed << "/" << reports.size() << " scenarios passed\n";
  return os.str();
}

std::string format_reports_machine(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << r.scenario << "\t" << c.name << "\t" << to_string(c.status) << "\t" << c.millis << "\t"
         << sanitize(c.witness) << "\n";
  return os.str();
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.overall == CheckStatus::Pass; });
}

}  // namespace pfw
