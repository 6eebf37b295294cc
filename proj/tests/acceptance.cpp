// Acceptance suite: runs every stated criterion at its stated budget and
// prints one pass/fail line per criterion.
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "pfw/dsl.hpp"
#include "pfw/scenarios.hpp"
#include "test_support.hpp"

using namespace pfw;

namespace {

const char* kDir = PFW_SCENARIO_DIR;
int failures = 0;

std::map<std::string, Report> g_reports;

const Report& report_for(const std::string& name) {
  auto it = g_reports.find(name);
  if (it == g_reports.end())
    it = g_reports.emplace(name, run_scenario_named(name, kDir)).first;
  return it->second;
}

void criterion(int number, const std::string& description, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++failures;
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << description
            << " (" << ms << " ms)";
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << "\n";
}

bool scenario_passes_within(const std::string& name, long budget_ms) {
  const Report& r = report_for(name);
  if (r.overall != CheckStatus::Pass) {
    std::cout << "    " << name << " did not pass:\n" << format_report_human(r);
    return false;
  }
  if (r.millis >= budget_ms) {
    std::cout << "    " << name << " took " << r.millis << " ms, budget " << budget_ms << "\n";
    return false;
  }
  return true;
}

std::string check_witness(const Report& r, const std::string& check_name) {
  for (const auto& c : r.checks)
    if (c.name == check_name) return c.witness;
  return "";
}

bool pfaffian_determinant_suite() {
  RingPtr r = make_ring({"t"}, {1});
  std::mt19937 rng(20240817);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 4 : 6);
    SkewMatrix m = testing::random_integer_skew(r, n, rng);
    if (!(pfaffian(m) * pfaffian(m) == testing::det_oracle(m))) return false;
    ++checked;
  }
  return checked == 200;
}

bool ring_axiom_suite() {
  RingPtr r = make_ring({"a", "b", "c", "d", "e"}, {1, 1, 2, 3, 0});
  testing::RandomPolys gen(r, 99);
  VarMap m(r);
  m.set("a", Polynomial::variable(r, "b") - Polynomial::constant(r, 1));
  m.set("c", Polynomial::variable(r, "d") * Polynomial::variable(r, "e"));
  for (int i = 0; i < 500; ++i) {
    Polynomial p = gen.next(5, 2, 9), q = gen.next(5, 2, 9);
    if (!((p + q) * p == p * p + q * p)) return false;
    if (!(p * q == q * p)) return false;
    if (!((p + q).substitute(m) == p.substitute(m) + q.substitute(m))) return false;
    if (!((p * q).substitute(m) == p.substitute(m) * q.substitute(m))) return false;
  }
  return true;
}

bool groebner_uniqueness_suite() {
  for (const auto& s : scenario_registry()) {
    Workspace ws = load_workspace(std::string(kDir) + "/" + s.workspace_file);
    for (const auto& [name, gens] : ws.ideals) {
      Ideal ideal = Ideal::make(ws.ring, gens);
      GroebnerBasis a = buchberger(ideal, MonomialOrder::weighted_degrevlex(),
                                   PairStrategy::Normal);
      GroebnerBasis b = buchberger(ideal, MonomialOrder::weighted_degrevlex(), PairStrategy::Fifo);
      if (!(a.basis() == b.basis())) {
        std::cout << "    strategy mismatch for ideal " << name << " in " << s.workspace_file
                  << "\n";
        return false;
      }
    }
  }
  return true;
}

bool parser_round_trip_suite() {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) {
    if (entry.path().extension() != ".usr") continue;
    ++seen;
    Workspace w1 = load_workspace(entry.path().string());
    Workspace w2 = parse_workspace(serialize_workspace(w1));
    if (serialize_workspace(w1) != serialize_workspace(w2)) {
      std::cout << "    round trip failed for " << entry.path() << "\n";
      return false;
    }
  }
  if (seen < 19) return false;
  std::mt19937 rng(4242);
  const std::string alphabet = "ring poly idealskew varmap abcxyz0123456789 ()=+-*^/,;:{}#\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string doc;
    for (int i = 0; i < 80; ++i) doc += alphabet[pick(rng)];
    try {
      parse_workspace(doc);
    } catch (const ParseError&) {
    }
  }
  return true;
}

bool mutation_suite() {
  bool ok = true;
  for (const auto& s : scenario_registry()) {
    Workspace ws = load_workspace(std::string(kDir) + "/" + s.workspace_file);
    apply_mutation(ws, s.mutation);
    Report corrupted = run_scenario(s, kDir, std::move(ws));
    if (corrupted.overall != CheckStatus::Fail) {
      std::cout << "    " << s.name << ": corrupted run reported "
                << to_string(corrupted.overall) << " instead of FAIL\n";
      ok = false;
    }
    if (report_for(s.name).overall != CheckStatus::Pass) {
      std::cout << "    " << s.name << ": clean run does not pass\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "toric kernel equals the nine binomials (S03, < 60 s)",
            [] { return scenario_passes_within("S03-toric-kernel", 60000); });
  criterion(2, "extrasymmetric repeats and specialization (S04/S05, < 5 s each)", [] {
    return scenario_passes_within("S04-extrasym-generic", 5000) &&
           scenario_passes_within("S05-extrasym-specialise", 5000);
  });
  criterion(3, "minors of A+B match the Pfaffian ideal at la=-1 (S06, < 10 s)",
            [] { return scenario_passes_within("S06-segre-minors", 10000); });
  criterion(4, "Tom_1 and Jerry_23 checks with pivot detection (S07/S08, < 1 s each)", [] {
    return scenario_passes_within("S07-tom1", 1000) &&
           scenario_passes_within("S08-jerry23", 1000);
  });
  criterion(5, "double-Jerry Pfaffians and the long equation (S09/S10, < 10 s)", [] {
    return scenario_passes_within("S09-double-jerry-pfaffians", 10000) &&
           scenario_passes_within("S10-long-equation", 10000);
  });
  criterion(6, "both involutions fix the nine equations (S11, < 1 s)",
            [] { return scenario_passes_within("S11-involutions", 1000); });
  criterion(7, "cube memberships with the ladder level recorded (S12, < 60 s)", [] {
    if (!scenario_passes_within("S12-s3-cube", 60000)) return false;
    std::string witness = check_witness(report_for("S12-s3-cube"), "cube-minor-memberships");
    if (witness.find("level=") == std::string::npos) {
      std::cout << "    ladder level not recorded\n";
      return false;
    }
    std::cout << "    " << witness << "\n";
    return true;
  });
  criterion(8, "deformed tag equation with exact cofactors (S13, < 1 s)",
            [] { return scenario_passes_within("S13-tag-deformation", 1000); });
  criterion(9, "base spaces: (g*y, g*z) and the 2x3 minors (S14/S16, < 5 s each)", [] {
    return scenario_passes_within("S14-base-space", 5000) &&
           scenario_passes_within("S16-elliptic-base", 5000);
  });
  criterion(10, "Tom and Jerry components with normalization logged (S15, < 120 s)", [] {
    if (!scenario_passes_within("S15-components", 120000)) return false;
    const Report& r = report_for("S15-components");
    for (const auto& name : {"tom-component", "jerry-component"}) {
      std::string witness = check_witness(r, name);
      if (witness.find("level=") == std::string::npos) {
        std::cout << "    " << name << ": ladder level not recorded\n";
        return false;
      }
      std::cout << "    " << name << ": " << witness << "\n";
    }
    return true;
  });
  criterion(11, "elliptic small resolution reaches the Tom_1 form (S17, < 120 s)",
            [] { return scenario_passes_within("S17-elliptic-tom", 120000); });
  criterion(12, "property suites: Pf^2=det, ring axioms, basis uniqueness, round trips, mutations",
            [] {
              bool ok = true;
              if (!pfaffian_determinant_suite()) {
                std::cout << "    Pf^2 = det suite failed\n";
                ok = false;
              }
              if (!ring_axiom_suite()) {
                std::cout << "    ring axiom / homomorphism suite failed\n";
                ok = false;
              }
              if (!groebner_uniqueness_suite()) ok = false;
              if (!parser_round_trip_suite()) {
                std::cout << "    parser round-trip suite failed\n";
                ok = false;
              }
              if (!mutation_suite()) ok = false;
              return ok;
            });

  // Not a numbered criterion, but the corpus itself must be green.
  bool corpus_ok = true;
  for (const auto& s : scenario_registry())
    if (report_for(s.name).overall != CheckStatus::Pass) {
      std::cout << "corpus: " << s.name << " did not pass\n";
      corpus_ok = false;
    }
  std::cout << "corpus: " << (corpus_ok ? "PASS" : "FAIL")
            << " - every registered scenario passes\n";
  if (!corpus_ok) ++failures;

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
