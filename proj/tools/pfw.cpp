// Command-line workbench: scenario verification plus direct access to the
// Pfaffian, Groebner, format, unprojection, and toric operations.
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pfw/dsl.hpp"
#include "pfw/formats.hpp"
#include "pfw/scenarios.hpp"
#include "pfw/toric.hpp"
#include "pfw/unprojection.hpp"

#ifndef PFW_SCENARIO_DIR
#define PFW_SCENARIO_DIR "scenarios"
#endif

namespace {

using namespace pfw;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "file.usr#name" -> (workspace, name); a missing #name picks the sole ideal.
std::pair<Workspace, std::string> load_ideal_ref(const std::string& ref) {
  auto hash = ref.find('#');
  std::string path = ref.substr(0, hash == std::string::npos ? ref.size() : hash);
  Workspace ws = load_workspace(path);
  std::string name;
  if (hash != std::string::npos) {
    name = ref.substr(hash + 1);
  } else if (ws.ideals.size() == 1) {
    name = ws.ideals.front().first;
  } else {
    throw Error("'" + path + "' needs an explicit #ideal suffix");
  }
  return {std::move(ws), std::move(name)};
}

MonomialOrder parse_order(const RingPtr& ring, const std::string& spec) {
  if (spec == "degrevlex") return MonomialOrder::degrevlex();
  if (spec == "lex") return MonomialOrder::lex();
  if (spec.empty() || spec == "wdegrevlex" || spec == "weighted-degrevlex")
    return MonomialOrder::weighted_degrevlex();
  if (spec.rfind("elim:", 0) == 0) {
    std::vector<std::size_t> idx;
    for (const auto& v : split_list(spec.substr(5))) idx.push_back(ring->index_or_throw(v));
    return MonomialOrder::block(std::move(idx));
  }
  throw Error("unknown order '" + spec + "'");
}

int cmd_verify(const std::string& dir, bool all, const std::string& scenario,
               const std::string& report_path, bool machine, unsigned jobs) {
  std::vector<Report> reports;
  if (all || scenario.empty()) {
    reports = run_all(dir, jobs);
  } else {
    reports.push_back(run_scenario_named(scenario, dir));
  }
  if (machine)
    std::cout << format_reports_machine(reports);
  else
    std::cout << format_reports_human(reports);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error("cannot write '" + report_path + "'");
    out << (machine ? format_reports_machine(reports) : format_reports_human(reports, false));
  }
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian and unprojection workbench"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run registered verification scenarios");
  bool v_all = false, v_machine = false;
  std::string v_scenario, v_report, v_dir = PFW_SCENARIO_DIR;
  unsigned v_jobs = std::max(1u, std::thread::hardware_concurrency());
  verify->add_flag("--all", v_all, "run every scenario");
  verify->add_option("--scenario", v_scenario, "run a single scenario by name");
  verify->add_option("--report", v_report, "write the report to a file (timings omitted)");
  verify->add_flag("--machine", v_machine, "tab-separated machine-readable records");
  verify->add_option("--jobs", v_jobs, "number of parallel scenario workers");
  verify->add_option("--scenarios", v_dir, "scenario workspace directory");

  // pfaffian
  auto* pf = app.add_subcommand("pfaffian", "Pfaffians of a skew matrix");
  std::string p_input, p_matrix, p_delete;
  bool p_maximal = false, p_sub = false;
  pf->add_option("--input", p_input, "workspace file")->required();
  pf->add_option("--matrix", p_matrix, "matrix name")->required();
  pf->add_flag("--maximal", p_maximal, "all maximal Pfaffians of an odd-size matrix");
  pf->add_flag("--sub4of6", p_sub, "all 15 principal 4x4 Pfaffians of a 6x6 matrix");
  pf->add_option("--delete", p_delete, "rows to delete before taking the Pfaffian");

  // groebner
  auto* gro = app.add_subcommand("groebner", "reduced Groebner basis of an ideal");
  std::string g_input, g_ideal, g_order;
  gro->add_option("--input", g_input, "workspace file")->required();
  gro->add_option("--ideal", g_ideal, "ideal name")->required();
  gro->add_option("--order", g_order, "degrevlex | lex | wdegrevlex | elim:v1,v2,...");

  // member
  auto* mem = app.add_subcommand("member", "ideal membership of an expression");
  std::string m_ideal, m_poly;
  mem->add_option("--ideal", m_ideal, "workspace file, optionally file#ideal")->required();
  mem->add_option("--poly", m_poly, "expression to test")->required();

  // equal
  auto* eq = app.add_subcommand("equal", "ideal equality across workspaces");
  std::string e_left, e_right;
  eq->add_option("--left", e_left, "file#ideal")->required();
  eq->add_option("--right", e_right, "file#ideal")->required();

  // eliminate
  auto* elim = app.add_subcommand("eliminate", "eliminate variables from an ideal");
  std::string el_input, el_ideal, el_vars;
  elim->add_option("--input", el_input, "workspace file")->required();
  elim->add_option("--ideal", el_ideal, "ideal name")->required();
  elim->add_option("--vars", el_vars, "comma-separated variables to eliminate")->required();

  // tom
  auto* tom = app.add_subcommand("tom", "Tom_i membership check");
  std::string t_input, t_matrix, t_ci;
  std::size_t t_index = 0;
  tom->add_option("--input", t_input, "workspace file")->required();
  tom->add_option("--matrix", t_matrix, "matrix name")->required();
  tom->add_option("--index", t_index, "row/column left out")->required();
  tom->add_option("--ci", t_ci, "complete intersection variables v1,v2,v3,v4")->required();

  // jerry
  auto* jerry = app.add_subcommand("jerry", "Jerry_jk membership check");
  std::string j_input, j_matrix, j_rows, j_ci;
  jerry->add_option("--input", j_input, "workspace file")->required();
  jerry->add_option("--matrix", j_matrix, "matrix name")->required();
  jerry->add_option("--rows", j_rows, "the two rows J,K")->required();
  jerry->add_option("--ci", j_ci, "complete intersection variables")->required();

  // unproject
  auto* unp = app.add_subcommand("unproject", "Cramer-rule unprojection of a bilinear pair");
  std::string u_input, u_m1, u_m2, u_xvars, u_new;
  unp->add_option("--input", u_input, "workspace file")->required();
  unp->add_option("--m1", u_m1, "first bilinear form (polynomial name)")->required();
  unp->add_option("--m2", u_m2, "second bilinear form (polynomial name)")->required();
  unp->add_option("--xvars", u_xvars, "the three unprojected variables v1,v2,v3")->required();
  unp->add_option("--new", u_new, "the unprojection variable")->required();

  // toric
  auto* toric = app.add_subcommand("toric", "monomial map kernel and pullback");
  std::string tc_input, tc_map, tc_sources, tc_pullback;
  bool tc_kernel = false;
  toric->add_option("--input", tc_input, "workspace file")->required();
  toric->add_option("--map", tc_map, "varmap holding the monomial images")->required();
  toric->add_option("--sources", tc_sources, "source variables v1,v2,...")->required();
  toric->add_flag("--kernel", tc_kernel, "print the kernel ideal");
  toric->add_option("--pullback", tc_pullback, "expression to pull back");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(v_dir, v_all, v_scenario, v_report, v_machine, v_jobs);

    if (*pf) {
      Workspace ws = load_workspace(p_input);
      const SkewMatrix& m = ws.matrix(p_matrix);
      if (p_maximal) {
        for (auto& [drop, value] : maximal_pfaffians(m))
          std::cout << "delete " << drop << ": " << value.to_string() << "\n";
      } else if (p_sub) {
        for (auto& [quad, value] : sub_pfaffians_4of6(m)) {
          std::cout << "(";
          for (std::size_t i = 0; i < quad.size(); ++i) std::cout << (i ? "," : "") << quad[i];
          std::cout << "): " << value.to_string() << "\n";
        }
      } else if (!p_delete.empty()) {
        std::vector<std::size_t> rows;
        for (auto& v : split_list(p_delete)) rows.push_back(std::stoul(v));
        SkewMatrix del = delete_rows(m, rows);
        std::cout << (del.size() % 2 == 0 ? pfaffian(del).to_string()
                                          : std::string("odd size ") + std::to_string(del.size()))
                  << "\n";
      } else {
        std::cout << pfaffian(m).to_string() << "\n";
      }
      return 0;
    }

    if (*gro) {
      Workspace ws = load_workspace(g_input);
      Ideal ideal = Ideal::make(ws.ring, ws.ideal(g_ideal));
      GroebnerBasis gb = buchberger(ideal, parse_order(ws.ring, g_order));
      for (const auto& p : gb.basis()) std::cout << p.to_string() << "\n";
      return 0;
    }

    if (*mem) {
      auto [ws, name] = load_ideal_ref(m_ideal);
      Polynomial p = parse_expression(ws.ring, m_poly);
      bool member = is_member(p, Ideal::make(ws.ring, ws.ideal(name)));
      std::cout << (member ? "MEMBER" : "NOT MEMBER") << "\n";
      return member ? 0 : 1;
    }

    if (*eq) {
      auto [lws, lname] = load_ideal_ref(e_left);
      auto [rws, rname] = load_ideal_ref(e_right);
      require_same_ring(lws.ring, rws.ring);
      std::vector<Polynomial> right;
      for (const auto& g : rws.ideal(rname)) right.push_back(parse_expression(lws.ring, g.to_string()));
      bool equal = ideals_equal(Ideal::make(lws.ring, lws.ideal(lname)),
                                Ideal::make(lws.ring, std::move(right)));
      std::cout << (equal ? "EQUAL" : "NOT EQUAL") << "\n";
      return equal ? 0 : 1;
    }

    if (*elim) {
      Workspace ws = load_workspace(el_input);
      std::vector<std::size_t> drop;
      for (const auto& v : split_list(el_vars)) drop.push_back(ws.ring->index_or_throw(v));
      Ideal out = eliminate(Ideal::make(ws.ring, ws.ideal(el_ideal)), drop);
      for (const auto& p : out.generators) std::cout << p.to_string() << "\n";
      return 0;
    }

    if (*tom) {
      Workspace ws = load_workspace(t_input);
      CIIdeal ci(ws.ring, split_list(t_ci));
      TomCheck tc = tom_check(ws.matrix(t_matrix), t_index, ci);
      std::cout << (tc.pass ? "PASS" : "FAIL") << "\n";
      for (const auto& w : tc.witnesses)
        std::cout << "  (" << w.i << "," << w.j << ") = " << w.entry.to_string() << "\n";
      return tc.pass ? 0 : 1;
    }

    if (*jerry) {
      Workspace ws = load_workspace(j_input);
      auto rows = split_list(j_rows);
      if (rows.size() != 2) throw Error("--rows needs exactly two indices");
      CIIdeal ci(ws.ring, split_list(j_ci));
      JerryCheck jc = jerry_check(ws.matrix(j_matrix), std::stoul(rows[0]), std::stoul(rows[1]), ci);
      std::cout << (jc.pass ? "PASS" : "FAIL") << " pivot-is-variable="
                << (jc.pivot_is_variable ? "yes" : "no") << "\n";
      for (const auto& w : jc.witnesses)
        std::cout << "  (" << w.i << "," << w.j << ") = " << w.entry.to_string() << "\n";
      return jc.pass ? 0 : 1;
    }

    if (*unp) {
      Workspace ws = load_workspace(u_input);
      auto xv = split_list(u_xvars);
      if (xv.size() != 3) throw Error("--xvars needs exactly three variables");
      BilinearPair pair = make_bilinear_pair(ws.polynomial(u_m1), ws.polynomial(u_m2),
                                             {xv[0], xv[1], xv[2]});
      UnprojectionResult r = cramer_unproject(pair, u_new);
      for (const auto& q : r.equations) std::cout << q.to_string() << "\n";
      return 0;
    }

    if (*toric) {
      Workspace ws = load_workspace(tc_input);
      MonomialMap map = monomial_map_from_varmap(ws.varmap(tc_map), split_list(tc_sources));
      if (tc_kernel) {
        for (const auto& p : map.kernel_ideal().generators) std::cout << p.to_string() << "\n";
      } else if (!tc_pullback.empty()) {
        std::cout << map.pullback(parse_expression(ws.ring, tc_pullback)).to_string() << "\n";
      } else {
        throw Error("toric: pass --kernel or --pullback");
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
