// Command-line front end: closed-form classification of tetrahedral curves,
// support-set and Hilbert-function output, oracle cross-checks, exhaustive
// verification sweeps, and Fourier-Motzkin runs on constraint files.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tetra/fourier_motzkin.hpp"
#include "tetra/report.hpp"
#include "tetra/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::array<int, 6> parse_tuple(const std::string& text) {
  std::array<int, 6> a{};
  std::size_t pos = 0;
  for (int k = 0; k < 6; ++k) {
    std::size_t comma = text.find(',', pos);
    std::string part =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    if ((comma == std::string::npos) != (k == 5))
      throw std::invalid_argument("expected six comma-separated values");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad value '" + part + "'");
    if (value < 0) throw std::invalid_argument("exponents must be nonnegative");
    a[k] = value;
    pos = comma + 1;
  }
  return a;
}

int run_classify(const std::string& tuple_text, bool with_s_points, bool with_oracle,
                 bool as_json) {
  tetra::ClassifyReport report =
      tetra::build_classify_report(tetra::TetraCurve(parse_tuple(tuple_text)), with_s_points,
                                   with_oracle);
  if (as_json)
    std::cout << tetra::to_json(report).dump(2) << "\n";
  else
    std::cout << tetra::to_text(report);
  if (report.oracle && !report.oracle->agrees()) {
    std::cerr << "classify: oracle disagreement\n";
    return kExitCheckFailure;
  }
  return kExitSuccess;
}

struct VerifySelection {
  bool oracle = false;
  bool francisco = false;
  bool c5 = false;
  bool c8 = false;
  bool c9 = false;
  bool lemma_a1 = false;

  bool any() const { return oracle || francisco || c5 || c8 || c9 || lemma_a1; }
};

int run_verify(int max_a, VerifySelection sel, bool as_json) {
  if (!sel.any()) sel = {true, true, true, true, true, true};
  std::vector<tetra::SweepResult> checks;
  if (sel.oracle) checks.push_back(tetra::sweep_oracle(max_a));
  if (sel.francisco) checks.push_back(tetra::sweep_francisco(max_a));
  if (sel.c5) checks.push_back(tetra::sweep_k_diameter(max_a));
  if (sel.c8) checks.push_back(tetra::sweep_minimal_buchsbaum(max_a));
  if (sel.c9) checks.push_back(tetra::sweep_minimal_diam_two(max_a));
  if (sel.lemma_a1) checks.push_back(tetra::sweep_localization(max_a));
  tetra::SweepResult info = tetra::report_buchsbaum_threshold_form(max_a);

  bool passed = true;
  for (const tetra::SweepResult& r : checks) passed = passed && r.passed();

  if (as_json) {
    nlohmann::json j;
    j["max"] = max_a;
    j["passed"] = passed;
    j["checks"] = nlohmann::json::array();
    for (const tetra::SweepResult& r : checks)
      j["checks"].push_back({{"name", r.name},
                             {"passed", r.passed()},
                             {"checked", r.checked},
                             {"failures", r.failures},
                             {"notes", r.notes}});
    j["info"] = {{"name", info.name}, {"checked", info.checked}, {"notes", info.notes}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const tetra::SweepResult& r : checks) {
      std::cout << "check " << r.name << ": " << (r.passed() ? "PASS" : "FAIL")
                << " (checked " << r.checked << ")\n";
      for (const std::string& note : r.notes) std::cout << "  note: " << note << "\n";
      std::size_t shown = 0;
      for (const std::string& f : r.failures) {
        if (shown++ == 20) {
          std::cout << "  ... " << r.failures.size() - 20 << " more failures\n";
          break;
        }
        std::cout << "  fail: " << f << "\n";
      }
    }
    std::cout << "info " << info.name << " (checked " << info.checked << ")\n";
    for (const std::string& note : info.notes) std::cout << "  note: " << note << "\n";
    std::cout << "overall: " << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kExitSuccess : kExitCheckFailure;
}

int run_fm(const std::string& path, const std::vector<std::string>& eliminate_vars,
           bool find_integer_point, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "fm: cannot open " << path << "\n";
    return kExitUsage;
  }
  tetra::LinearSystem sys;
  try {
    sys = tetra::parse_system(in);
  } catch (const tetra::ParseError& e) {
    std::cerr << "fm: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  tetra::LinearSystem shown = sys;
  if (!eliminate_vars.empty()) {
    shown = tetra::normalize(shown);
    for (const std::string& var : eliminate_vars) shown = tetra::eliminate(shown, var);
    shown = tetra::remove_redundant(shown);
  }
  const bool feasible = tetra::is_feasible_rational(shown);
  std::optional<tetra::Exponent> point;
  if (find_integer_point) point = tetra::integer_point(sys);

  if (as_json) {
    nlohmann::json j;
    j["variables"] = shown.variables;
    j["constraints"] = nlohmann::json::array();
    for (const tetra::LinearConstraint& c : shown.constraints) {
      nlohmann::json row;
      for (const std::string& v : shown.variables) row["coeffs"][v] = c.coeff(v).str();
      row["rel"] = c.rel == tetra::Relation::GreaterEqual ? ">="
                   : c.rel == tetra::Relation::LessEqual  ? "<="
                                                          : "=";
      row["rhs"] = c.rhs.str();
      j["constraints"].push_back(row);
    }
    j["feasible"] = feasible;
    if (find_integer_point) {
      if (point)
        j["integer_point"] = *point;
      else
        j["integer_point"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tetra::to_text(shown);
    std::cout << "# feasible: " << (feasible ? "yes" : "no") << "\n";
    if (find_integer_point) {
      if (point)
        std::cout << "# integer point: " << tetra::to_string(*point) << "\n";
      else
        std::cout << "# integer point: infeasible\n";
    }
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetrahedral curve classification and local cohomology toolkit"};
  app.require_subcommand(1);

  std::string tuple_text;
  bool s_points = false, classify_oracle = false, classify_json = false;
  CLI::App* classify = app.add_subcommand("classify", "classify a curve C(a1,...,a6)");
  classify->add_option("tuple", tuple_text, "six comma-separated exponents, e.g. 1,0,0,0,0,1")
      ->required();
  classify->add_flag("--s-points", s_points, "list the support-set points");
  classify->add_flag("--oracle", classify_oracle, "cross-check against the graded-piece table");
  classify->add_flag("--json", classify_json, "machine-readable output");

  int max_a = 3;
  VerifySelection sel;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run exhaustive cross-verification sweeps");
  verify->add_option("--max", max_a, "upper bound for the swept exponents")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--oracle", sel.oracle, "graded-piece table vs closed forms");
  verify->add_flag("--francisco", sel.francisco, "ACM characterization equivalence");
  verify->add_flag("--c5", sel.c5, "k-invariant equals diameter");
  verify->add_flag("--c8", sel.c8, "minimal-curve Buchsbaum patterns");
  verify->add_flag("--c9", sel.c9, "minimal-curve diameter-two families");
  verify->add_flag("--lemma-a1", sel.lemma_a1, "degree-complex localization route");
  verify->add_flag("--json", verify_json, "machine-readable output");

  std::string fm_path;
  std::vector<std::string> eliminate_vars;
  bool fm_int = false, fm_json = false;
  CLI::App* fm = app.add_subcommand("fm", "Fourier-Motzkin elimination on a constraint file");
  fm->add_option("file", fm_path, "constraint file")->required();
  fm->add_option("--eliminate", eliminate_vars, "variables to eliminate, in order")
      ->delimiter(',');
  fm->add_flag("--int", fm_int, "search for an integer solution");
  fm->add_flag("--json", fm_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed())
      return run_classify(tuple_text, s_points, classify_oracle, classify_json);
    if (verify->parsed()) return run_verify(max_a, sel, verify_json);
    if (fm->parsed()) return run_fm(fm_path, eliminate_vars, fm_int, fm_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
