#pragma once

#include <array>
#include <atomic>
#include <set>
#include <string>
#include <vector>

#include "tetra/curve.hpp"
#include "tetra/fourier_motzkin.hpp"
#include "tetra/parallel.hpp"
#include "tetra/support_module.hpp"
#include "tetra/takayama.hpp"

namespace tetra {

struct SweepResult {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

namespace detail {

// All tuples 0 <= a_i <= max_a except the zero tuple, lexicographic.
inline std::vector<std::array<int, 6>> all_tuples(int max_a) {
  std::vector<std::array<int, 6>> out;
  std::array<int, 6> a{};
  while (true) {
    bool all_zero = true;
    for (int v : a) all_zero = all_zero && v == 0;
    if (!all_zero) out.push_back(a);
    int k = 5;
    while (k >= 0 && a[k] == max_a) a[k--] = 0;
    if (k < 0) break;
    ++a[k];
  }
  return out;
}

// Distinct normalized curves among all tuples with entries <= max_a, sorted.
inline std::vector<TetraCurve> normalized_classes(int max_a) {
  std::set<TetraCurve> classes;
  for (const auto& a : all_tuples(max_a)) classes.insert(normalize(TetraCurve(a)).curve);
  return std::vector<TetraCurve>(classes.begin(), classes.end());
}

// Runs check(item) -> failure message ("" = pass) over items on the worker
// pool; failures land in item order.
template <class Item, class Check>
inline void run_sweep(SweepResult& result, const std::vector<Item>& items, Check&& check) {
  std::vector<std::string> messages(items.size());
  parallel_for(items.size(), [&](std::size_t i) { messages[i] = check(items[i]); });
  result.checked += static_cast<long long>(items.size());
  for (std::string& m : messages)
    if (!m.empty()) result.failures.push_back(std::move(m));
}

}  // namespace detail

// Oracle equivalence: over every normalized class with entries <= max_a, the
// graded-piece table must be empty exactly on ACM curves, carry dimension 1
// everywhere, cover exactly the feasible degree interval, and coincide with
// the enumerated support set. Also reports (as notes) the scan-gate variant
// comparison and checks the facet shape at every tabulated multidegree.
inline SweepResult sweep_oracle(int max_a) {
  SweepResult result{"oracle"};
  const std::size_t tuple_count = detail::all_tuples(max_a).size();
  const std::vector<TetraCurve> classes = detail::normalized_classes(max_a);
  std::atomic<long long> gate_disagreements{0};
  const SimplicialComplex expected_facets =
      SimplicialComplex::from_facets({VertexSet{1, 2}, VertexSet{3, 4}});

  detail::run_sweep(result, classes, [&](const TetraCurve& c) -> std::string {
    MonomialIdeal ideal = tetra_ideal(c.a);
    GradedPieceTable table = h1_table(ideal);
    SupportSet s = enumerate_support(c);
    const bool acm = is_acm(c);

    if (table.empty() != acm)
      return c.str() + ": table empty=" + (table.empty() ? "yes" : "no") +
             " but acm=" + (acm ? "yes" : "no");
    for (const auto& [alpha, dim] : table.entries)
      if (dim != 1)
        return c.str() + ": piece at " + to_string(alpha) + " has dim " + std::to_string(dim);
    if (table.multidegrees() != s.points())
      return c.str() + ": table multidegrees differ from the enumerated support set";
    if (!acm) {
      std::vector<int> expected;
      for (int d = script_a(c); d <= support_end(c); ++d) expected.push_back(d);
      if (table.degrees() != expected)
        return c.str() + ": degree support is not the full interval [" +
               std::to_string(script_a(c)) + "," + std::to_string(support_end(c)) + "]";
    }
    for (const auto& [alpha, dim] : table.entries) {
      if (degree_complex(ideal, alpha) != expected_facets)
        return c.str() + ": degree complex at " + to_string(alpha) + " is " +
               degree_complex(ideal, alpha).str() + " instead of {1,2} {3,4}";
    }
    for_each_scan_multidegree(ideal, [&](const Exponent& alpha) {
      if (scan_gate_variant_differs(ideal, alpha)) ++gate_disagreements;
    });
    return "";
  });

  result.notes.push_back("tuples: " + std::to_string(tuple_count) + ", normalized classes: " +
                         std::to_string(classes.size()));
  result.notes.push_back("scan-gate variant disagreements: " +
                         std::to_string(gate_disagreements.load()));
  return result;
}

// The two closed-form ACM characterizations agree on every tuple with entries
// <= max_a satisfying the dominance condition.
inline SweepResult sweep_francisco(int max_a) {
  SweepResult result{"francisco"};
  std::vector<TetraCurve> curves;
  for (const auto& a : detail::all_tuples(max_a)) {
    TetraCurve c(a);
    if (is_normalized(c)) curves.push_back(c);
  }
  detail::run_sweep(result, curves, [](const TetraCurve& c) -> std::string {
    bool direct = is_acm(c);
    bool alt = is_acm_francisco(c);
    if (direct != alt)
      return c.str() + ": is_acm=" + (direct ? "true" : "false") +
             " is_acm_francisco=" + (alt ? "true" : "false");
    return "";
  });
  return result;
}

// k-invariant identity: on every non-ACM normalized class, the annihilation
// exponent computed from the module action equals the diameter, equals
// a1+a6-script_a-1, and the degree range runs from script_a to a1+a6-2.
inline SweepResult sweep_k_diameter(int max_a) {
  SweepResult result{"k-diameter"};
  std::vector<TetraCurve> classes;
  for (const TetraCurve& c : detail::normalized_classes(max_a))
    if (!is_acm(c)) classes.push_back(c);
  detail::run_sweep(result, classes, [](const TetraCurve& c) -> std::string {
    SupportSet s = enumerate_support(c);
    DegreeRange range = degree_range(s);
    const int closed_form = c.a[0] + c.a[5] - script_a(c) - 1;
    const int k = k_invariant(s);
    if (k != diameter(c) || k != closed_form || range.diam != k)
      return c.str() + ": k=" + std::to_string(k) + " diameter=" + std::to_string(diameter(c)) +
             " range.diam=" + std::to_string(range.diam) +
             " closed=" + std::to_string(closed_form);
    if (!range.beg || *range.beg != script_a(c) || *range.end != support_end(c))
      return c.str() + ": degree range does not run from script_a to a1+a6-2";
    return "";
  });
  return result;
}

// Three-way integer feasibility: for every normalized class and every degree
// 0 <= d <= a1+a6, the closed-form interval, the integer-point search on the
// degree-d system, and the brute-force degree-d slice of the support set all
// agree; found points satisfy the system exactly.
inline SweepResult sweep_integer_feasibility(int max_a) {
  SweepResult result{"integer-feasibility"};
  const std::vector<TetraCurve> classes = detail::normalized_classes(max_a);
  std::atomic<long long> degrees_checked{0};
  detail::run_sweep(result, classes, [&](const TetraCurve& c) -> std::string {
    DegreeInterval interval = feasible_degrees(c);
    SupportSet s = enumerate_support(c);
    for (int d = 0; d <= c.a[0] + c.a[5]; ++d) {
      ++degrees_checked;
      LinearSystem sys = support_system(c, d);
      std::optional<Exponent> point = integer_point(sys);
      const bool closed_form = interval.contains(d);
      const bool brute = s.by_degree().count(d) > 0;
      const bool fm = point.has_value();
      if (closed_form != brute || brute != fm)
        return c.str() + " d=" + std::to_string(d) + ": closed=" + (closed_form ? "1" : "0") +
               " brute=" + (brute ? "1" : "0") + " integer_point=" + (fm ? "1" : "0");
      if (point) {
        std::map<std::string, Rational> values;
        for (std::size_t i = 0; i < sys.variables.size(); ++i)
          values[sys.variables[i]] = Rational((*point)[i]);
        if (!satisfies(sys, values))
          return c.str() + " d=" + std::to_string(d) + ": returned point " + to_string(*point) +
                 " violates the system";
        if (!s.contains(*point))
          return c.str() + " d=" + std::to_string(d) + ": returned point " + to_string(*point) +
                 " is outside the support set";
      }
    }
    return "";
  });
  result.notes.push_back("degree instances: " + std::to_string(degrees_checked.load()));
  return result;
}

// Minimal curves (a6 maximal) are never ACM and are Buchsbaum exactly on the
// two stated patterns.
inline SweepResult sweep_minimal_buchsbaum(int max_a) {
  SweepResult result{"minimal-buchsbaum"};
  std::vector<TetraCurve> curves;
  for (const auto& a : detail::all_tuples(max_a)) {
    TetraCurve c(a);
    if (c.a[5] != *std::max_element(c.a.begin(), c.a.end())) continue;
    if (is_minimal(c)) curves.push_back(c);
  }
  detail::run_sweep(result, curves, [](const TetraCurve& c) -> std::string {
    const auto& a = c.a;
    if (is_acm(c)) return c.str() + ": minimal curve classified ACM";
    const bool pattern1 = a[1] == 0 && a[4] == 0 && a[0] == a[5] && a[0] == a[2] + 1 &&
                          a[0] == a[3] + 1;
    const bool pattern2 = a[2] == 0 && a[3] == 0 && a[0] == a[5] && a[0] == a[1] + 1 &&
                          a[0] == a[4] + 1;
    if (is_buchsbaum(c) != (pattern1 || pattern2))
      return c.str() + ": buchsbaum=" + (is_buchsbaum(c) ? "true" : "false") +
             " but pattern match says " + ((pattern1 || pattern2) ? "true" : "false");
    return "";
  });
  return result;
}

// Minimal curves have diameter 2 exactly when they lie in one of the two
// parametric families.
inline SweepResult sweep_minimal_diam_two(int max_a) {
  SweepResult result{"minimal-diam-two"};
  std::vector<TetraCurve> curves;
  for (const auto& a : detail::all_tuples(max_a)) {
    TetraCurve c(a);
    if (c.a[5] != *std::max_element(c.a.begin(), c.a.end())) continue;
    if (is_minimal(c)) curves.push_back(c);
  }
  detail::run_sweep(result, curves, [](const TetraCurve& c) -> std::string {
    const bool in_family = in_diameter_two_family(c);
    const bool two = diameter(c) == 2;
    if (in_family != two)
      return c.str() + ": diameter=" + std::to_string(diameter(c)) +
             " family=" + (in_family ? "true" : "false");
    return "";
  });
  return result;
}

// The two degree-complex routes agree at every multidegree of the scan box,
// for every tuple with entries <= max_a.
inline SweepResult sweep_localization(int max_a) {
  SweepResult result{"localization"};
  const std::vector<std::array<int, 6>> tuples = detail::all_tuples(max_a);
  detail::run_sweep(result, tuples, [](const std::array<int, 6>& a) -> std::string {
    MonomialIdeal ideal = tetra_ideal(a);
    LocalizationTable table(ideal);
    std::string failure;
    for_each_scan_multidegree(ideal, [&](const Exponent& alpha) {
      if (!failure.empty()) return;
      SimplicialComplex direct = degree_complex(ideal, alpha);
      SimplicialComplex via = degree_complex_via_localization(table, alpha);
      if (direct != via)
        failure = TetraCurve(a).str() + " alpha=" + to_string(alpha) + ": direct " +
                  direct.str() + " vs localization " + via.str();
    });
    return failure;
  });
  return result;
}

// Difference report between the definitional Buchsbaum test (k <= 1) and its
// threshold form. Informational: disagreements become notes, never failures.
inline SweepResult report_buchsbaum_threshold_form(int max_a) {
  SweepResult result{"buchsbaum-threshold-form"};
  long long disagreements = 0;
  std::string first;
  for (const TetraCurve& c : detail::normalized_classes(max_a)) {
    ++result.checked;
    if (is_buchsbaum(c) != is_buchsbaum_threshold_form(c)) {
      ++disagreements;
      if (first.empty())
        first = c.str() + ": definitional=" + (is_buchsbaum(c) ? "true" : "false") +
                " threshold-form=" + (is_buchsbaum_threshold_form(c) ? "true" : "false");
    }
  }
  result.notes.push_back("threshold-form disagreements: " + std::to_string(disagreements) +
                         (first.empty() ? "" : " (first: " + first + ")"));
  return result;
}

}  // namespace tetra
