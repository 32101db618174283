#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tetra/curve.hpp"
#include "tetra/support_module.hpp"
#include "tetra/takayama.hpp"

namespace tetra {

// Agreement between the closed-form classification and the graded-piece
// oracle, recorded field by field.
struct OracleAgreement {
  bool empty_iff_acm = false;
  bool support_matches = false;
  bool dims_all_one = false;
  bool degrees_match = false;
  bool k_matches = false;

  bool agrees() const {
    return empty_iff_acm && support_matches && dims_all_one && degrees_match && k_matches;
  }
};

struct ClassifyReport {
  Classification cls;
  std::map<int, int> hilbert;
  std::optional<std::vector<Exponent>> s_points;
  std::optional<OracleAgreement> oracle;

  explicit ClassifyReport(Classification c) : cls(std::move(c)) {}
};

inline OracleAgreement check_oracle_agreement(const Classification& cls, const SupportSet& s) {
  OracleAgreement agreement;
  GradedPieceTable table = h1_table(tetra_ideal(cls.normalized.a));
  agreement.empty_iff_acm = table.empty() == cls.acm;
  agreement.support_matches = table.multidegrees() == s.points();
  agreement.dims_all_one = true;
  for (const auto& [alpha, dim] : table.entries)
    if (dim != 1) agreement.dims_all_one = false;
  std::vector<int> expected_degrees;
  if (!cls.feasible.is_empty())
    for (int d = cls.feasible.lo(); d <= cls.feasible.hi(); ++d) expected_degrees.push_back(d);
  agreement.degrees_match = table.degrees() == expected_degrees;
  agreement.k_matches = k_invariant(s) == cls.k;
  return agreement;
}

inline ClassifyReport build_classify_report(const TetraCurve& input, bool with_s_points,
                                            bool with_oracle) {
  ClassifyReport report(classify(input));
  SupportSet s = enumerate_support(report.cls.normalized);
  report.hilbert = hilbert_function(s);
  if (with_s_points) report.s_points = s.points();
  if (with_oracle) report.oracle = check_oracle_agreement(report.cls, s);
  return report;
}

inline nlohmann::json to_json(const ClassifyReport& r) {
  nlohmann::json j;
  j["input"] = r.cls.input.a;
  j["permutation"] = r.cls.permutation;
  j["normalized"] = r.cls.normalized.a;
  j["script_a"] = r.cls.script_a;
  j["acm"] = r.cls.acm;
  j["buchsbaum"] = r.cls.buchsbaum;
  j["diam"] = r.cls.diam;
  if (r.cls.beg)
    j["beg"] = *r.cls.beg;
  else
    j["beg"] = nullptr;
  if (r.cls.end)
    j["end"] = *r.cls.end;
  else
    j["end"] = nullptr;
  j["k"] = r.cls.k;
  nlohmann::json hilbert = nlohmann::json::object();
  for (const auto& [d, dim] : r.hilbert) hilbert[std::to_string(d)] = dim;
  j["hilbert"] = hilbert;
  if (r.s_points) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Exponent& p : *r.s_points) pts.push_back(p);
    j["s_points"] = pts;
  }
  if (r.oracle) {
    j["oracle_agreement"] = {{"empty_iff_acm", r.oracle->empty_iff_acm},
                             {"support_matches", r.oracle->support_matches},
                             {"dims_all_one", r.oracle->dims_all_one},
                             {"degrees_match", r.oracle->degrees_match},
                             {"k_matches", r.oracle->k_matches},
                             {"agrees", r.oracle->agrees()}};
  }
  return j;
}

namespace detail {

inline std::string tuple_str(const std::array<int, 6>& a) {
  std::string s;
  for (int k = 0; k < 6; ++k) {
    if (k) s += ",";
    s += std::to_string(a[k]);
  }
  return s;
}

}  // namespace detail

// One `key: value` line per field, carrying exactly the values of the JSON
// form.
inline std::string to_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << "input: " << detail::tuple_str(r.cls.input.a) << "\n";
  out << "permutation: " << r.cls.permutation[0] << "," << r.cls.permutation[1] << ","
      << r.cls.permutation[2] << "," << r.cls.permutation[3] << "\n";
  out << "normalized: " << detail::tuple_str(r.cls.normalized.a) << "\n";
  out << "script_a: " << r.cls.script_a << "\n";
  out << "acm: " << (r.cls.acm ? "true" : "false") << "\n";
  out << "buchsbaum: " << (r.cls.buchsbaum ? "true" : "false") << "\n";
  out << "diam: " << r.cls.diam << "\n";
  out << "beg: " << (r.cls.beg ? std::to_string(*r.cls.beg) : "none") << "\n";
  out << "end: " << (r.cls.end ? std::to_string(*r.cls.end) : "none") << "\n";
  out << "k: " << r.cls.k << "\n";
  out << "hilbert:";
  for (const auto& [d, dim] : r.hilbert) out << " " << d << ":" << dim;
  out << "\n";
  if (r.s_points) {
    out << "s_points:";
    for (const Exponent& p : *r.s_points) out << " " << to_string(p);
    out << "\n";
  }
  if (r.oracle) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "oracle_agreement: empty_iff_acm=" << flag(r.oracle->empty_iff_acm)
        << " support_matches=" << flag(r.oracle->support_matches)
        << " dims_all_one=" << flag(r.oracle->dims_all_one)
        << " degrees_match=" << flag(r.oracle->degrees_match)
        << " k_matches=" << flag(r.oracle->k_matches) << " agrees=" << flag(r.oracle->agrees())
        << "\n";
  }
  return out.str();
}

}  // namespace tetra
