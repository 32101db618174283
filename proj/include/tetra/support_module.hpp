#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tetra/curve.hpp"
#include "tetra/exponent.hpp"
#include "tetra/linear_system.hpp"

namespace tetra {

// The finite set of multidegrees carrying a nonzero graded piece of the first
// local cohomology module, together with the grading. Points are lattice
// points y >= 0 with y1+y3 >= a2, y1+y4 >= a3, y2+y3 >= a4, y2+y4 >= a5,
// y1+y2 < a1 and y3+y4 < a6.
class SupportSet {
 public:
  SupportSet(TetraCurve curve, std::vector<Exponent> points)
      : curve_(std::move(curve)), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    for (const Exponent& p : points_) by_degree_[degree(p)].push_back(p);
  }

  const TetraCurve& curve() const { return curve_; }
  const std::vector<Exponent>& points() const { return points_; }
  const std::map<int, std::vector<Exponent>>& by_degree() const { return by_degree_; }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  bool contains(const Exponent& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

 private:
  TetraCurve curve_;
  std::vector<Exponent> points_;
  std::map<int, std::vector<Exponent>> by_degree_;
};

// Enumerates the support set over the finite box y1+y2 <= a1-1, y3+y4 <= a6-1.
inline SupportSet enumerate_support(const TetraCurve& c) {
  detail::require_normalized(c, "enumerate_support");
  const auto& a = c.a;
  std::vector<Exponent> points;
  for (int y1 = 0; y1 <= a[0] - 1; ++y1)
    for (int y2 = 0; y2 <= a[0] - 1 - y1; ++y2)
      for (int y3 = 0; y3 <= a[5] - 1; ++y3)
        for (int y4 = 0; y4 <= a[5] - 1 - y3; ++y4) {
          if (y1 + y3 < a[1]) continue;
          if (y1 + y4 < a[2]) continue;
          if (y2 + y3 < a[3]) continue;
          if (y2 + y4 < a[4]) continue;
          points.push_back({y1, y2, y3, y4});
        }
  return SupportSet(c, std::move(points));
}

// Dimension of each nonzero graded piece: h(d) = #(points of degree d).
inline std::map<int, int> hilbert_function(const SupportSet& s) {
  std::map<int, int> h;
  for (const auto& [d, pts] : s.by_degree()) h[d] = static_cast<int>(pts.size());
  return h;
}

struct DegreeRange {
  std::optional<int> beg;
  std::optional<int> end;
  int diam = 0;
};

inline DegreeRange degree_range(const SupportSet& s) {
  DegreeRange r;
  if (s.empty()) return r;
  r.beg = s.by_degree().begin()->first;
  r.end = s.by_degree().rbegin()->first;
  r.diam = *r.end - *r.beg + 1;
  return r;
}

// Multiplication by the monomial x^beta: lands on alpha+beta when that stays
// in the set, and on zero (nullopt) otherwise.
inline std::optional<Exponent> module_action(const SupportSet& s, const Exponent& alpha,
                                             const Exponent& beta) {
  if (!s.contains(alpha)) throw std::invalid_argument("module_action: point not in the set");
  if (beta.size() != alpha.size() || !all_nonnegative(beta))
    throw std::invalid_argument("module_action: multiplier must be a nonnegative exponent");
  Exponent sum = componentwise_sum(alpha, beta);
  if (s.contains(sum)) return sum;
  return std::nullopt;
}

// Smallest k >= 0 such that every monomial of degree k annihilates the
// module: one more than the largest degree jump realized inside the set by a
// nonnegative displacement, and 0 on the zero module.
inline int k_invariant(const SupportSet& s) {
  if (s.empty()) return 0;
  int furthest = 0;
  for (const Exponent& from : s.points())
    for (const Exponent& to : s.points()) {
      if (!divides(from, to)) continue;  // componentwise from <= to
      furthest = std::max(furthest, degree(to) - degree(from));
    }
  return furthest + 1;
}

// The degree-d feasibility system: integer solutions are exactly the degree-d
// points of the support set.
inline LinearSystem support_system(const TetraCurve& c, int d) {
  const auto& a = c.a;
  LinearSystem sys;
  sys.variables = {"y1", "y2", "y3", "y4"};
  auto row = [&](int c1, int c2, int c3, int c4, Relation rel, int rhs) {
    LinearConstraint con;
    con.set_coeff("y1", c1);
    con.set_coeff("y2", c2);
    con.set_coeff("y3", c3);
    con.set_coeff("y4", c4);
    con.rel = rel;
    con.rhs = rhs;
    sys.constraints.push_back(std::move(con));
  };
  row(1, 0, 1, 0, Relation::GreaterEqual, a[1]);
  row(1, 0, 0, 1, Relation::GreaterEqual, a[2]);
  row(0, 1, 1, 0, Relation::GreaterEqual, a[3]);
  row(0, 1, 0, 1, Relation::GreaterEqual, a[4]);
  row(1, 1, 0, 0, Relation::LessEqual, a[0] - 1);
  row(0, 0, 1, 1, Relation::LessEqual, a[5] - 1);
  row(1, 1, 1, 1, Relation::Equal, d);
  row(1, 0, 0, 0, Relation::GreaterEqual, 0);
  row(0, 1, 0, 0, Relation::GreaterEqual, 0);
  row(0, 0, 1, 0, Relation::GreaterEqual, 0);
  row(0, 0, 0, 1, Relation::GreaterEqual, 0);
  return sys;
}

}  // namespace tetra
