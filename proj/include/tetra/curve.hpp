#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/exponent.hpp"
#include "tetra/monomial_ideal.hpp"
#include "tetra/rational.hpp"

namespace tetra {

// A tetrahedral curve C(a1,...,a6): six nonnegative edge exponents, not all
// zero, in the edge order {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
struct TetraCurve {
  std::array<int, 6> a{};

  explicit TetraCurve(const std::array<int, 6>& exps) : a(exps) { validate(); }
  TetraCurve(int a1, int a2, int a3, int a4, int a5, int a6)
      : a{a1, a2, a3, a4, a5, a6} {
    validate();
  }

  friend bool operator==(const TetraCurve& x, const TetraCurve& y) { return x.a == y.a; }
  friend bool operator!=(const TetraCurve& x, const TetraCurve& y) { return !(x == y); }
  friend bool operator<(const TetraCurve& x, const TetraCurve& y) { return x.a < y.a; }

  std::string str() const {
    std::string s = "(";
    for (int k = 0; k < 6; ++k) {
      if (k) s += ",";
      s += std::to_string(a[k]);
    }
    return s + ")";
  }

 private:
  void validate() const {
    bool all_zero = true;
    for (int v : a) {
      if (v < 0) throw std::invalid_argument("TetraCurve: negative exponent");
      if (v != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("TetraCurve: exponents must not all be zero");
  }
};

// Vertex permutation of {1,2,3,4}; perm[v-1] is the image of v.
using VertexPermutation = std::array<int, 4>;

inline constexpr VertexPermutation kIdentityPermutation = {1, 2, 3, 4};

inline int edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  for (int k = 0; k < 6; ++k)
    if (kTetraEdges[k].first == u && kTetraEdges[k].second == v) return k;
  throw std::invalid_argument("edge_index: not an edge of {1,2,3,4}");
}

// Induced action on edge exponents: the exponent of edge {u,v} moves to edge
// {perm(u), perm(v)}.
inline std::array<int, 6> permute_edges(const std::array<int, 6>& a,
                                        const VertexPermutation& perm) {
  std::array<int, 6> out{};
  for (int k = 0; k < 6; ++k) {
    int u = perm[kTetraEdges[k].first - 1];
    int v = perm[kTetraEdges[k].second - 1];
    out[edge_index(u, v)] = a[k];
  }
  return out;
}

// Coordinate action on lattice points: coordinate i moves to coordinate
// perm(i).
inline Exponent permute_coordinates(const Exponent& e, const VertexPermutation& perm) {
  if (e.size() != 4) throw std::invalid_argument("permute_coordinates: need length 4");
  Exponent out(4);
  for (int i = 0; i < 4; ++i) out[perm[i] - 1] = e[i];
  return out;
}

// The 24 vertex permutations in search order: identity first, then the
// transpositions (2 3) and (2 4), then the rest lexicographically. One of the
// first three always brings the dominant opposite-edge pair to (a1, a6).
inline const std::vector<VertexPermutation>& vertex_permutations() {
  static const std::vector<VertexPermutation> perms = [] {
    std::vector<VertexPermutation> out = {
        {1, 2, 3, 4},  // identity
        {1, 3, 2, 4},  // (2 3)
        {1, 4, 3, 2},  // (2 4)
    };
    VertexPermutation p = {1, 2, 3, 4};
    do {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// The dominance condition on opposite-edge pair sums: a1 + a6 is the largest
// of a1+a6, a2+a5, a3+a4.
inline bool is_normalized(const TetraCurve& c) {
  return c.a[0] + c.a[5] >= std::max(c.a[1] + c.a[4], c.a[2] + c.a[3]);
}

namespace detail {

inline void require_normalized(const TetraCurve& c, const char* where) {
  if (!is_normalized(c))
    throw std::invalid_argument(std::string(where) + ": curve " + c.str() +
                                " not normalized (a1+a6 must dominate)");
}

}  // namespace detail

struct NormalizedCurve {
  TetraCurve curve;
  VertexPermutation permutation;
};

// Applies the first vertex permutation (in search order) whose induced edge
// action makes the curve normalized.
inline NormalizedCurve normalize(const TetraCurve& c) {
  for (const VertexPermutation& perm : vertex_permutations()) {
    TetraCurve image(permute_edges(c.a, perm));
    if (is_normalized(image)) return {image, perm};
  }
  throw std::logic_error("normalize: unreachable");  // some pair sum is always maximal
}

// The six-term maximum bounding the degrees of nonzero graded pieces from
// below.
inline int script_a(const TetraCurve& c) {
  const auto& a = c.a;
  return std::max({a[1] + a[4], a[2] + a[3], a[1] + a[3] - a[5] + 1, a[2] + a[4] - a[5] + 1,
                   a[1] + a[2] - a[0] + 1, a[3] + a[4] - a[0] + 1});
}

// Largest possible degree of a nonzero graded piece.
inline int support_end(const TetraCurve& c) { return c.a[0] + c.a[5] - 2; }

// A closed interval of integers with an explicit empty state.
struct DegreeInterval {
  static DegreeInterval empty() { return DegreeInterval(); }
  static DegreeInterval closed(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("DegreeInterval: lo > hi");
    DegreeInterval r;
    r.empty_ = false;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  bool is_empty() const { return empty_; }
  int lo() const { return require(), lo_; }
  int hi() const { return require(), hi_; }
  int length() const { return empty_ ? 0 : hi_ - lo_ + 1; }
  bool contains(int d) const { return !empty_ && lo_ <= d && d <= hi_; }

  friend bool operator==(const DegreeInterval& a, const DegreeInterval& b) {
    if (a.empty_ != b.empty_) return false;
    return a.empty_ || (a.lo_ == b.lo_ && a.hi_ == b.hi_);
  }

 private:
  void require() const {
    if (empty_) throw std::logic_error("DegreeInterval: empty");
  }
  bool empty_ = true;
  int lo_ = 0;
  int hi_ = 0;
};

// Whether rounding closes the integer window for the first coordinate:
// floor((d+a1-a4-a5-1)/2) < ceil((a2+a3-a6+1)/2). Only defined on the degree
// range a1+a6-2 >= d >= max(a2+a5, a3+a4). Equivalent to: a2+a3-a6 even and
// a1+a6-2 = a2+a5 = a3+a4 (swept as a test, not assumed).
inline bool parity_obstruction(const TetraCurve& c, int d) {
  const auto& a = c.a;
  if (!(a[0] + a[5] - 2 >= d && d >= std::max(a[1] + a[4], a[2] + a[3])))
    throw std::invalid_argument("parity_obstruction: degree outside hypothesis range");
  Rational left(d + a[0] - a[3] - a[4] - 1, 2);
  Rational right(a[1] + a[2] - a[5] + 1, 2);
  return left.floor() < right.ceil();
}

// The set of degrees d at which the degree-d feasibility system has an
// integer solution, always a contiguous interval (possibly empty).
inline DegreeInterval feasible_degrees(const TetraCurve& c) {
  detail::require_normalized(c, "feasible_degrees");
  const auto& a = c.a;
  if (a[0] < 1 || a[5] < 1) return DegreeInterval::empty();
  const int bound = script_a(c);
  const int end = support_end(c);
  if (end > bound) return DegreeInterval::closed(bound, end);
  if (end < bound) return DegreeInterval::empty();
  // single-point window: end == bound
  if (end > std::min(a[1] + a[4], a[2] + a[3])) return DegreeInterval::closed(bound, bound);
  if (end == a[1] + a[4] && end == a[2] + a[3] && (a[1] + a[2] - a[5]) % 2 != 0)
    return DegreeInterval::closed(bound, bound);
  return DegreeInterval::empty();
}

// Arithmetically Cohen-Macaulay, in closed form.
inline bool is_acm(const TetraCurve& c) {
  detail::require_normalized(c, "is_acm");
  const auto& a = c.a;
  if (a[0] == 0 || a[5] == 0) return true;
  const int bound = script_a(c);
  const int end = support_end(c);
  if (end < bound) return true;
  return end == a[1] + a[4] && a[1] + a[4] == a[2] + a[3] && bound == a[1] + a[4] &&
         (a[1] + a[2] - a[5]) % 2 == 0;
}

// Francisco's ACM characterization, implemented independently of is_acm.
inline bool is_acm_francisco(const TetraCurve& c) {
  detail::require_normalized(c, "is_acm_francisco");
  const auto& a = c.a;
  if (a[0] == 0 || a[5] == 0) return true;  // (a)
  const int eps = a[0] + a[5] - std::max(a[1] + a[4], a[2] + a[3]);
  if (eps == 0 || eps == 1) return true;  // (b)
  const bool c1 = 2 * a[0] < a[1] + a[2] - a[5] + 3;
  const bool c2 = 2 * a[0] < a[3] + a[4] - a[5] + 3;
  const bool c3 = 2 * a[5] < a[1] + a[3] - a[0] + 3;
  const bool c4 = 2 * a[5] < a[2] + a[4] - a[0] + 3;
  if (c1 || c2 || c3 || c4) return true;  // (c)
  return a[0] + a[5] == a[1] + a[4] + 2 && a[0] + a[5] == a[2] + a[3] + 2 &&
         (a[0] + a[2] + a[4]) % 2 == 0;  // (d)
}

// Number of degrees carrying a nonzero graded piece: 0 when ACM, else
// a1 + a6 - script_a - 1.
inline int diameter(const TetraCurve& c) {
  detail::require_normalized(c, "diameter");
  if (is_acm(c)) return 0;
  return c.a[0] + c.a[5] - script_a(c) - 1;
}

// Arithmetically Buchsbaum: the k-invariant is at most 1, i.e. diameter <= 1.
inline bool is_buchsbaum(const TetraCurve& c) {
  detail::require_normalized(c, "is_buchsbaum");
  return diameter(c) <= 1;
}

// The threshold form of the Buchsbaum test: (a1 = 0 or a2 = 0) or
// a1+a6-2 <= script_a. Disagrees with the k <= 1 definition on some curves
// (for example (5,0,0,0,0,5)); `verify` reports, and never adopts, the
// difference.
inline bool is_buchsbaum_threshold_form(const TetraCurve& c) {
  detail::require_normalized(c, "is_buchsbaum_threshold_form");
  if (c.a[0] == 0 || c.a[1] == 0) return true;
  return support_end(c) <= script_a(c);
}

// Migliore-Nagel minimality, stated under the convention that a6 is the
// largest exponent.
inline bool is_minimal(const TetraCurve& c) {
  const auto& a = c.a;
  if (a[5] != *std::max_element(a.begin(), a.end()))
    throw std::invalid_argument("is_minimal: a6 must be the maximum exponent");
  return a[0] > std::max(a[1] + a[3], a[2] + a[4]) && a[5] > std::max(a[1] + a[2], a[3] + a[4]);
}

// Whether the curve matches, up to a vertex permutation, one of the two
// parametric families (k,k-1,0,0,k-1,k+1), k >= 1, or (k,k-2,0,0,k-1,k),
// k >= 2, that carry diameter 2 among minimal curves.
inline bool in_diameter_two_family(const TetraCurve& c) {
  const auto& a = c.a;
  if (a[5] != *std::max_element(a.begin(), a.end()))
    throw std::invalid_argument("in_diameter_two_family: a6 must be the maximum exponent");
  if (!is_minimal(c)) throw std::invalid_argument("in_diameter_two_family: curve not minimal");
  for (const VertexPermutation& perm : vertex_permutations()) {
    std::array<int, 6> b = permute_edges(a, perm);
    int k = b[0];
    if (b[2] == 0 && b[3] == 0) {
      if (k >= 1 && b[1] == k - 1 && b[4] == k - 1 && b[5] == k + 1) return true;
      if (k >= 2 && b[1] == k - 2 && b[4] == k - 1 && b[5] == k) return true;
    }
  }
  return false;
}

// Full closed-form classification of a curve (normalizing first).
struct Classification {
  TetraCurve input;
  VertexPermutation permutation;
  TetraCurve normalized;
  int script_a = 0;
  bool acm = false;
  bool buchsbaum = false;
  int diam = 0;
  std::optional<int> beg;
  std::optional<int> end;
  int k = 0;
  DegreeInterval feasible;

  Classification(const TetraCurve& in, const NormalizedCurve& norm)
      : input(in), permutation(norm.permutation), normalized(norm.curve) {}
};

inline Classification classify(const TetraCurve& c) {
  Classification r(c, normalize(c));
  r.script_a = script_a(r.normalized);
  r.acm = is_acm(r.normalized);
  r.buchsbaum = is_buchsbaum(r.normalized);
  r.diam = diameter(r.normalized);
  r.feasible = feasible_degrees(r.normalized);
  if (!r.acm) {
    r.beg = r.script_a;
    r.end = support_end(r.normalized);
  }
  r.k = r.diam;
  return r;
}

}  // namespace tetra
