#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetra {

// A lattice point in Z^n: the exponent vector of a monomial, or a multidegree.
// Generator exponents are componentwise nonnegative; multidegrees may carry
// negative coordinates.
using Exponent = std::vector<int>;

inline int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool all_nonnegative(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int c) { return c >= 0; });
}

// Monomial divisibility: x^g divides x^e.
inline bool divides(const Exponent& g, const Exponent& e) {
  if (g.size() != e.size()) throw std::invalid_argument("divides: length mismatch");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > e[i]) return false;
  return true;
}

// Exponent of the least common multiple of two monomials.
inline Exponent componentwise_max(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("componentwise_max: length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent componentwise_sum(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("componentwise_sum: length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace tetra
