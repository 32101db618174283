#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tetra/exponent.hpp"
#include "tetra/vertex_set.hpp"

namespace tetra {

namespace detail {

// Deduplicate and drop every exponent that is divisible by another one.
inline std::vector<Exponent> minimal_generators(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> keep;
  for (const Exponent& g : gens) {
    bool dominated = false;
    for (const Exponent& h : gens) {
      if (&h != &g && divides(h, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(g);
  }
  return keep;
}

}  // namespace detail

// A monomial ideal given by its minimal generating set. Generators are sorted
// lexicographically and pairwise incomparable under componentwise <=. The unit
// ideal is the single zero exponent; the zero ideal is not representable.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Exponent> generators) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("MonomialIdeal: need at least one variable");
    if (generators.empty())
      throw std::invalid_argument("MonomialIdeal: empty generating set (zero ideal unsupported)");
    for (const Exponent& g : generators) {
      if (static_cast<int>(g.size()) != num_vars)
        throw std::invalid_argument("MonomialIdeal: generator length mismatch");
      if (!all_nonnegative(g))
        throw std::invalid_argument("MonomialIdeal: negative generator exponent");
    }
    gens_ = detail::minimal_generators(std::move(generators));
  }

  static MonomialIdeal unit(int num_vars) {
    return MonomialIdeal(num_vars, {Exponent(num_vars, 0)});
  }

  int num_vars() const { return num_vars_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  bool is_unit() const { return gens_.size() == 1 && degree(gens_[0]) == 0; }

  // x^e lies in the ideal iff some generator divides it.
  bool contains(const Exponent& e) const {
    if (static_cast<int>(e.size()) != num_vars_)
      throw std::invalid_argument("contains: exponent length mismatch");
    if (!all_nonnegative(e)) throw std::invalid_argument("contains: negative exponent");
    for (const Exponent& g : gens_)
      if (divides(g, e)) return true;
    return false;
  }

  // rho: componentwise maximum over the minimal generators.
  Exponent max_exponents() const {
    Exponent rho(num_vars_, 0);
    for (const Exponent& g : gens_) rho = componentwise_max(rho, g);
    return rho;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int num_vars_;
  std::vector<Exponent> gens_;
};

// Intersection via pairwise componentwise maxima of generators, minimalized.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("intersect: variable count mismatch");
  std::vector<Exponent> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Exponent& g : a.generators())
    for (const Exponent& h : b.generators()) gens.push_back(componentwise_max(g, h));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

// (x_i, x_j)^a, generated by { x_i^t x_j^(a-t) : 0 <= t <= a }. a = 0 gives the
// unit ideal.
inline MonomialIdeal edge_power_ideal(int i, int j, int a, int num_vars = 4) {
  if (i < 1 || j < 1 || i > num_vars || j > num_vars || i >= j)
    throw std::invalid_argument("edge_power_ideal: need 1 <= i < j <= n");
  if (a < 0) throw std::invalid_argument("edge_power_ideal: negative power");
  std::vector<Exponent> gens;
  for (int t = 0; t <= a; ++t) {
    Exponent g(num_vars, 0);
    g[i - 1] = t;
    g[j - 1] = a - t;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

// Vertex pairs indexing the exponents a1..a6 of a tetrahedral curve.
inline constexpr std::array<std::pair<int, int>, 6> kTetraEdges = {
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// Intersection of the six edge-power ideals of C(a1,...,a6).
inline MonomialIdeal tetra_ideal(const std::array<int, 6>& a) {
  if (std::all_of(a.begin(), a.end(), [](int v) { return v == 0; }))
    throw std::invalid_argument("tetra_ideal: exponents must not all be zero");
  MonomialIdeal result = MonomialIdeal::unit(4);
  for (std::size_t k = 0; k < 6; ++k) {
    if (a[k] < 0) throw std::invalid_argument("tetra_ideal: negative exponent");
    result = intersect(result, edge_power_ideal(kTetraEdges[k].first, kTetraEdges[k].second, a[k]));
  }
  return result;
}

// The ideal generated in the localization inverting the given variables:
// generators with the inverted coordinates zeroed out, minimalized.
inline MonomialIdeal localize(const MonomialIdeal& m, const VertexSet& inverted) {
  for (int v : inverted.elements())
    if (v > m.num_vars()) throw std::invalid_argument("localize: vertex out of range");
  std::vector<Exponent> gens;
  gens.reserve(m.generators().size());
  for (Exponent g : m.generators()) {
    for (int v : inverted.elements()) g[v - 1] = 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(m.num_vars(), std::move(gens));
}

}  // namespace tetra
