#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tetra/exponent.hpp"
#include "tetra/monomial_ideal.hpp"
#include "tetra/simplicial_complex.hpp"

namespace tetra {

// Indices whose coordinate is negative.
inline VertexSet negative_support(const Exponent& alpha) {
  VertexSet g;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] < 0) g.insert(static_cast<int>(i) + 1);
  return g;
}

// Stanley-Reisner complex of the radical: F is a face iff the squarefree
// monomial on F, raised to a power large enough to decide radical membership,
// lies outside the ideal.
inline SimplicialComplex radical_complex(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("radical_complex: unit ideal");
  const int n = ideal.num_vars();
  int power = 0;
  for (int r : ideal.max_exponents()) power += r;
  std::vector<VertexSet> faces;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    VertexSet f = VertexSet::from_bits(bits);
    Exponent e(n, 0);
    for (int v : f.elements()) e[v - 1] = power;
    if (!ideal.contains(e)) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(faces);
}

// The degree complex of the ideal at a multidegree alpha: F avoids the
// negative support G, and for every generator some coordinate outside F and G
// strictly exceeds alpha there.
inline SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Exponent& alpha) {
  const int n = ideal.num_vars();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("degree_complex: multidegree length mismatch");
  VertexSet g = negative_support(alpha);

  // per generator, the set of coordinates outside G exceeding alpha
  std::vector<VertexSet> witnesses;
  witnesses.reserve(ideal.generators().size());
  for (const Exponent& beta : ideal.generators()) {
    VertexSet w;
    for (int v = 1; v <= n; ++v)
      if (!g.contains(v) && beta[v - 1] > alpha[v - 1]) w.insert(v);
    witnesses.push_back(w);
  }

  std::vector<VertexSet> faces;
  const unsigned allowed = g.complement_in(n).bits();
  unsigned s = allowed;
  while (true) {
    VertexSet f = VertexSet::from_bits(s);
    bool face = true;
    for (const VertexSet& w : witnesses)
      if (w.subset_of(f)) {  // no witness coordinate left outside F
        face = false;
        break;
      }
    if (face) faces.push_back(f);
    if (s == 0) break;
    s = (s - 1) & allowed;
  }
  return SimplicialComplex::from_faces(faces);
}

// All localizations of an ideal, indexed by the inverted vertex set. Lets the
// localization route below be evaluated many times without recomputing them.
class LocalizationTable {
 public:
  explicit LocalizationTable(const MonomialIdeal& ideal) : num_vars_(ideal.num_vars()) {
    by_mask_.reserve(1u << num_vars_);
    for (unsigned bits = 0; bits < (1u << num_vars_); ++bits)
      by_mask_.push_back(localize(ideal, VertexSet::from_bits(bits)));
  }

  int num_vars() const { return num_vars_; }
  const MonomialIdeal& at(const VertexSet& inverted) const { return by_mask_[inverted.bits()]; }

 private:
  int num_vars_;
  std::vector<MonomialIdeal> by_mask_;
};

// Same complex as degree_complex, computed through localization and
// membership instead of the generator quantifier. Exists as an independent
// cross-check of the direct route.
inline SimplicialComplex degree_complex_via_localization(const LocalizationTable& table,
                                                         const Exponent& alpha) {
  const int n = table.num_vars();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("degree_complex_via_localization: length mismatch");
  VertexSet g = negative_support(alpha);
  std::vector<VertexSet> faces;
  const unsigned allowed = g.complement_in(n).bits();
  unsigned s = allowed;
  while (true) {
    VertexSet f = VertexSet::from_bits(s);
    VertexSet inverted = f.united(g);
    Exponent e(n, 0);
    for (int v = 1; v <= n; ++v)
      if (!inverted.contains(v)) e[v - 1] = alpha[v - 1];
    if (!table.at(inverted).contains(e)) faces.push_back(f);
    if (s == 0) break;
    s = (s - 1) & allowed;
  }
  return SimplicialComplex::from_faces(faces);
}

inline SimplicialComplex degree_complex_via_localization(const MonomialIdeal& ideal,
                                                         const Exponent& alpha) {
  return degree_complex_via_localization(LocalizationTable(ideal), alpha);
}

// Graded piece of H^i_m(R/I) at a multidegree: zero unless the negative
// support is a face of the radical complex and alpha_j <= rho_j - 1 for every
// j; otherwise the dimension of reduced homology of the degree complex in
// degree i - |G| - 1.
inline int local_cohomology_dim(const MonomialIdeal& ideal, int i, const Exponent& alpha) {
  if (static_cast<int>(alpha.size()) != ideal.num_vars())
    throw std::invalid_argument("local_cohomology_dim: length mismatch");
  if (ideal.is_unit()) return 0;  // R/I = 0
  Exponent rho = ideal.max_exponents();
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (alpha[j] > rho[j] - 1) return 0;
  VertexSet g = negative_support(alpha);
  if (!radical_complex(ideal).has_face(g)) return 0;
  return reduced_homology_dim(degree_complex(ideal, alpha), i - g.size() - 1);
}

// The coordinate gate above is checked for every j, including those where
// alpha_j < 0. The relaxed variant exempts negative coordinates. The two can
// only differ when some alpha_j < 0 exceeds rho_j - 1, which needs rho_j < 0;
// this reports the comparison so sweeps can confirm it never fires.
inline bool scan_gate_variant_differs(const MonomialIdeal& ideal, const Exponent& alpha) {
  Exponent rho = ideal.max_exponents();
  bool full = true, relaxed = true;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] > rho[j] - 1) {
      full = false;
      if (alpha[j] >= 0) relaxed = false;
    }
  }
  return full != relaxed;
}

// Nonzero graded pieces of H^1_m(R/I), keyed by multidegree, with a derived
// index by total degree.
struct GradedPieceTable {
  std::map<Exponent, int> entries;
  std::map<int, std::vector<Exponent>> by_degree;

  bool empty() const { return entries.empty(); }

  std::vector<Exponent> multidegrees() const {
    std::vector<Exponent> out;
    out.reserve(entries.size());
    for (const auto& [alpha, dim] : entries) out.push_back(alpha);
    return out;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    out.reserve(by_degree.size());
    for (const auto& [d, list] : by_degree) out.push_back(d);
    return out;
  }
};

// Applies fn to every multidegree of the scan box: coordinate j runs over
// [-1, rho_j - 1]. A single representative -1 covers all negative values,
// since both the degree complex and the gate depend on a negative coordinate
// only through its sign.
template <class Fn>
inline void for_each_scan_multidegree(const MonomialIdeal& ideal, Fn&& fn) {
  const int n = ideal.num_vars();
  Exponent rho = ideal.max_exponents();
  Exponent alpha(n, -1);
  while (true) {
    fn(static_cast<const Exponent&>(alpha));
    int j = 0;
    while (j < n && alpha[j] == rho[j] - 1) {
      alpha[j] = -1;
      ++j;
    }
    if (j == n) break;
    ++alpha[j];
  }
}

// Scans the box and tabulates every nonzero piece of H^1_m(R/I). For the
// ideals handled here no nonzero piece can sit at a negative multidegree;
// that is asserted, not assumed.
inline GradedPieceTable h1_table(const MonomialIdeal& ideal) {
  GradedPieceTable table;
  for_each_scan_multidegree(ideal, [&](const Exponent& alpha) {
    int dim = local_cohomology_dim(ideal, 1, alpha);
    if (dim == 0) return;
    if (!all_nonnegative(alpha))
      throw std::logic_error("h1_table: nonzero piece at negative multidegree " +
                             to_string(alpha));
    table.entries[alpha] = dim;
    table.by_degree[degree(alpha)].push_back(alpha);
  });
  return table;
}

}  // namespace tetra
