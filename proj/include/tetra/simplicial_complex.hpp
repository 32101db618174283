#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tetra/rational.hpp"
#include "tetra/vertex_set.hpp"

namespace tetra {

// A simplicial complex on a subset of {1,...,n}, given by its facets
// (inclusion-maximal faces). Two degenerate states are distinct:
//   - no facets at all: the void complex, which has no faces of any dimension;
//   - a single empty facet: the complex whose only face is the empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex() { return SimplicialComplex(); }
  static SimplicialComplex irrelevant_complex() { return from_facets({VertexSet()}); }

  // Keeps the inclusion-maximal sets of the list.
  static SimplicialComplex from_facets(std::vector<VertexSet> facets) {
    SimplicialComplex k;
    for (const VertexSet& f : facets) {
      bool maximal = true;
      for (const VertexSet& g : facets)
        if (f != g && f.subset_of(g)) {
          maximal = false;
          break;
        }
      if (maximal) k.facets_.push_back(f);
    }
    std::sort(k.facets_.begin(), k.facets_.end());
    k.facets_.erase(std::unique(k.facets_.begin(), k.facets_.end()), k.facets_.end());
    return k;
  }

  // Builds the complex whose face set is exactly the given list (which must be
  // closed under taking subsets). An empty list gives the void complex.
  static SimplicialComplex from_faces(const std::vector<VertexSet>& faces) {
    return from_facets(faces);
  }

  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  bool has_face(const VertexSet& f) const {
    for (const VertexSet& g : facets_)
      if (f.subset_of(g)) return true;
    return false;
  }

  // All faces, including the empty face unless the complex is void.
  std::vector<VertexSet> faces() const {
    std::vector<VertexSet> out;
    if (is_void()) return out;
    unsigned support = 0;
    for (const VertexSet& f : facets_) support |= f.bits();
    // iterate over submasks of the vertex support
    unsigned s = support;
    while (true) {
      VertexSet f = VertexSet::from_bits(s);
      if (has_face(f)) out.push_back(f);
      if (s == 0) break;
      s = (s - 1) & support;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

  std::string str() const {
    if (is_void()) return "void";
    std::string s;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (i) s += " ";
      s += facets_[i].str();
    }
    return s;
  }

 private:
  std::vector<VertexSet> facets_;
};

namespace detail {

inline int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Dimension over Q of the q-th reduced simplicial homology, via ranks of the
// boundary matrices of the augmented chain complex. Conventions: the void
// complex has all reduced homology zero; the complex whose only face is the
// empty face has dimension 1 in degree -1 and zero elsewhere.
inline int reduced_homology_dim(const SimplicialComplex& k, int q) {
  if (q < -1) return 0;
  if (k.is_void()) return 0;

  std::map<int, std::vector<VertexSet>> by_dim;  // dim(f) = |f| - 1; empty face at -1
  for (const VertexSet& f : k.faces()) by_dim[f.size() - 1].push_back(f);

  auto basis = [&](int d) -> const std::vector<VertexSet>& {
    static const std::vector<VertexSet> none;
    auto it = by_dim.find(d);
    return it == by_dim.end() ? none : it->second;
  };

  // rank of the boundary map from dimension d to dimension d-1
  auto boundary_rank = [&](int d) -> int {
    const std::vector<VertexSet>& dom = basis(d);
    const std::vector<VertexSet>& cod = basis(d - 1);
    if (dom.empty() || cod.empty()) return 0;
    std::vector<std::vector<Rational>> m(cod.size(), std::vector<Rational>(dom.size(), 0));
    for (std::size_t j = 0; j < dom.size(); ++j) {
      std::vector<int> verts = dom[j].elements();  // ascending
      for (std::size_t t = 0; t < verts.size(); ++t) {
        VertexSet sub = dom[j];
        sub.erase(verts[t]);
        auto it = std::lower_bound(cod.begin(), cod.end(), sub);
        m[it - cod.begin()][j] = (t % 2 == 0) ? 1 : -1;
      }
    }
    return detail::matrix_rank(std::move(m));
  };

  int chain_dim = static_cast<int>(basis(q).size());
  if (chain_dim == 0) return 0;
  return chain_dim - boundary_rank(q) - boundary_rank(q + 1);
}

}  // namespace tetra
