#pragma once

#include <bit>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetra {

// A subset of the 1-based vertex set {1,...,n}, n small, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet from_bits(unsigned bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static VertexSet full(int n) {
    if (n < 0 || n > 31) throw std::invalid_argument("VertexSet: bad size");
    return from_bits((1u << n) - 1u);
  }

  unsigned bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int v) const { return (bits_ >> check(v)) & 1u; }
  void insert(int v) { bits_ |= 1u << check(v); }
  void erase(int v) { bits_ &= ~(1u << check(v)); }

  bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

  VertexSet united(const VertexSet& o) const { return from_bits(bits_ | o.bits_); }
  VertexSet intersected(const VertexSet& o) const { return from_bits(bits_ & o.bits_); }
  VertexSet without(const VertexSet& o) const { return from_bits(bits_ & ~o.bits_); }
  VertexSet complement_in(int n) const { return full(n).without(*this); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int v = 1; v <= 32; ++v)
      if (bits_ & (1u << (v - 1))) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.bits_ != b.bits_; }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits_ < b.bits_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : elements()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  static int check(int v) {
    if (v < 1 || v > 32) throw std::invalid_argument("VertexSet: vertex out of range");
    return v - 1;
  }

  unsigned bits_ = 0;
};

}  // namespace tetra
