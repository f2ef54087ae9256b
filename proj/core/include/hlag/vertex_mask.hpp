#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hlag {

/// Dynamic bitset indexed directly by vertex label (bit 0 unused).
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(int max_vertex) : words_(static_cast<std::size_t>(max_vertex) / 64 + 1, 0) {}

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool intersects(const VertexMask& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool subset_of(const VertexMask& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  VertexMask& operator&=(const VertexMask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  VertexMask& operator|=(const VertexMask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
  friend bool operator==(const VertexMask&, const VertexMask&) = default;
  friend auto operator<=>(const VertexMask&, const VertexMask&) = default;

  /// Calls `f(v)` for every set vertex in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace hlag
