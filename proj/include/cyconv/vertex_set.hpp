#pragma once

#include <cstdint>
#include <vector>

namespace cyconv {

// Subset of the dense vertex ids [0, n) of a fixed host graph.
// Backed by 64-bit words; members are always enumerated in ascending id
// order so every algorithm built on top is deterministic.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int v) const {
    return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(int v) { words_[v >> 6] |= uint64_t(1) << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
      if (!contains(v)) s.insert(v);
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(int(i) * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  // Strict weak order so sets can be compared lexicographically by member
  // list; used for deterministic witness reduction.
  bool lex_less(const VertexSet& o) const {
    auto a = to_vector(), b = o.to_vector();
    return a < b;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace cyconv
