#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace kappa1 {

using Vertex = std::uint32_t;

// Fixed-universe bitset over vertex ids. Word-level algebra makes the
// set intersections in the solvers O(vertex_count / 64).
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { for (auto& w : words_) w = 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // set difference: remove o's members
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
  friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
  friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>((i << 6) + std::countr_zero(words_[i]));
    return -1;
  }
  // Smallest member strictly greater than `i`, or -1.
  int next(std::size_t i) const {
    std::size_t wi = (i + 1) >> 6;
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << ((i + 1) & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  // Visit members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>((i << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <typename Iterable>
  static Bitset of(std::size_t universe, const Iterable& ids) {
    Bitset b(universe);
    for (auto id : ids) b.set(static_cast<std::size_t>(id));
    return b;
  }

  bool operator==(const Bitset& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  // Lexicographic order on the ascending member sequences; a proper prefix
  // sorts first. Used for deterministic tie-breaking among equal-size cuts.
  static int compare_lex(const Bitset& a, const Bitset& b) {
    int x = a.first(), y = b.first();
    while (x != -1 && y != -1) {
      if (x != y) return x < y ? -1 : 1;
      x = a.next(static_cast<std::size_t>(x));
      y = b.next(static_cast<std::size_t>(y));
    }
    if (x == y) return 0;
    return x == -1 ? -1 : 1;
  }

private:
  void trim() {
    if (!words_.empty() && (universe_ & 63))
      words_.back() &= (~std::uint64_t{0}) >> (64 - (universe_ & 63));
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;

}  // namespace kappa1
