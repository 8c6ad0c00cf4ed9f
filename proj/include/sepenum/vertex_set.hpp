#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sepenum {

using Vertex = int;

/// A set of vertices drawn from a universe 0..n-1, stored as a bitset.
///
/// Two sets compare by their canonical form: the strictly ascending list of
/// members, ordered lexicographically. All sets taking part in one binary
/// operation must share the same universe size.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) / kWordBits;
    Word w = words_[wi] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  VertexSet complement() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic order of the ascending member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    Vertex d = a.first_difference(b);
    if (d < 0) return false;
    // The lists agree below d. The one holding d is smaller unless the
    // other one has run out of members.
    if (a.contains(d)) return b.next(d) >= 0;
    return a.next(d) < 0;
  }

  /// Smallest member of the symmetric difference, or -1 if equal.
  Vertex first_difference(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word x = words_[i] ^ o.words_[i];
      if (x != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(x));
    }
    return -1;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ULL;
    }
    return h;
  }

  const Word* data() const { return words_.data(); }
  std::size_t word_size() const { return words_.size(); }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() {
    int rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace sepenum
