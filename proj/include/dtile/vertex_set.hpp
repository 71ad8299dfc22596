#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dtile {

/// Dense bit-set over the vertex range [0, universe).
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);
  /// Vertices v with lo <= v < hi.
  static VertexSet range(int universe, int lo, int hi);

  static std::size_t words_for(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(int v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(int v) {
    words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear();

  int count() const;
  bool empty() const;
  bool any() const { return !empty(); }

  /// Smallest member, or -1.
  int first() const;
  /// Smallest member strictly greater than `after`, or -1.
  int next(int after) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// *this = a & b without reallocating.
  void assign_and(const VertexSet& a, const VertexSet& b);
  int count_and(const VertexSet& o) const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Order by the sorted member sequences (lexicographic).
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::vector<int> to_vector() const;
  std::span<const Word> words() const { return words_; }
  std::size_t hash() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * kWordBits) + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace dtile
