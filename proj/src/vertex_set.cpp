#include "dtile/vertex_set.hpp"

#include <algorithm>

namespace dtile {

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) set(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) set(v);
}

VertexSet VertexSet::full(int universe) { return range(universe, 0, universe); }

VertexSet VertexSet::range(int universe, int lo, int hi) {
  VertexSet s(universe);
  for (int v = std::max(lo, 0); v < std::min(hi, universe); ++v) s.set(v);
  return s;
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::count() const {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

int VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * kWordBits) + std::countr_zero(words_[w]);
  return -1;
}

int VertexSet::next(int after) const {
  int start = after + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start) / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits) return static_cast<int>(w * kWordBits) + std::countr_zero(bits);
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

void VertexSet::assign_and(const VertexSet& a, const VertexSet& b) {
  universe_ = a.universe_;
  words_.resize(a.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
}

int VertexSet::count_and(const VertexSet& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  // Walk both member sequences in step; the first position where they differ decides.
  int x = a.first();
  int y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9E3779B97F4A7C15ULL;
  for (Word w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dtile
