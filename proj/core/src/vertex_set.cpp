#include "gemcolor/vertex_set.hpp"

#include <string>

#include "gemcolor/errors.hpp"

namespace gemcolor {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0 || universe > kMaxVertices) {
    throw MalformedInput("vertex set universe " + std::to_string(universe) +
                         " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  return range(universe, 0, universe);
}

VertexSet VertexSet::range(int universe, Vertex lo, Vertex hi) {
  VertexSet s(universe);
  for (Vertex v = lo; v < hi; ++v) s.insert(v);
  return s;
}

void VertexSet::check_member(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw MalformedInput("vertex " + std::to_string(v) +
                         " out of range for universe " +
                         std::to_string(universe_));
  }
}

void VertexSet::insert(Vertex v) {
  check_member(v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_member(v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

int VertexSet::size() const {
  int count = 0;
  for (int i = 0; i < word_count(); ++i) count += std::popcount(words_[i]);
  return count;
}

bool VertexSet::empty() const {
  for (int i = 0; i < word_count(); ++i) {
    if (words_[i] != 0) return false;
  }
  return true;
}

Vertex VertexSet::first() const {
  for (int i = 0; i < word_count(); ++i) {
    if (words_[i] != 0) return i * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  const Vertex start = v + 1;
  if (start >= universe_) return -1;
  int i = start / kWordBits;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (w != 0) return i * kWordBits + std::countr_zero(w);
    if (++i >= word_count()) return -1;
    w = words_[i];
  }
}

Vertex VertexSet::last() const {
  for (int i = word_count() - 1; i >= 0; --i) {
    if (words_[i] != 0) {
      return i * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i]));
    }
  }
  return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (int i = 0; i < word_count(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (int i = 0; i < word_count(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (int i = 0; i < word_count(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (int i = 0; i < word_count(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (int i = 0; i < word_count(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

}  // namespace gemcolor
