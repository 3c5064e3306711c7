#include "desire/thing_set.hpp"

namespace desire {

ThingSet::ThingSet(std::size_t universe_size)
    : size_(universe_size), words_((universe_size + 63) / 64, 0) {
  if (words_.empty()) words_.push_back(0);
}

ThingSet ThingSet::from_mask(std::size_t universe_size, std::uint64_t mask) {
  ThingSet s(universe_size);
  if (universe_size < 64) mask &= (std::uint64_t{1} << universe_size) - 1;
  s.words_[0] = mask;
  return s;
}

ThingSet ThingSet::full(std::size_t universe_size) {
  ThingSet s(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) s.insert(i);
  return s;
}

bool ThingSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t ThingSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool ThingSet::subset_of(const ThingSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ThingSet::intersects(const ThingSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<std::size_t> ThingSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t t) { out.push_back(t); });
  return out;
}

ThingSet& ThingSet::operator|=(const ThingSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ThingSet& ThingSet::operator&=(const ThingSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ThingSet& ThingSet::operator-=(const ThingSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const ThingSet& a, const ThingSet& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  return std::strong_ordering::equal;
}

std::size_t ThingSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace desire
