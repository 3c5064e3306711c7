#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace desire {

// Subset of a universe's things, one bit per interned thing index.
// Universes of up to 64 things keep their bits inline.
class ThingSet {
 public:
  ThingSet() = default;
  explicit ThingSet(std::size_t universe_size);

  static ThingSet from_mask(std::size_t universe_size, std::uint64_t mask);
  static ThingSet full(std::size_t universe_size);

  std::size_t universe_size() const { return size_; }

  bool contains(std::size_t thing) const {
    return (words_[thing / 64] >> (thing % 64)) & 1u;
  }
  void insert(std::size_t thing) { words_[thing / 64] |= std::uint64_t{1} << (thing % 64); }
  void erase(std::size_t thing) { words_[thing / 64] &= ~(std::uint64_t{1} << (thing % 64)); }

  bool empty() const;
  std::size_t count() const;
  bool subset_of(const ThingSet& other) const;
  bool intersects(const ThingSet& other) const;

  // Low 64 bits; exact whenever universe_size() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

  ThingSet& operator|=(const ThingSet& other);
  ThingSet& operator&=(const ThingSet& other);
  ThingSet& operator-=(const ThingSet& other);

  friend ThingSet operator|(ThingSet a, const ThingSet& b) { return a |= b; }
  friend ThingSet operator&(ThingSet a, const ThingSet& b) { return a &= b; }
  friend ThingSet operator-(ThingSet a, const ThingSet& b) { return a -= b; }

  friend bool operator==(const ThingSet& a, const ThingSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  // Canonical order: compare as binary numbers, thing 0 least significant.
  friend std::strong_ordering operator<=>(const ThingSet& a, const ThingSet& b);

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

struct ThingSetHash {
  std::size_t operator()(const ThingSet& s) const { return s.hash(); }
};

}  // namespace desire
