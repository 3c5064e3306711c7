#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "desire/thing_set.hpp"
#include "desire/universe.hpp"

namespace desire {

// A subset of things written as a bitmask; families of sets index by it.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxFamilyThings = 20;

// A set of subsets of a universe, stored as one bit per subset of T.
// The full power set doubles as the inconsistent value.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t things);

  std::size_t things() const { return things_; }
  std::size_t subset_count() const { return bits_.size(); }

  bool contains(Subset s) const { return bits_.test(s); }
  void insert(Subset s) { bits_.set(s); }
  void erase(Subset s) { bits_.reset(s); }
  bool contains(const ThingSet& s) const { return contains(static_cast<Subset>(s.mask())); }
  void insert(const ThingSet& s) { insert(static_cast<Subset>(s.mask())); }

  bool empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  bool is_top() const { return bits_.all(); }
  bool subset_of(const SetFamily& other) const { return bits_.is_subset_of(other.bits_); }

  // Members in canonical (mask) order.
  std::vector<Subset> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<Subset>(i));
  }

  SetFamily& operator|=(const SetFamily& o) {
    bits_ |= o.bits_;
    return *this;
  }
  SetFamily& operator&=(const SetFamily& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.things_ == b.things_ && a.bits_ == b.bits_;
  }

  std::size_t hash() const;

 protected:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  std::size_t things_ = 0;
  Bits bits_;
};

// Set of desirable sets of things.
class Sds : public SetFamily {
 public:
  using SetFamily::SetFamily;
  explicit Sds(const SetFamily& f) : SetFamily(f) {}
  static Sds top(std::size_t things);
  friend Sds operator&(Sds a, const Sds& b) { return Sds(a &= b); }
  friend Sds operator|(Sds a, const Sds& b) { return Sds(a |= b); }
};

// Set of desirable finite sets of things. On finite universes the members
// coincide with an Sds; the type records which axiom system is meant.
class Sdfs : public SetFamily {
 public:
  using SetFamily::SetFamily;
  explicit Sdfs(const SetFamily& f) : SetFamily(f) {}
  static Sdfs top(std::size_t things);
  friend Sdfs operator&(Sdfs a, const Sdfs& b) { return Sdfs(a &= b); }
  friend Sdfs operator|(Sdfs a, const Sdfs& b) { return Sdfs(a |= b); }
};

struct SetFamilyHash {
  std::size_t operator()(const SetFamily& f) const { return f.hash(); }
};

inline ThingSet to_thing_set(const Universe& u, Subset s) { return u.from_mask(s); }
inline Subset to_subset(const ThingSet& s) { return static_cast<Subset>(s.mask()); }

// Builds a family from explicit member sets.
Sds make_sds(const Universe& u, const std::vector<ThingSet>& members);
Sdfs make_sdfs(const Universe& u, const std::vector<ThingSet>& members);

// One member per line in canonical order, "INCONSISTENT" for the full power set.
std::string format_family(const Universe& u, const SetFamily& f);
std::string format_subset(const Universe& u, Subset s);          // "a b"
std::string format_subset_braced(const Universe& u, Subset s);   // "{a b}"
// "[{a} {a b}]" on one line.
std::string format_family_inline(const Universe& u, const SetFamily& f);

}  // namespace desire
