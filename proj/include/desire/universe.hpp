#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "desire/thing_set.hpp"

namespace desire {

struct Rule {
  ThingSet premises;
  std::size_t conclusion = 0;
};

struct RuleSet {
  std::vector<Rule> rules;
};

// Explicit closure map, image[mask] = cl(mask). Only for universes of at most 16 things.
struct ClosureTable {
  std::vector<std::uint32_t> image;
};

// Opaque closure supplied by a backend (logic, gambles).
struct Backend {
  std::string name;
  std::function<ThingSet(const ThingSet&)> hook;
};

using ClosureSpec = std::variant<RuleSet, ClosureTable, Backend>;

inline constexpr std::size_t kMaxTableThings = 16;
// Closures of every subset are tabulated at construction up to this size.
inline constexpr std::size_t kMaxTabulatedThings = 16;

// Finite thing universe with a closure operator and forbidden things.
// Immutable; copies share state.
class Universe {
 public:
  Universe(std::vector<std::string> things, ClosureSpec closure, ThingSet forbidden);

  std::size_t size() const;
  const std::vector<std::string>& things() const;
  const std::string& name(std::size_t thing) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  ThingSet empty_set() const { return ThingSet(size()); }
  ThingSet full_set() const { return ThingSet::full(size()); }
  ThingSet make_set(const std::vector<std::string>& names) const;
  ThingSet from_mask(std::uint64_t mask) const { return ThingSet::from_mask(size(), mask); }

  const ThingSet& forbidden() const;
  const ThingSet& always_desirable() const;

  ThingSet closure(const ThingSet& s) const;
  // Only for universes with at most kMaxTabulatedThings things.
  std::uint32_t closure_mask(std::uint32_t s) const;
  bool tabulated() const;

  const ClosureSpec& closure_spec() const;

  std::string format(const ThingSet& s) const;          // "{a b}"
  std::string format_members(const ThingSet& s) const;  // "a b"

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace desire
