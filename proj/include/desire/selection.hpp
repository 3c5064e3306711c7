#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "desire/errors.hpp"
#include "desire/thing_set.hpp"

namespace desire {

inline constexpr std::size_t kMaxSelections = std::size_t{1} << 22;

// Sorted, duplicate-free copy: selection maps are taken over W as a set.
inline std::vector<ThingSet> as_set(std::vector<ThingSet> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

inline std::size_t selection_count(const std::vector<ThingSet>& w) {
  std::size_t total = 1;
  for (const auto& s : w) {
    const std::size_t c = s.count();
    if (c == 0) return 0;
    if (total > kMaxSelections / c) return kMaxSelections + 1;
    total *= c;
  }
  return total;
}

// Calls f(choice, image) for every selection map of w, where choice[i] is the
// thing picked from w[i] and image is the set of picked things. w must be
// duplicate-free. The empty W has exactly one (empty) selection.
template <class F>
void for_each_selection(const std::vector<ThingSet>& w, std::size_t universe_size, F&& f) {
  if (selection_count(w) > kMaxSelections)
    throw CapacityError("more than " + std::to_string(kMaxSelections) + " selection maps");
  std::vector<std::vector<std::size_t>> options;
  options.reserve(w.size());
  for (const auto& s : w) {
    options.push_back(s.members());
    if (options.back().empty()) return;
  }
  std::vector<std::size_t> at(w.size(), 0);
  std::vector<std::size_t> choice(w.size());
  while (true) {
    ThingSet image(universe_size);
    for (std::size_t i = 0; i < w.size(); ++i) {
      choice[i] = options[i][at[i]];
      image.insert(choice[i]);
    }
    f(static_cast<const std::vector<std::size_t>&>(choice), static_cast<const ThingSet&>(image));
    std::size_t i = 0;
    while (i < w.size() && ++at[i] == options[i].size()) at[i++] = 0;
    if (i == w.size()) return;
  }
}

}  // namespace desire
