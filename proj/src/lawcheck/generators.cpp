#include "desire/errors.hpp"
#include "desire/lawcheck.hpp"

namespace desire::lawcheck {

Universe random_universe(std::mt19937_64& rng, std::size_t n, std::size_t max_rules) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  for (;;) {
    RuleSet rules;
    const std::size_t count = rng() % (max_rules + 1);
    for (std::size_t r = 0; r < count; ++r) {
      auto premises = static_cast<std::uint64_t>(rng() % (std::uint64_t{1} << n));
      if (rng() % 4 == 0) premises &= premises - 1;
      rules.rules.push_back({ThingSet::from_mask(n, premises), static_cast<std::size_t>(rng() % n)});
    }
    std::uint64_t forbidden = 0;
    if (rng() % 3 != 0) forbidden = (rng() % (std::uint64_t{1} << n)) & (rng() % (std::uint64_t{1} << n));
    try {
      return Universe(names, std::move(rules), ThingSet::from_mask(n, forbidden));
    } catch (const InputError&) {
    }
  }
}

std::vector<Universe> universes(std::mt19937_64& rng, std::size_t random_count, std::size_t max_things) {
  auto make = [](std::vector<std::string> names, std::vector<std::pair<std::uint64_t, std::size_t>> rules,
                 std::uint64_t forbidden) {
    RuleSet rs;
    for (auto [p, c] : rules) rs.rules.push_back({ThingSet::from_mask(names.size(), p), c});
    const std::size_t n = names.size();
    return Universe(std::move(names), std::move(rs), ThingSet::from_mask(n, forbidden));
  };
  std::vector<Universe> out;
  out.push_back(make({"a", "b"}, {}, 0));
  out.push_back(make({"a", "b"}, {}, 0b10));
  out.push_back(make({"a", "b"}, {{0, 0}}, 0));
  if (max_things >= 3) {
    out.push_back(make({"a", "b", "c"}, {{0b011, 2}}, 0));
    out.push_back(make({"a", "b", "c"}, {{0, 0}, {0b010, 2}}, 0b100));
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = 1 + (i * max_things) / std::max<std::size_t>(random_count, 1);
    out.push_back(random_universe(rng, n, 2 * n));
  }
  return out;
}

}  // namespace desire::lawcheck
