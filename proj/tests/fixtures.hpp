#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "desire/set_family.hpp"
#include "desire/universe.hpp"
#include "desire/universe_io.hpp"

namespace fixtures {

// Plain description of a rule universe, shared by the library and the oracles.
struct RuleSpec {
  std::size_t n = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> rules;  // premises mask -> conclusion
  std::uint32_t forbidden = 0;
};

inline desire::Universe make_universe(const RuleSpec& spec) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < spec.n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  desire::RuleSet rules;
  for (auto [premises, conclusion] : spec.rules)
    rules.rules.push_back({desire::ThingSet::from_mask(spec.n, premises), conclusion});
  return desire::Universe(names, rules, desire::ThingSet::from_mask(spec.n, spec.forbidden));
}

// things {a,b,c}, rule {a,b} -> c, nothing forbidden.
inline RuleSpec u1_spec() { return {3, {{0b011, 2}}, 0}; }
// things {a,b,c}, rules -> a and b -> c, c forbidden.
inline RuleSpec u2_spec() { return {3, {{0b000, 0}, {0b010, 2}}, 0b100}; }
// things {a,b}, no rules, nothing forbidden.
inline RuleSpec u3_spec() { return {2, {}, 0}; }

inline desire::Universe u1() { return make_universe(u1_spec()); }
inline desire::Universe u2() { return make_universe(u2_spec()); }
inline desire::Universe u3() { return make_universe(u3_spec()); }

// Random rule universe whose cl(∅) avoids the forbidden things; retries until it does.
inline RuleSpec random_spec(std::mt19937_64& rng, std::size_t n, std::size_t max_rules) {
  while (true) {
    RuleSpec spec;
    spec.n = n;
    const std::size_t rule_count = rng() % (max_rules + 1);
    for (std::size_t r = 0; r < rule_count; ++r) {
      std::uint32_t premises = static_cast<std::uint32_t>(rng() % (1u << n));
      if (rng() % 4 == 0) premises &= premises - 1;
      spec.rules.push_back({premises, rng() % n});
    }
    spec.forbidden = (rng() % 3 == 0) ? 0 : static_cast<std::uint32_t>(rng() % (1u << n)) & static_cast<std::uint32_t>(rng() % (1u << n));
    try {
      make_universe(spec);
      return spec;
    } catch (const std::exception&) {
    }
  }
}

// Families of subsets as 64-bit masks (at most 6 things).
inline std::uint64_t to_bits(const desire::SetFamily& f) {
  std::uint64_t out = 0;
  f.for_each([&](desire::Subset s) { out |= std::uint64_t{1} << s; });
  return out;
}

inline desire::Sds to_sds(std::size_t n, std::uint64_t bits) {
  desire::Sds out(n);
  for (desire::Subset s = 0; s < (1u << n); ++s)
    if ((bits >> s) & 1u) out.insert(s);
  return out;
}

}  // namespace fixtures
