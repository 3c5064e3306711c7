#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain bitmasks and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fixtures.hpp"

namespace oracle {

using fixtures::RuleSpec;
// A family of subsets: bit s is set when subset s is a member (at most 6 things).
using Family = std::uint64_t;

inline std::uint32_t full(std::size_t n) { return (1u << n) - 1; }
inline Family family_bit(std::uint32_t s) { return Family{1} << s; }
inline Family all_subsets(std::size_t n) { return n == 6 ? ~Family{0} : (Family{1} << (1u << n)) - 1; }

inline std::uint32_t closure(const RuleSpec& spec, std::uint32_t s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [premises, conclusion] : spec.rules) {
      if ((premises & ~s) == 0 && !((s >> conclusion) & 1u)) {
        s |= 1u << conclusion;
        changed = true;
      }
    }
  }
  return s;
}

inline std::vector<std::uint32_t> coherent_sdts(const RuleSpec& spec) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s <= full(spec.n); ++s)
    if (!(s & spec.forbidden) && closure(spec, s) == s) out.push_back(s);
  return out;
}

// Calls f(image) for each selection map of w.
template <class F>
void selections(const std::vector<std::uint32_t>& w, F&& f) {
  std::vector<std::vector<std::uint32_t>> options;
  for (auto s : w) {
    std::vector<std::uint32_t> bits;
    for (std::uint32_t b = 0; b < 32; ++b)
      if ((s >> b) & 1u) bits.push_back(1u << b);
    if (bits.empty()) return;
    options.push_back(bits);
  }
  std::vector<std::size_t> at(w.size(), 0);
  while (true) {
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < w.size(); ++i) image |= options[i][at[i]];
    f(image);
    std::size_t i = 0;
    while (i < w.size() && ++at[i] == options[i].size()) at[i++] = 0;
    if (i == w.size()) return;
  }
}

// Every set {t_sigma : sigma} with t_sigma ∈ cl(sigma(W)), as a family.
inline Family raw_products(const RuleSpec& spec, const std::vector<std::uint32_t>& w) {
  std::vector<std::uint32_t> targets;
  selections(w, [&](std::uint32_t image) { targets.push_back(closure(spec, image)); });
  Family reach = family_bit(0);
  for (auto c : targets) {
    Family next = 0;
    for (std::uint32_t r = 0; r <= full(spec.n); ++r) {
      if (!((reach >> r) & 1u)) continue;
      for (std::uint32_t t = 0; t < spec.n; ++t)
        if ((c >> t) & 1u) next |= family_bit(r | (1u << t));
    }
    reach = next;
  }
  return reach;
}

inline std::vector<std::uint32_t> members(Family f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < 64; ++s)
    if ((f >> s) & 1u) out.push_back(s);
  return out;
}

// Literal K1-K5, with K5 quantified over every non-empty W ⊆ K.
inline bool coherent(const RuleSpec& spec, Family k) {
  const std::uint32_t top = full(spec.n);
  if (k & family_bit(0)) return false;
  for (auto s : members(k)) {
    for (std::uint32_t bigger = s; bigger <= top; ++bigger)
      if ((s & ~bigger) == 0 && !((k >> bigger) & 1u)) return false;
    if (!((k >> (s & ~spec.forbidden)) & 1u)) return false;
  }
  const std::uint32_t always = closure(spec, 0);
  for (std::uint32_t t = 0; t < spec.n; ++t)
    if (((always >> t) & 1u) && !((k >> (1u << t)) & 1u)) return false;
  auto ms = members(k);
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ms.size()); ++pick) {
    std::vector<std::uint32_t> w;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if ((pick >> i) & 1u) w.push_back(ms[i]);
    if ((raw_products(spec, w) & ~k) != 0) return false;
  }
  return true;
}

// Coherent families of a universe with at most three things.
inline std::vector<Family> coherent_families(const RuleSpec& spec) {
  std::vector<Family> out;
  const Family count = Family{1} << (1u << spec.n);
  for (Family k = 0; k < count; ++k)
    if (coherent(spec, k)) out.push_back(k);
  return out;
}

// Smallest coherent family containing w; all_subsets when there is none.
inline Family sds_closure(const std::vector<Family>& coherent_list, std::size_t n, Family w) {
  Family out = all_subsets(n);
  bool any = false;
  for (auto k : coherent_list)
    if ((w & ~k) == 0) out &= k, any = true;
  return any ? out : all_subsets(n);
}

inline Family conjunctive_model(std::size_t n, std::uint32_t d) {
  Family out = 0;
  for (std::uint32_t s = 0; s <= full(n); ++s)
    if (s & d) out |= family_bit(s);
  return out;
}

inline bool complete(std::size_t n, Family k) {
  for (std::uint32_t a = 0; a <= full(n); ++a)
    for (std::uint32_t b = 0; b <= full(n); ++b)
      if (((k >> (a | b)) & 1u) && !((k >> a) & 1u) && !((k >> b) & 1u)) return false;
  return true;
}

}  // namespace oracle
