#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "desire/thing_set.hpp"
#include "desire/universe.hpp"

namespace desire {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

ThingSet closure(const Universe& u, const ThingSet& s);
bool is_coherent_sdt(const Universe& u, const ThingSet& s);
bool is_consistent_sdt(const Universe& u, const ThingSet& s);

// All coherent SDTs by exhaustive subset scan, in canonical order.
std::vector<ThingSet> enumerate_coherent_sdts(const Universe& u, std::size_t max_things = kDefaultEnumerationLimit);

// Every closed set (coherent or not) in lectic order, one closure call per
// candidate. Usable on universes far too large for a subset scan.
std::vector<ThingSet> enumerate_closed_sets(const Universe& u, std::size_t max_results);
// Coherent SDTs found through enumerate_closed_sets, in canonical order.
std::vector<ThingSet> enumerate_coherent_sdts_lectic(const Universe& u, std::size_t max_results);

// Intersection of all coherent supersets of s; throws InconsistencyError when s is inconsistent.
ThingSet sdt_closure_via_intersection(const Universe& u, const ThingSet& s,
                                      std::size_t max_things = kDefaultEnumerationLimit);
ThingSet sdt_closure_via_intersection(const Universe& u, const std::vector<ThingSet>& coherent,
                                      const ThingSet& s);

// Things outside T- that belong to no coherent SDT.
ThingSet never_desirable_things(const Universe& u);

struct ClosureLawViolation {
  int law = 0;  // 1 extensive, 2 monotone, 3 idempotent
  std::uint64_t first = 0;
  std::uint64_t second = 0;  // the larger set for law 2
};

std::string describe(const ClosureLawViolation& v);

// Exhaustive C1-C3 check of an operator on subsets of an n-thing set given as masks.
std::optional<ClosureLawViolation> check_closure_laws(std::size_t n,
                                                      const std::function<std::uint64_t(std::uint64_t)>& cl);
std::optional<ClosureLawViolation> check_closure_laws(const Universe& u);

// cl(A) against the union of cl(F) over the subsets F of A, for every A.
std::optional<std::uint64_t> check_finitary(const Universe& u);

}  // namespace desire
