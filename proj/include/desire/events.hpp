#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "desire/core.hpp"
#include "desire/set_family.hpp"

namespace desire {

inline constexpr std::size_t kMaxCoherentForEvents = 64;
inline constexpr std::size_t kDefaultLatticeLimit = 12;

// Subset of the enumerated coherent SDTs, bit i standing for the i-th one.
struct Event {
  std::uint64_t bits = 0;

  bool empty() const { return bits == 0; }
  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  bool subset_of(Event o) const { return (bits & ~o.bits) == 0; }
  std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits)); }
  friend Event operator&(Event a, Event b) { return {a.bits & b.bits}; }
  friend Event operator|(Event a, Event b) { return {a.bits | b.bits}; }
  friend bool operator==(Event a, Event b) = default;
  friend auto operator<=>(Event a, Event b) = default;
};

// The coherent SDTs of a universe together with the single-thing events.
class EventSpace {
 public:
  explicit EventSpace(Universe u, std::size_t max_things = kDefaultEnumerationLimit);
  // Coherent SDTs enumerated elsewhere, in canonical order.
  EventSpace(Universe u, std::vector<ThingSet> coherent);

  const Universe& universe() const { return universe_; }
  const std::vector<ThingSet>& coherent() const { return coherent_; }
  std::size_t size() const { return coherent_.size(); }
  Event all() const { return all_; }
  // A_{t}: coherent SDTs containing t.
  Event thing_event(std::size_t thing) const { return thing_events_[thing]; }

  std::string format(Event e) const;  // "[{a} {a c}]"

 private:
  void index_things();

  Universe universe_;
  std::vector<ThingSet> coherent_;
  std::vector<Event> thing_events_;
  Event all_;
};

Event basic_event(const EventSpace& space, const ThingSet& s);  // A_s
Event basic_event(const EventSpace& space, Subset s);
Event event_of(const EventSpace& space, const std::vector<ThingSet>& w);  // E_W
Event event_of(const EventSpace& space, const SetFamily& w);
// B_W: closures of the selections of W that are coherent.
Event production_event(const EventSpace& space, const std::vector<ThingSet>& w);
// Up-set of an event inside the coherent SDTs ordered by inclusion.
Event upset_in_C(const EventSpace& space, Event a);

// Bounded distributive lattice of events, generated by the basic events under
// union and intersection.
class EventLattice {
 public:
  const EventSpace& space() const { return space_; }
  const std::vector<Event>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Event& at(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(Event e) const;
  std::size_t index_of(Event e) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return index_of(elements_[a] & elements_[b]); }
  std::size_t join(std::size_t a, std::size_t b) const { return index_of(elements_[a] | elements_[b]); }
  bool leq(std::size_t a, std::size_t b) const { return elements_[a].subset_of(elements_[b]); }

 private:
  friend std::shared_ptr<const EventLattice> build_event_lattice(const EventSpace&, std::size_t);
  explicit EventLattice(EventSpace space) : space_(std::move(space)) {}

  EventSpace space_;
  std::vector<Event> elements_;  // sorted by mask
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

std::shared_ptr<const EventLattice> build_event_lattice(const EventSpace& space,
                                                        std::size_t max_coherent = kDefaultLatticeLimit);
// On finite universes the lattices generated by arbitrary, finite and
// finite-set statements coincide; these names return the same lattice.
std::shared_ptr<const EventLattice> build_finitary_event_lattice(const EventSpace& space,
                                                                 std::size_t max_coherent = kDefaultLatticeLimit);
std::shared_ptr<const EventLattice> build_finite_set_event_lattice(const EventSpace& space,
                                                                   std::size_t max_coherent = kDefaultLatticeLimit);

}  // namespace desire
