#include "desire/events.hpp"

#include <algorithm>
#include <unordered_set>

#include "desire/errors.hpp"
#include "desire/selection.hpp"

namespace desire {

EventSpace::EventSpace(Universe u, std::size_t max_things)
    : universe_(std::move(u)), coherent_(enumerate_coherent_sdts(universe_, max_things)) {
  index_things();
}

EventSpace::EventSpace(Universe u, std::vector<ThingSet> coherent)
    : universe_(std::move(u)), coherent_(std::move(coherent)) {
  if (!std::is_sorted(coherent_.begin(), coherent_.end()))
    throw InputError("coherent SDTs must be listed in canonical order");
  index_things();
}

void EventSpace::index_things() {
  if (coherent_.size() > kMaxCoherentForEvents)
    throw CapacityError("events support at most " + std::to_string(kMaxCoherentForEvents) + " coherent SDTs, got " +
                        std::to_string(coherent_.size()));
  thing_events_.assign(universe_.size(), Event{});
  for (std::size_t i = 0; i < coherent_.size(); ++i) {
    coherent_[i].for_each([&](std::size_t t) { thing_events_[t].bits |= std::uint64_t{1} << i; });
  }
  all_.bits = coherent_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << coherent_.size()) - 1;
}

std::string EventSpace::format(Event e) const {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < coherent_.size(); ++i) {
    if (!e.contains(i)) continue;
    if (!first) out += ' ';
    first = false;
    out += universe_.format(coherent_[i]);
  }
  return out + "]";
}

Event basic_event(const EventSpace& space, const ThingSet& s) {
  Event e;
  s.for_each([&](std::size_t t) { e = e | space.thing_event(t); });
  return e;
}

Event basic_event(const EventSpace& space, Subset s) {
  Event e;
  while (s != 0) {
    e = e | space.thing_event(static_cast<std::size_t>(__builtin_ctz(s)));
    s &= s - 1;
  }
  return e;
}

Event event_of(const EventSpace& space, const std::vector<ThingSet>& w) {
  Event e = space.all();
  for (const auto& s : w) e = e & basic_event(space, s);
  return e;
}

Event event_of(const EventSpace& space, const SetFamily& w) {
  Event e = space.all();
  w.for_each([&](Subset s) { e = e & basic_event(space, s); });
  return e;
}

Event production_event(const EventSpace& space, const std::vector<ThingSet>& w) {
  const Universe& u = space.universe();
  const auto& coherent = space.coherent();
  Event e;
  for_each_selection(as_set(w), u.size(), [&](const std::vector<std::size_t>&, const ThingSet& image) {
    ThingSet c = u.closure(image);
    if (c.intersects(u.forbidden())) return;
    auto it = std::lower_bound(coherent.begin(), coherent.end(), c);
    if (it != coherent.end() && *it == c) e.bits |= std::uint64_t{1} << (it - coherent.begin());
  });
  return e;
}

Event upset_in_C(const EventSpace& space, Event a) {
  const auto& coherent = space.coherent();
  Event out;
  for (std::size_t j = 0; j < coherent.size(); ++j) {
    for (std::size_t i = 0; i < coherent.size(); ++i) {
      if (a.contains(i) && coherent[i].subset_of(coherent[j])) {
        out.bits |= std::uint64_t{1} << j;
        break;
      }
    }
  }
  return out;
}

std::optional<std::size_t> EventLattice::find(Event e) const {
  auto it = index_.find(e.bits);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EventLattice::index_of(Event e) const {
  auto i = find(e);
  if (!i) throw InputError("event " + space_.format(e) + " is not in the lattice");
  return *i;
}

std::shared_ptr<const EventLattice> build_event_lattice(const EventSpace& space, std::size_t max_coherent) {
  if (space.size() > max_coherent)
    throw CapacityError("event lattice limited to " + std::to_string(max_coherent) + " coherent SDTs, universe has " +
                        std::to_string(space.size()));
  std::vector<std::uint64_t> elems;
  std::unordered_set<std::uint64_t> seen;
  auto add = [&](std::uint64_t e) {
    if (seen.insert(e).second) elems.push_back(e);
  };
  add(0);
  add(space.all().bits);
  for (std::size_t t = 0; t < space.universe().size(); ++t) add(space.thing_event(t).bits);
  // Each new element is combined with everything found before it.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > (std::size_t{1} << 22)) throw CapacityError("event lattice too large");
    for (std::size_t j = 0; j < i; ++j) {
      add(elems[i] & elems[j]);
      add(elems[i] | elems[j]);
    }
  }
  std::sort(elems.begin(), elems.end());
  std::shared_ptr<EventLattice> lattice(new EventLattice(space));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    lattice->elements_.push_back(Event{elems[i]});
    lattice->index_.emplace(elems[i], i);
  }
  lattice->bottom_ = lattice->index_.at(0);
  lattice->top_ = lattice->index_.at(space.all().bits);
  return lattice;
}

std::shared_ptr<const EventLattice> build_finitary_event_lattice(const EventSpace& space, std::size_t max_coherent) {
  return build_event_lattice(space, max_coherent);
}

std::shared_ptr<const EventLattice> build_finite_set_event_lattice(const EventSpace& space, std::size_t max_coherent) {
  return build_event_lattice(space, max_coherent);
}

}  // namespace desire
