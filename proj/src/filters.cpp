#include "desire/filters.hpp"

#include <algorithm>
#include <unordered_set>

#include "desire/errors.hpp"

namespace desire {

std::string filter_defect(const EventLattice& lattice, const ElementSet& members) {
  const std::size_t n = lattice.size();
  if (members.size() != n) return "member set does not match the lattice";
  if (members.none()) return "filter is empty";
  for (std::size_t a = 0; a < n; ++a) {
    if (!members.test(a)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!members.test(b) && lattice.leq(a, b)) return "not up-closed at element " + std::to_string(b);
      if (members.test(b) && !members.test(lattice.meet(a, b)))
        return "not meet-closed at elements " + std::to_string(a) + ", " + std::to_string(b);
    }
  }
  return "";
}

LatticeFilter::LatticeFilter(LatticePtr lattice, ElementSet members)
    : lattice_(std::move(lattice)), members_(std::move(members)) {
  if (auto defect = filter_defect(*lattice_, members_); !defect.empty()) throw InputError("not a filter: " + defect);
}

LatticeFilter LatticeFilter::principal(LatticePtr lattice, std::size_t element) {
  ElementSet m = up_set(*lattice, {element});
  return LatticeFilter(std::move(lattice), std::move(m));
}

LatticeFilter LatticeFilter::whole(LatticePtr lattice) {
  ElementSet m(lattice->size());
  m.set();
  return LatticeFilter(std::move(lattice), std::move(m));
}

bool LatticeFilter::contains(Event e) const {
  auto i = lattice_->find(e);
  return i && members_.test(*i);
}

std::size_t LatticeFilter::smallest() const {
  Event meet = lattice_->at(lattice_->top());
  for (auto i = members_.find_first(); i != ElementSet::npos; i = members_.find_next(i)) meet = meet & lattice_->at(i);
  return lattice_->index_of(meet);
}

FilterBase::FilterBase(LatticePtr lattice, std::vector<std::size_t> generators)
    : lattice_(std::move(lattice)), generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (generators_.empty()) throw InputError("a filter base needs at least one element");
  for (auto g : generators_) {
    if (g >= lattice_->size()) throw InputError("filter base element outside the lattice");
    if (g == lattice_->bottom()) throw InputError("a filter base may not contain the bottom element");
  }
  for (auto a : generators_) {
    for (auto b : generators_) {
      const std::size_t m = lattice_->meet(a, b);
      bool below = std::any_of(generators_.begin(), generators_.end(), [&](std::size_t c) { return lattice_->leq(c, m); });
      if (!below) throw InputError("filter base is not directed downwards");
    }
  }
}

ElementSet up_set(const EventLattice& lattice, const std::vector<std::size_t>& generators) {
  ElementSet out(lattice.size());
  for (std::size_t e = 0; e < lattice.size(); ++e)
    for (auto g : generators)
      if (lattice.leq(g, e)) {
        out.set(e);
        break;
      }
  return out;
}

LatticeFilter generate_filter(const FilterBase& base) {
  return LatticeFilter(base.lattice_ptr(), up_set(*base.lattice_ptr(), base.generators()));
}

bool is_proper(const LatticeFilter& f) { return !f.contains(f.lattice().bottom()); }

bool is_principal(const LatticeFilter& f) {
  return f.members() == up_set(f.lattice(), {f.smallest()});
}

bool is_prime(const LatticeFilter& f) {
  if (!is_proper(f)) return false;
  const auto& lattice = f.lattice();
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    if (f.contains(a)) continue;
    for (std::size_t b = a; b < lattice.size(); ++b) {
      if (!f.contains(b) && f.contains(lattice.join(a, b))) return false;
    }
  }
  return true;
}

std::vector<LatticeFilter> all_proper_filters(const LatticePtr& lattice) {
  std::vector<LatticeFilter> out;
  for (std::size_t e = 0; e < lattice->size(); ++e)
    if (e != lattice->bottom()) out.push_back(LatticeFilter::principal(lattice, e));
  return out;
}

std::vector<LatticeFilter> prime_decomposition(const LatticeFilter& f) {
  if (!is_proper(f)) throw InputError("prime decomposition needs a proper filter");
  std::vector<LatticeFilter> out;
  for (auto& candidate : all_proper_filters(f.lattice_ptr()))
    if (f.subset_of(candidate) && is_prime(candidate)) out.push_back(std::move(candidate));
  return out;
}

ElementSet intersect_all(const std::vector<LatticeFilter>& filters, std::size_t lattice_size) {
  ElementSet out(lattice_size);
  out.set();
  for (const auto& f : filters) out &= f.members();
  return out;
}

ElementSet filterize_elements(const EventLattice& lattice, const SetFamily& k) {
  const EventSpace& space = lattice.space();
  // E_W for finite W ⊆ K are exactly the finite meets of basic events of members.
  std::vector<std::uint64_t> found{space.all().bits};
  std::unordered_set<std::uint64_t> seen{space.all().bits};
  std::vector<std::uint64_t> basics;
  k.for_each([&](Subset s) { basics.push_back(basic_event(space, s).bits); });
  std::sort(basics.begin(), basics.end());
  basics.erase(std::unique(basics.begin(), basics.end()), basics.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto b : basics) {
      const std::uint64_t e = found[i] & b;
      if (seen.insert(e).second) found.push_back(e);
    }
  }
  ElementSet out(lattice.size());
  for (auto e : found) out.set(lattice.index_of(Event{e}));
  return out;
}

LatticeFilter filterize(const LatticePtr& lattice, const Sds& k) {
  return LatticeFilter(lattice, filterize_elements(*lattice, k));
}

LatticeFilter sdfs_filterize(const LatticePtr& lattice, const Sdfs& f) {
  return LatticeFilter(lattice, filterize_elements(*lattice, f));
}

Sds desirify(const LatticeFilter& f) {
  const EventSpace& space = f.lattice().space();
  const std::size_t n = space.universe().size();
  Sds out(n);
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
    if (f.contains(basic_event(space, static_cast<Subset>(s)))) out.insert(static_cast<Subset>(s));
  return out;
}

Sdfs sdfs_desirify(const LatticeFilter& f) { return Sdfs(desirify(f)); }

PrincipalFilter principal_filterize(const LatticePtr& lattice, const Sds& k) {
  const EventSpace& space = lattice->space();
  Event smallest = event_of(space, k);
  if (smallest.empty()) throw InconsistencyError("inconsistent SDS has no principal filter", "E_K = []");
  return {smallest, LatticeFilter::principal(lattice, lattice->index_of(smallest))};
}

std::string format_filter(const LatticeFilter& f) {
  const auto& lattice = f.lattice();
  const auto& space = lattice.space();
  std::string out = "smallest " + space.format(lattice.at(f.smallest())) + "\n";
  for (std::size_t e = 0; e < lattice.size(); ++e)
    if (f.contains(e)) out += "member " + space.format(lattice.at(e)) + "\n";
  std::string flags;
  if (is_prime(f)) flags += " PRIME";
  if (is_principal(f)) flags += " PRINCIPAL";
  if (is_proper(f)) flags += " PROPER";
  out += "flags" + (flags.empty() ? std::string(" NONE") : flags) + "\n";
  return out;
}

}  // namespace desire
