#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "desire/events.hpp"
#include "desire/sds.hpp"

namespace desire {

using LatticePtr = std::shared_ptr<const EventLattice>;
// One bit per lattice element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

// Non-empty, up-closed, meet-closed set of lattice elements.
class LatticeFilter {
 public:
  // Throws InputError unless members form a filter.
  LatticeFilter(LatticePtr lattice, ElementSet members);

  static LatticeFilter principal(LatticePtr lattice, std::size_t element);
  static LatticeFilter whole(LatticePtr lattice);

  const EventLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const ElementSet& members() const { return members_; }
  bool contains(std::size_t element) const { return members_.test(element); }
  bool contains(Event e) const;
  std::size_t size() const { return members_.count(); }
  // Meet of all members.
  std::size_t smallest() const;
  bool subset_of(const LatticeFilter& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const LatticeFilter& a, const LatticeFilter& b) {
    return a.lattice_ == b.lattice_ && a.members_ == b.members_;
  }

 private:
  LatticePtr lattice_;
  ElementSet members_;
};

// Downward-directed generating family of a filter.
class FilterBase {
 public:
  FilterBase(LatticePtr lattice, std::vector<std::size_t> generators);
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<std::size_t>& generators() const { return generators_; }

 private:
  LatticePtr lattice_;
  std::vector<std::size_t> generators_;
};

// Why a set of elements fails to be a filter, or empty when it is one.
std::string filter_defect(const EventLattice& lattice, const ElementSet& members);

LatticeFilter generate_filter(const FilterBase& base);
ElementSet up_set(const EventLattice& lattice, const std::vector<std::size_t>& generators);

bool is_proper(const LatticeFilter& f);
bool is_principal(const LatticeFilter& f);
bool is_prime(const LatticeFilter& f);

// Every proper filter of a finite lattice, one per non-bottom element.
std::vector<LatticeFilter> all_proper_filters(const LatticePtr& lattice);
// Prime filters containing f. Throws InputError for an improper filter.
std::vector<LatticeFilter> prime_decomposition(const LatticeFilter& f);
ElementSet intersect_all(const std::vector<LatticeFilter>& filters, std::size_t lattice_size);

// {E_W : W ⊆ K finite} as raw elements, without checking the filter laws.
ElementSet filterize_elements(const EventLattice& lattice, const SetFamily& k);
LatticeFilter filterize(const LatticePtr& lattice, const Sds& k);
LatticeFilter sdfs_filterize(const LatticePtr& lattice, const Sdfs& f);
// {s : A_s ∈ F}.
Sds desirify(const LatticeFilter& f);
Sdfs sdfs_desirify(const LatticeFilter& f);

struct PrincipalFilter {
  Event smallest;
  LatticeFilter filter;
};
// ↑E_K. Throws InconsistencyError when E_K is empty.
PrincipalFilter principal_filterize(const LatticePtr& lattice, const Sds& k);

// Smallest element, members, then a flag line.
std::string format_filter(const LatticeFilter& f);

}  // namespace desire
