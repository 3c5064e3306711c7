#include <algorithm>
#include <map>
#include <unordered_set>

#include "desire/logic.hpp"

namespace desire::logic {

ClassSpace::ClassSpace(const LogicUniverse& lu) : logic(&lu), events(lu.class_universe()) {
  for (const auto& c : lu.classes()) class_tables.push_back(c.table);
}

namespace {

TruthTable disjunction_table(const ClassSpace& space, Subset s) {
  TruthTable t = 0;
  for (Subset bits = s; bits != 0; bits &= bits - 1) t |= space.class_tables[static_cast<std::size_t>(__builtin_ctz(bits))];
  return t;
}

// First member of f for each disjunction table.
std::map<TruthTable, Subset> disjunctions(const ClassSpace& space, const SetFamily& f) {
  std::map<TruthTable, Subset> out;
  f.for_each([&](Subset s) { out.emplace(disjunction_table(space, s), s); });
  return out;
}

}  // namespace

std::vector<TruthTable> disjunction_tables(const ClassSpace& space, const SetFamily& f) {
  std::vector<TruthTable> out;
  for (const auto& [t, s] : disjunctions(space, f)) out.push_back(t);
  return out;
}

ThingSet disjunction_sdt(const ClassSpace& space, const SetFamily& f) {
  const LogicUniverse& lu = *space.logic;
  ThingSet out(lu.size());
  for (const auto& [t, s] : disjunctions(space, f)) {
    if (!lu.class_of(t)) {
      std::vector<Wff> members;
      for (Subset bits = s; bits != 0; bits &= bits - 1)
        members.push_back(lu.classes()[static_cast<std::size_t>(__builtin_ctz(bits))].representative);
      const std::string name = members.empty() ? std::string("the empty disjunction") : "'" + to_string(disjoin(members)) + "'";
      throw CapacityError("disjunction " + name + " has no equivalent wff within depth " + std::to_string(lu.depth()));
    }
    for (std::size_t i = 0; i < lu.size(); ++i)
      if (lu.tables()[i] == t) out.insert(i);
  }
  return out;
}

Sdfs model_of_tables(const ClassSpace& space, const std::vector<TruthTable>& tables) {
  const std::size_t n = space.class_tables.size();
  Subset hit = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(tables.begin(), tables.end(), space.class_tables[c]) != tables.end()) hit |= Subset{1} << c;
  Sdfs out(n);
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (s & hit) out.insert(s);
  return out;
}

Sdfs class_sdfs_closure(const ClassSpace& space, const SetFamily& w) {
  return Sdfs(conjunctive_closure(space.events, w));
}

std::vector<Sdfs> enumerate_class_sdfses(const ClassSpace& space) {
  const std::size_t n = space.class_tables.size();
  if (n > kMaxFamilyThings) throw CapacityError("too many Lindenbaum classes for set families");
  std::unordered_set<std::uint64_t> basics;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    Event a = basic_event(space.events, s);
    if (!a.empty()) basics.insert(a.bits);
  }
  std::vector<std::uint64_t> found{space.events.all().bits};
  std::unordered_set<std::uint64_t> seen{space.events.all().bits};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto b : basics) {
      const std::uint64_t e = found[i] & b;
      if (e != 0 && seen.insert(e).second) found.push_back(e);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Sdfs> out;
  for (auto e : found) {
    Sds k = Sds::top(n);
    for (std::size_t i = 0; i < space.events.size(); ++i)
      if ((e >> i) & 1u) k = k & sdsify(space.events.universe(), space.events.coherent()[i]);
    out.emplace_back(k);
  }
  return out;
}

DisjunctionReport check_disjunction_representation(const ClassSpace& space, const Sdfs& f) {
  const LogicUniverse& lu = *space.logic;
  const TruthTable all = lu.valuations();
  const std::size_t rows = std::size_t{1} << lu.atoms().size();
  auto tables = disjunction_tables(space, f);
  auto in_d = [&](TruthTable t) { return std::binary_search(tables.begin(), tables.end(), t); };

  DisjunctionReport r;
  r.family = f;
  // Coherent as a set of universe wffs: the realized disjunctions form a closed, consistent class set.
  ThingSet realized(space.class_tables.size());
  for (auto t : tables)
    if (auto c = lu.class_of(t)) realized.insert(*c);
  r.coherent = is_coherent_sdt(lu.class_universe(), realized);

  const Sdfs model = model_of_tables(space, tables);
  r.representation = model == f;
  if (!r.representation) {
    f.for_each([&](Subset s) {
      if (!r.missing && !model.contains(s)) r.missing = s;
    });
    model.for_each([&](Subset s) {
      if (!r.missing && !f.contains(s)) r.missing = s;
    });
  }

  // Coherent sets of wffs over the full algebra are the principal filters above a non-zero table.
  r.smallest = f.subset_of(model);
  if (rows <= 16) {
    for (TruthTable m = 1; m <= all && r.smallest; ++m) {
      std::vector<TruthTable> up;
      for (std::size_t c = 0; c < space.class_tables.size(); ++c)
        if ((m & ~space.class_tables[c]) == 0) up.push_back(space.class_tables[c]);
      if (!f.subset_of(model_of_tables(space, up))) continue;
      for (auto t : tables)
        if ((m & ~t) != 0) r.smallest = false;
      if (m == all) break;
    }
  }
  return r;
}

}  // namespace desire::logic
