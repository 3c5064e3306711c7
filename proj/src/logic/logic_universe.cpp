#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "desire/logic.hpp"

namespace desire::logic {

namespace {

TruthTable meet_of(const std::vector<TruthTable>& tables, const ThingSet& s, TruthTable all) {
  TruthTable m = all;
  s.for_each([&](std::size_t i) { m &= tables[i]; });
  return m;
}

Universe placeholder() { return Universe({"_"}, RuleSet{}, ThingSet(1)); }

}  // namespace

Universe make_logic_universe(const std::vector<Wff>& wffs, const std::vector<TruthTable>& tables,
                             std::size_t atom_count) {
  const TruthTable all = all_valuations(atom_count);
  std::vector<std::string> names;
  ThingSet forbidden(wffs.size());
  for (std::size_t i = 0; i < wffs.size(); ++i) {
    names.push_back(to_string(wffs[i]));
    if (tables[i] == 0) forbidden.insert(i);
  }
  Backend hook{"propositional", [tables, all](const ThingSet& s) {
                 const TruthTable m = meet_of(tables, s, all);
                 ThingSet out(tables.size());
                 for (std::size_t i = 0; i < tables.size(); ++i)
                   if ((m & ~tables[i]) == 0) out.insert(i);
                 return out;
               }};
  return Universe(std::move(names), std::move(hook), std::move(forbidden));
}

LogicUniverse::LogicUniverse(std::vector<std::string> atoms, std::size_t depth, std::size_t max_things)
    : atoms_(std::move(atoms)), depth_(depth), universe_(placeholder()), class_universe_(placeholder()) {
  if (atoms_.empty()) throw InputError("at least one atom is needed");
  const TruthTable all = all_valuations(atoms_.size());
  std::set<std::string> seen_atoms;
  for (const auto& a : atoms_) {
    Wff w = parse_wff(a);
    if (w.op() != Op::atom) throw InputError("'" + a + "' is not an atom name");
    if (!seen_atoms.insert(a).second) throw InputError("duplicate atom '" + a + "'");
  }

  std::set<std::string> seen;
  std::vector<std::vector<Wff>> levels;
  std::size_t total = 0;
  auto admit = [&](std::vector<Wff>& level, Wff w) {
    w = canonical(w);
    if (!seen.insert(to_string(w)).second) return;
    level.push_back(std::move(w));
    if (++total > max_things)
      throw CapacityError("wff universe exceeds " + std::to_string(max_things) + " formulas at depth " +
                          std::to_string(depth_));
  };
  levels.emplace_back();
  for (const auto& a : atoms_) admit(levels[0], Wff::atom(a));
  for (std::size_t d = 1; d <= depth_; ++d) {
    std::vector<Wff> below;
    for (const auto& l : levels)
      for (const auto& w : l) below.push_back(w);
    std::vector<Wff> level;
    for (const auto& w : levels[d - 1]) admit(level, Wff::negation(w));
    for (const auto& x : below)
      for (const auto& y : below) {
        if (x.depth() != d - 1 && y.depth() != d - 1) continue;
        admit(level, Wff::binary(Op::conjunction, x, y));
        admit(level, Wff::binary(Op::disjunction, x, y));
        admit(level, Wff::binary(Op::implication, x, y));
      }
    levels.push_back(std::move(level));
  }
  for (auto& level : levels) {
    std::vector<std::pair<std::string, Wff>> keyed;
    for (auto& w : level) keyed.emplace_back(to_string(w), w);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return std::make_pair(a.first.size(), a.first) < std::make_pair(b.first.size(), b.first);
    });
    for (auto& [key, w] : keyed) {
      index_.emplace(key, keys_.size());
      keys_.push_back(key);
      tables_.push_back(truth_table(w, atoms_));
      wffs_.push_back(w);
    }
  }

  std::map<TruthTable, std::size_t> by_table;
  for (std::size_t i = 0; i < wffs_.size(); ++i) {
    auto [it, fresh] = by_table.emplace(tables_[i], classes_.size());
    if (fresh) classes_.push_back({wffs_[i], tables_[i], {}});
    classes_[it->second].members.push_back(i);
  }

  universe_ = make_logic_universe(wffs_, tables_, atoms_.size());

  std::vector<std::string> class_names;
  ThingSet class_forbidden(classes_.size());
  std::vector<TruthTable> class_tables;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    class_names.push_back(to_string(classes_[c].representative));
    class_tables.push_back(classes_[c].table);
    if (classes_[c].table == 0) class_forbidden.insert(c);
  }
  if (classes_.size() <= kMaxTableThings) {
    ClosureTable table;
    table.image.resize(std::size_t{1} << classes_.size());
    for (std::size_t m = 0; m < table.image.size(); ++m) {
      const TruthTable meet = meet_of(class_tables, ThingSet::from_mask(classes_.size(), m), all);
      std::uint32_t image = 0;
      for (std::size_t c = 0; c < classes_.size(); ++c)
        if ((meet & ~class_tables[c]) == 0) image |= std::uint32_t{1} << c;
      table.image[m] = image;
    }
    class_universe_ = Universe(std::move(class_names), std::move(table), std::move(class_forbidden));
  } else {
    class_universe_ = make_logic_universe(
        [&] {
          std::vector<Wff> reps;
          for (const auto& c : classes_) reps.push_back(c.representative);
          return reps;
        }(),
        class_tables, atoms_.size());
  }
}

std::optional<std::size_t> LogicUniverse::find(const Wff& w) const {
  auto it = index_.find(to_string(canonical(w)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LogicUniverse::index_of(const Wff& w) const {
  if (auto i = find(w)) return *i;
  truth_table(w, atoms_);  // unknown atoms are an input error, not a capacity one
  throw CapacityError("wff '" + to_string(canonical(w)) + "' is outside the depth-" + std::to_string(depth_) +
                      " universe");
}

ThingSet LogicUniverse::make_set(const std::vector<Wff>& ws) const {
  ThingSet out(size());
  for (const auto& w : ws) out.insert(index_of(w));
  return out;
}

ThingSet LogicUniverse::consequences(TruthTable t) const {
  ThingSet out(size());
  for (std::size_t i = 0; i < size(); ++i)
    if ((t & ~tables_[i]) == 0) out.insert(i);
  return out;
}

std::optional<std::size_t> LogicUniverse::class_of(TruthTable t) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].table == t) return c;
  return std::nullopt;
}

std::size_t LogicUniverse::class_index(const Wff& w) const {
  const TruthTable t = truth_table(w, atoms_);
  if (auto c = class_of(t)) return *c;
  throw CapacityError("no wff equivalent to '" + to_string(w) + "' within depth " + std::to_string(depth_));
}

namespace {

std::size_t realized(const LogicUniverse& lu, TruthTable t, const Wff& witness) {
  if (auto c = lu.class_of(t)) return *c;
  throw CapacityError("no wff equivalent to '" + to_string(witness) + "' within depth " + std::to_string(lu.depth()));
}

}  // namespace

std::size_t LogicUniverse::meet(std::size_t a, std::size_t b) const {
  return realized(*this, classes_[a].table & classes_[b].table,
                  Wff::binary(Op::conjunction, classes_[a].representative, classes_[b].representative));
}

std::size_t LogicUniverse::join(std::size_t a, std::size_t b) const {
  return realized(*this, classes_[a].table | classes_[b].table,
                  Wff::binary(Op::disjunction, classes_[a].representative, classes_[b].representative));
}

std::size_t LogicUniverse::complement(std::size_t a) const {
  return realized(*this, valuations() & ~classes_[a].table, Wff::negation(classes_[a].representative));
}

bool LogicUniverse::leq(std::size_t a, std::size_t b) const {
  return (classes_[a].table & ~classes_[b].table) == 0;
}

std::string LogicUniverse::format(const ThingSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ", ") + keys_[i];
    first = false;
  });
  return out + "}";
}

ThingSet logic_closure(const LogicUniverse& lu, const std::vector<Wff>& premises) {
  TruthTable m = lu.valuations();
  for (const auto& p : premises) m &= truth_table(p, lu.atoms());
  return lu.consequences(m);
}

}  // namespace desire::logic
