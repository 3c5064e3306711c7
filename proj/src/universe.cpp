#include "desire/universe.hpp"

#include <unordered_map>

#include "desire/core.hpp"
#include "desire/errors.hpp"

namespace desire {

struct Universe::Impl {
  std::vector<std::string> things;
  std::unordered_map<std::string, std::size_t> index;
  ClosureSpec spec;
  ThingSet forbidden;
  ThingSet always;
  std::vector<std::uint32_t> table;  // closures of all subsets when tabulated

  ThingSet compute(const ThingSet& s) const {
    const std::size_t n = things.size();
    if (!table.empty()) return ThingSet::from_mask(n, table[s.mask()]);
    if (auto* rules = std::get_if<RuleSet>(&spec)) {
      ThingSet out = s;
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& r : rules->rules) {
          if (!out.contains(r.conclusion) && r.premises.subset_of(out)) {
            out.insert(r.conclusion);
            changed = true;
          }
        }
      }
      return out;
    }
    if (auto* backend = std::get_if<Backend>(&spec)) {
      ThingSet out = backend->hook(s);
      if (out.universe_size() != n) throw InputError("backend '" + backend->name + "' returned a set of the wrong size");
      return out;
    }
    // ClosureTable is always tabulated.
    return ThingSet::from_mask(n, std::get<ClosureTable>(spec).image[s.mask()]);
  }
};

Universe::Universe(std::vector<std::string> things, ClosureSpec closure, ThingSet forbidden) {
  auto impl = std::make_shared<Impl>();
  const std::size_t n = things.size();
  if (n == 0) throw InputError("a universe needs at least one thing");
  for (std::size_t i = 0; i < n; ++i) {
    if (things[i].empty()) throw InputError("empty thing identifier");
    if (!impl->index.emplace(things[i], i).second) throw InputError("duplicate thing '" + things[i] + "'");
  }
  if (forbidden.universe_size() != n) throw InputError("forbidden set does not match the universe size");

  if (auto* rules = std::get_if<RuleSet>(&closure)) {
    for (const auto& r : rules->rules) {
      if (r.premises.universe_size() != n || r.conclusion >= n) throw InputError("rule refers to things outside the universe");
    }
  } else if (auto* table = std::get_if<ClosureTable>(&closure)) {
    if (n > kMaxTableThings) throw CapacityError("closure tables are limited to " + std::to_string(kMaxTableThings) + " things");
    if (table->image.size() != (std::size_t{1} << n)) throw InputError("closure table must list the closure of every subset");
    const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (auto img : table->image)
      if (img & ~all) throw InputError("closure table refers to things outside the universe");
  } else if (!std::get<Backend>(closure).hook) {
    throw InputError("backend closure has no hook");
  }

  impl->things = std::move(things);
  impl->spec = std::move(closure);
  impl->forbidden = std::move(forbidden);

  if (n <= kMaxTabulatedThings) {
    std::vector<std::uint32_t> table(std::size_t{1} << n);
    if (auto* given = std::get_if<ClosureTable>(&impl->spec)) {
      table = given->image;
    } else {
      for (std::size_t m = 0; m < table.size(); ++m)
        table[m] = static_cast<std::uint32_t>(impl->compute(ThingSet::from_mask(n, m)).mask());
    }
    if (std::holds_alternative<ClosureTable>(impl->spec)) {
      auto violation = check_closure_laws(n, [&](std::uint32_t m) { return table[m]; });
      if (violation) throw InputError("closure table violates " + describe(*violation));
    }
    impl->table = std::move(table);
  }

  impl->always = impl->compute(ThingSet(n));
  if (impl->always.intersects(impl->forbidden))
    throw InputError("cl(empty set) contains forbidden things");
  impl_ = std::move(impl);
}

std::size_t Universe::size() const { return impl_->things.size(); }
const std::vector<std::string>& Universe::things() const { return impl_->things; }
const std::string& Universe::name(std::size_t thing) const { return impl_->things.at(thing); }

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown thing '" + std::string(name) + "'");
  return *i;
}

ThingSet Universe::make_set(const std::vector<std::string>& names) const {
  ThingSet s = empty_set();
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

const ThingSet& Universe::forbidden() const { return impl_->forbidden; }
const ThingSet& Universe::always_desirable() const { return impl_->always; }

ThingSet Universe::closure(const ThingSet& s) const {
  if (s.universe_size() != size()) throw InputError("set does not belong to this universe");
  return impl_->compute(s);
}

std::uint32_t Universe::closure_mask(std::uint32_t s) const { return impl_->table[s]; }
bool Universe::tabulated() const { return !impl_->table.empty(); }

const ClosureSpec& Universe::closure_spec() const { return impl_->spec; }

std::string Universe::format_members(const ThingSet& s) const {
  std::string out;
  s.for_each([&](std::size_t t) {
    if (!out.empty()) out += ' ';
    out += impl_->things[t];
  });
  return out;
}

std::string Universe::format(const ThingSet& s) const { return "{" + format_members(s) + "}"; }

}  // namespace desire
