#include "desire/sds.hpp"

#include <algorithm>
#include <map>

#include "desire/errors.hpp"
#include "desire/selection.hpp"

namespace desire {

namespace {

Subset cl(const Universe& u, Subset s) {
  if (u.tabulated()) return u.closure_mask(s);
  return static_cast<Subset>(u.closure(u.from_mask(s)).mask());
}

Subset full_mask(std::size_t n) { return static_cast<Subset>((std::uint64_t{1} << n) - 1); }

std::vector<ThingSet> to_thing_sets(const Universe& u, const std::vector<Subset>& w) {
  std::vector<ThingSet> out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(u.from_mask(s));
  return out;
}

// Distinct closures cl(sigma(W)), one per selection map (duplicates kept when keep_all).
std::vector<Subset> selection_closures(const Universe& u, const std::vector<Subset>& w, bool keep_all) {
  std::vector<Subset> out;
  for_each_selection(as_set(to_thing_sets(u, w)), u.size(),
                     [&](const std::vector<std::size_t>&, const ThingSet& image) {
                       out.push_back(cl(u, static_cast<Subset>(image.mask())));
                     });
  if (!keep_all) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

SetFamily hitting_sets(std::size_t n, const std::vector<Subset>& targets) {
  std::vector<Subset> minimal;
  for (auto c : targets) {
    bool dominated = false;
    for (auto d : targets)
      if (d != c && (d & ~c) == 0) dominated = true;
    if (!dominated) minimal.push_back(c);
  }
  SetFamily out(n);
  for (Subset r = 0; r <= full_mask(n); ++r) {
    bool hits = true;
    for (auto c : minimal)
      if ((r & c) == 0) {
        hits = false;
        break;
      }
    if (hits) out.insert(r);
    if (r == full_mask(n)) break;
  }
  return out;
}

// Production from W under the configured axioms. W may contain ∅ when K1 is
// disabled; then no selection exists.
SetFamily produce(const Universe& u, const std::vector<Subset>& w, const EngineConfig& config) {
  const bool has_empty = std::find(w.begin(), w.end(), Subset{0}) != w.end();
  if (config.on(Axiom::k2)) {
    if (has_empty) return Sds::top(u.size());
    return production_step(u, w);
  }
  if (has_empty) {
    SetFamily only_empty(u.size());
    only_empty.insert(Subset{0});
    return only_empty;
  }
  return raw_production(u, w);
}

template <class F>
void for_each_subfamily(const std::vector<Subset>& members, F&& f) {
  const std::size_t m = members.size();
  std::vector<Subset> w;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    w.clear();
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1u) w.push_back(members[i]);
    if (!f(w)) return;
  }
}

// Subfamilies ordered by size, then lexicographically.
template <class F>
void for_each_subfamily_by_size(const std::vector<Subset>& members, F&& f) {
  const std::size_t m = members.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Subset> w;
      for (auto i : idx) w.push_back(members[i]);
      if (!f(w)) return;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

Violation k5_violation(const Universe& u, const SetFamily& k, const std::vector<Subset>& w,
                       const SetFamily& produced) {
  Violation v;
  v.axiom = Axiom::k5;
  v.generators = w;
  Subset missing = 0;
  std::size_t best = 64;
  produced.for_each([&](Subset r) {
    if (k.contains(r)) return;
    std::size_t c = static_cast<std::size_t>(__builtin_popcount(r));
    if (c < best) best = c, missing = r;
  });
  v.sets = {missing};
  if (std::find(w.begin(), w.end(), Subset{0}) == w.end()) {
    auto wset = as_set(to_thing_sets(u, w));
    for_each_selection(wset, u.size(), [&](const std::vector<std::size_t>& picked, const ThingSet& image) {
      Subset c = cl(u, static_cast<Subset>(image.mask()));
      SelectionChoice choice;
      choice.picked = picked;
      choice.produced_thing = static_cast<std::size_t>(__builtin_ctz(c & missing));
      v.choices.push_back(std::move(choice));
    });
  }
  return v;
}

std::optional<Violation> check_k5(const Universe& u, const SetFamily& k, CoherenceMode mode,
                                  const EngineConfig& config) {
  std::optional<Violation> found;
  auto probe = [&](const std::vector<Subset>& w) {
    SetFamily p = produce(u, w, config);
    if (!p.subset_of(k)) {
      found = k5_violation(u, k, w, p);
      return false;
    }
    return true;
  };
  if (mode == CoherenceMode::full) {
    auto members = k.members();
    if (members.size() > 16) throw CapacityError("full-mode K5 check is limited to SDSes with 16 members");
    for_each_subfamily_by_size(members, probe);
    return found;
  }
  // Replacing a member by a smaller member, or adding members, only enlarges
  // what W produces, so W ranging over subfamilies of the minimal members
  // covers every finite W ⊆ K.
  auto mins = config.on(Axiom::k2) ? minimal_members(k) : k.members();
  if (mins.empty()) return std::nullopt;
  if (config.on(Axiom::k2)) {
    SetFamily p = produce(u, mins, config);
    if (p.subset_of(k)) return std::nullopt;
    if (mins.size() > 20) return k5_violation(u, k, mins, p);
  } else if (mins.size() > 16) {
    throw CapacityError("K5 check without K2 is limited to SDSes with 16 members");
  }
  for_each_subfamily_by_size(mins, probe);
  return found;
}

}  // namespace

std::string axiom_name(Axiom a, bool finite_sets) {
  return std::string(finite_sets ? "F" : "K") + std::to_string(static_cast<int>(a) + 1);
}

std::string describe(const Universe& u, const Verdict& v, bool finite_sets) {
  if (v.ok()) return "ok";
  const Violation& x = *v.violation;
  std::string out = "violated " + axiom_name(x.axiom, finite_sets) + ":";
  auto set = [&](Subset s) { return format_subset_braced(u, s); };
  switch (x.axiom) {
    case Axiom::k1:
      out += " {} is a member";
      break;
    case Axiom::k2:
      out += " " + set(x.sets[0]) + " is a member but its superset " + set(x.sets[1]) + " is not";
      break;
    case Axiom::k3:
      out += " " + set(x.sets[0]) + " is a member but " + set(x.sets[1]) + " is not";
      break;
    case Axiom::k4:
      out += " " + set(x.sets[0]) + " is missing";
      break;
    case Axiom::k5: {
      out += " W = [";
      for (std::size_t i = 0; i < x.generators.size(); ++i) out += (i ? " " : "") + set(x.generators[i]);
      out += "] produces " + set(x.sets[0]) + " which is missing;";
      for (const auto& c : x.choices) {
        out += " (";
        for (std::size_t i = 0; i < c.picked.size(); ++i) out += (i ? " " : "") + u.name(c.picked[i]);
        out += " => " + u.name(c.produced_thing) + ")";
      }
      break;
    }
  }
  return out;
}

Verdict check_sds_coherent(const Universe& u, const Sds& k, CoherenceMode mode, const EngineConfig& config) {
  const std::size_t n = u.size();
  if (k.things() != n) throw InputError("SDS does not belong to this universe");
  if (config.on(Axiom::k1) && k.contains(Subset{0})) return {Violation{Axiom::k1, {0}, {}, {}}};
  if (config.on(Axiom::k2)) {
    std::optional<Violation> v;
    k.for_each([&](Subset s) {
      if (v) return;
      for (std::size_t t = 0; t < n; ++t) {
        Subset bigger = s | (Subset{1} << t);
        if (bigger != s && !k.contains(bigger)) {
          v = Violation{Axiom::k2, {s, bigger}, {}, {}};
          return;
        }
      }
    });
    if (v) return {v};
  }
  if (config.on(Axiom::k3)) {
    const Subset forbidden = static_cast<Subset>(u.forbidden().mask());
    std::optional<Violation> v;
    k.for_each([&](Subset s) {
      if (!v && !k.contains(s & ~forbidden)) v = Violation{Axiom::k3, {s, s & ~forbidden}, {}, {}};
    });
    if (v) return {v};
  }
  if (config.on(Axiom::k4)) {
    for (auto t : u.always_desirable().members()) {
      Subset single = Subset{1} << t;
      if (!k.contains(single)) return {Violation{Axiom::k4, {single}, {}, {}}};
    }
  }
  if (config.on(Axiom::k5)) {
    if (auto v = check_k5(u, k, mode, config)) return {v};
  }
  return {};
}

Verdict check_sdfs_coherent(const Universe& u, const Sdfs& f, CoherenceMode mode, const EngineConfig& config) {
  return check_sds_coherent(u, Sds(f), mode, config);
}

Sds production_step(const Universe& u, const std::vector<Subset>& w) {
  for (auto s : w)
    if (s == 0) throw InputError("the empty set admits no selection");
  return Sds(hitting_sets(u.size(), selection_closures(u, w, false)));
}

Sds production_step(const Universe& u, const std::vector<ThingSet>& w) {
  std::vector<Subset> subsets;
  for (const auto& s : w) subsets.push_back(to_subset(s));
  return production_step(u, subsets);
}

Sds raw_production(const Universe& u, const std::vector<Subset>& w) {
  const std::size_t n = u.size();
  for (auto s : w)
    if (s == 0) throw InputError("the empty set admits no selection");
  // Reachable partial unions after choosing t_sigma for a prefix of the selections.
  std::vector<char> reach(std::size_t{1} << n, 0), next(reach.size());
  reach[0] = 1;
  for (Subset c : selection_closures(u, w, true)) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t r = 0; r < reach.size(); ++r) {
      if (!reach[r]) continue;
      for (Subset bits = c; bits != 0; bits &= bits - 1) next[r | (bits & -bits)] = 1;
    }
    reach.swap(next);
  }
  Sds out(n);
  for (std::size_t r = 0; r < reach.size(); ++r)
    if (reach[r]) out.insert(static_cast<Subset>(r));
  return out;
}

std::vector<Subset> minimal_members(const SetFamily& k) {
  const std::size_t n = k.things();
  const std::size_t count = std::size_t{1} << n;
  // below[m]: some member is a subset of m.
  std::vector<char> below(count, 0);
  k.for_each([&](Subset s) { below[s] = 1; });
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t m = 0; m < count; ++m)
      if ((m >> t) & 1u) below[m] |= below[m & ~(std::size_t{1} << t)];
  std::vector<Subset> out;
  k.for_each([&](Subset s) {
    for (Subset bits = s; bits != 0; bits &= bits - 1)
      if (below[s & ~(bits & -bits)]) return;
    out.push_back(s);
  });
  return out;
}

SetFamily up_closure(const SetFamily& k) {
  const std::size_t n = k.things();
  SetFamily out = k;
  for (std::size_t t = 0; t < n; ++t) {
    const Subset bit = Subset{1} << t;
    for (Subset m = 0; m < (Subset{1} << n); ++m)
      if (!(m & bit) && out.contains(m)) out.insert(m | bit);
  }
  return out;
}

Sds sds_closure(const Universe& u, const SetFamily& w, const EngineConfig& config) {
  const std::size_t n = u.size();
  if (w.things() != n) throw InputError("SDS does not belong to this universe");
  const Subset forbidden = static_cast<Subset>(u.forbidden().mask());
  SetFamily k = w;
  while (true) {
    SetFamily before = k;
    if (config.on(Axiom::k3)) {
      for (auto s : k.members()) k.insert(s & ~forbidden);
    }
    if (config.on(Axiom::k2)) k = up_closure(k);
    if (config.on(Axiom::k4)) u.always_desirable().for_each([&](std::size_t t) { k.insert(Subset{1} << t); });
    if (config.on(Axiom::k1) && k.contains(Subset{0})) return Sds::top(n);
    if (config.on(Axiom::k5) && !k.empty()) {
      if (config.on(Axiom::k2)) {
        k |= produce(u, minimal_members(k), config);
      } else {
        auto members = k.members();
        if (members.size() > 16) throw CapacityError("closure without K2 is limited to 16 members");
        SetFamily produced(n);
        for_each_subfamily(members, [&](const std::vector<Subset>& sub) {
          produced |= produce(u, sub, config);
          return true;
        });
        k |= produced;
      }
    }
    if (config.on(Axiom::k1) && k.contains(Subset{0})) return Sds::top(n);
    if (k == before) break;
  }
  return Sds(k);
}

Sdfs sdfs_closure(const Universe& u, const SetFamily& w, const EngineConfig& config) {
  return Sdfs(sds_closure(u, w, config));
}

namespace {

class ModelIntersections {
 public:
  explicit ModelIntersections(const EventSpace& space) : space_(space) {}

  const Sds& of(Event e) {
    auto it = cache_.find(e.bits);
    if (it != cache_.end()) return it->second;
    const Universe& u = space_.universe();
    Sds result = Sds::top(u.size());
    for (std::size_t i = 0; i < space_.size(); ++i)
      if (e.contains(i)) result &= sdsify(u, space_.coherent()[i]);
    return cache_.emplace(e.bits, std::move(result)).first->second;
  }

 private:
  const EventSpace& space_;
  std::map<std::uint64_t, Sds> cache_;
};

}  // namespace

Sds conjunctive_closure(const EventSpace& space, const SetFamily& w) {
  const std::size_t n = space.universe().size();
  if (w.things() != n) throw InputError("SDS does not belong to this universe");
  auto members = w.members();
  ModelIntersections models(space);
  if (members.size() > 16) {
    // The union is directed and W is finite, so V = W attains it.
    Event e = event_of(space, w);
    if (e.empty()) return Sds::top(n);
    return models.of(e);
  }
  Sds result(n);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << members.size()); ++pick) {
    Event e = space.all();
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((pick >> i) & 1u) e = e & basic_event(space, members[i]);
    if (e.empty()) return Sds::top(n);
    result |= models.of(e);
  }
  return result;
}

Sds conjunctive_closure(const Universe& u, const SetFamily& w) { return conjunctive_closure(EventSpace(u), w); }

Sds intersection_closure(const EventSpace& space, const SetFamily& w) {
  const Universe& u = space.universe();
  Event e = event_of(space, w);
  if (e.empty()) return Sds::top(u.size());
  Sds result = Sds::top(u.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    if (e.contains(i)) result &= sdsify(u, space.coherent()[i]);
  return result;
}

ThingSet sdtify(const Universe& u, const SetFamily& k) {
  ThingSet out = u.empty_set();
  for (std::size_t t = 0; t < u.size(); ++t)
    if (k.contains(Subset{1} << t)) out.insert(t);
  return out;
}

Sds sdsify(const Universe& u, const ThingSet& d) {
  const std::size_t n = u.size();
  const Subset dm = to_subset(d);
  Sds out(n);
  for (Subset s = 0; s <= full_mask(n); ++s) {
    if (s & dm) out.insert(s);
    if (s == full_mask(n)) break;
  }
  return out;
}

Sdfs sdfsify(const Universe& u, const ThingSet& d) { return Sdfs(sdsify(u, d)); }

bool is_conjunctive(const Universe& u, const Sds& k) { return k == sdsify(u, sdtify(u, k)); }

Sds conjunctive_part(const Universe& u, const Sds& k) { return sdsify(u, sdtify(u, k)); }

std::optional<std::pair<Subset, Subset>> completeness_witness(const SetFamily& k) {
  std::optional<std::pair<Subset, Subset>> found;
  k.for_each([&](Subset m) {
    if (found) return;
    for (Subset s1 = 0;; s1 = ((s1 | ~m) + 1) & m) {
      if (!k.contains(s1)) {
        const Subset rest = m & ~s1;
        for (Subset extra = 0;; extra = ((extra | ~s1) + 1) & s1) {
          const Subset s2 = rest | extra;
          if (!k.contains(s2)) {
            found = std::make_pair(s1, s2);
            return;
          }
          if (extra == s1) break;
        }
      }
      if (s1 == m) break;
    }
  });
  return found;
}

bool is_complete(const SetFamily& k) { return !completeness_witness(k).has_value(); }

Sdfs finite_part(const Sds& k) { return Sdfs(static_cast<const SetFamily&>(k)); }

Sds finitary_part(const Sds& k) { return up_close(finite_part(k)); }

Sds up_close(const Sdfs& f) { return Sds(up_closure(f)); }

bool is_finitary(const Sds& k) {
  // Every member is itself a finite desirable subset of itself.
  bool finitary = true;
  k.for_each([&](Subset s) { finitary = finitary && finite_part(k).contains(s); });
  return finitary;
}

std::vector<Sds> enumerate_complete_coherent_extensions(const EventSpace& space, const Sds& k) {
  const Universe& u = space.universe();
  if (event_of(space, k).empty()) throw InconsistencyError("inconsistent SDS", format_family_inline(u, k));
  std::vector<Sds> out;
  for (const auto& d : space.coherent()) {
    Sds model = sdsify(u, d);
    if (k.subset_of(model)) out.push_back(std::move(model));
  }
  if (u.size() <= 3) {
    const std::size_t subsets = std::size_t{1} << u.size();
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
      Sds candidate(u.size());
      for (std::size_t s = 0; s < subsets; ++s)
        if ((fam >> s) & 1u) candidate.insert(static_cast<Subset>(s));
      if (!k.subset_of(candidate) || is_conjunctive(u, candidate)) continue;
      if (!is_complete(candidate)) continue;
      if (check_sds_coherent(u, candidate, CoherenceMode::finite).ok()) out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::vector<Sds> enumerate_coherent_sdses(const Universe& u, CoherenceMode mode, const EngineConfig& config) {
  if (u.size() > 4) throw CapacityError("SDS enumeration by family scan is limited to 4 things");
  const std::size_t subsets = std::size_t{1} << u.size();
  std::vector<Sds> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    Sds candidate(u.size());
    for (std::size_t s = 0; s < subsets; ++s)
      if ((fam >> s) & 1u) candidate.insert(static_cast<Subset>(s));
    if (check_sds_coherent(u, candidate, mode, config).ok()) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace desire
