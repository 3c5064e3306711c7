#include <algorithm>
#include <set>

#include "common.hpp"
#include "desire/core.hpp"
#include "desire/logic.hpp"

namespace desire::lawcheck {

using namespace desire::logic;

namespace {

std::string show_tables(const LogicUniverse& lu, const std::vector<TruthTable>& tables) {
  std::string out = "D(F):";
  for (auto t : tables) {
    auto c = lu.class_of(t);
    out += " " + (c ? to_string(lu.classes()[*c].representative) : "table " + std::to_string(t));
  }
  return out + "\n";
}

std::string show_set(const Universe& cu, Subset s) {
  std::string names;
  ThingSet::from_mask(cu.size(), s).for_each([&](std::size_t i) { names += (names.empty() ? "" : ", ") + cu.name(i); });
  return "{" + names + "}";
}

std::string show_minimal(const Universe& cu, const SetFamily& f) {
  auto members = f.members();
  std::string out = "F generated by:";
  for (Subset s : members)
    if (std::none_of(members.begin(), members.end(), [&](Subset t) { return t != s && (t & ~s) == 0; }))
      out += " " + show_set(cu, s);
  return out + "\n";
}

}  // namespace

Report run_logic(const Options& options) {
  auto rng = suite_rng(options, 4);
  const EngineConfig& cfg = options.engine;

  Law laws("logic", "closure laws C1-C3 on small wff universes and the class universe");
  Law sampled("logic", "closure laws C1-C3 sampled on the depth 2 universe over p, q");
  Law theories("logic", "coherent SDTs are exactly the theories of non-empty valuation sets");
  Law lindenbaum("logic", "Lindenbaum operations agree with truth tables");
  Law filters("logic", "coherent SDTs give proper filters of the Lindenbaum algebra");
  Law enumeration("logic", "class SDFS enumeration matches the coherent SDS scan on one atom");
  Law sdfs_coherent("logic", "enumerated class SDFSes are finitely coherent");
  Law d_coherent("logic", "D(F) is deductively closed and consistent");
  Law model_below("logic", "S^(D(F)) is contained in F");
  Law representation("logic", "disjunction representation: F = S^(D(F))");

  const LogicUniverse small({"p"}, 1);
  const LogicUniverse one({"p"}, 2);
  const LogicUniverse pq({"p", "q"}, 2);

  for (const Universe* u : {&small.universe(), &one.class_universe(), &pq.class_universe()}) {
    auto bad = check_closure_laws(*u);
    laws.expect(!bad, [&] { return in_universe(*u, describe(*bad) + "\n"); });
    if (u->size() > 12) continue;
    auto infinite = check_finitary(*u);
    laws.expect(!infinite,
                [&] { return in_universe(*u, "not finitary at " + u->format(u->from_mask(*infinite)) + "\n"); });
  }

  const Universe& big = pq.universe();
  const std::size_t samples = scaled(options.budget, 30, 300, 3000);
  for (std::size_t i = 0; i < samples; ++i) {
    ThingSet a(big.size()), b(big.size());
    for (std::size_t t = 0; t < big.size(); ++t) {
      if (rng() % 60 == 0) a.insert(t);
      if (rng() % 40 == 0) b.insert(t);
    }
    b |= a;
    ThingSet ca = big.closure(a), cb = big.closure(b);
    sampled.expect(a.subset_of(ca) && ca.subset_of(cb) && big.closure(ca) == ca,
                   [&] { return "A: " + pq.format(a) + "\nB: " + pq.format(b) + "\n"; });
  }

  for (const LogicUniverse* lu : {&one, &pq}) {
    auto coherent = enumerate_coherent_sdts_lectic(lu->universe(), 1u << 16);
    std::set<TruthTable> models;
    for (const auto& d : coherent) {
      TruthTable m = lu->valuations();
      d.for_each([&](std::size_t i) { m &= lu->tables()[i]; });
      theories.expect(m != 0 && lu->consequences(m) == d, [&] { return "set: " + lu->format(d) + "\n"; });
      models.insert(m);

      // Up-set of the model table, restricted to realized classes.
      std::set<TruthTable> held;
      d.for_each([&](std::size_t i) { held.insert(lu->tables()[i]); });
      for (const auto& c : lu->classes())
        filters.expect(((m & ~c.table) == 0) == (held.count(c.table) > 0), [&] {
          return "set: " + lu->format(d) + "\nclass: " + to_string(c.representative) + "\n";
        });
    }
    const std::size_t expected = (std::size_t{1} << (std::size_t{1} << lu->atoms().size())) - 1;
    theories.expect(models.size() == expected && coherent.size() == expected, [&] {
      return std::to_string(coherent.size()) + " coherent sets, " + std::to_string(models.size()) +
             " distinct model sets, expected " + std::to_string(expected) + "\n";
    });

    const auto& cs = lu->classes();
    for (std::size_t a = 0; a < cs.size(); ++a) {
      auto where = [&](const char* what, std::size_t b) {
        return [&, what, b] {
          return std::string(what) + " of " + to_string(cs[a].representative) + " and " +
                 to_string(cs[b].representative) + "\n";
        };
      };
      auto check = [&](auto op, TruthTable want, const char* what, std::size_t b) {
        auto found = lu->class_of(want);
        try {
          std::size_t got = op();
          lindenbaum.expect(found && got == *found, where(what, b));
        } catch (const CapacityError&) {
          lindenbaum.expect(!found, where(what, b));
        }
      };
      check([&] { return lu->complement(a); }, lu->valuations() & ~cs[a].table, "complement", a);
      for (std::size_t b = 0; b < cs.size(); ++b) {
        check([&] { return lu->meet(a, b); }, cs[a].table & cs[b].table, "meet", b);
        check([&] { return lu->join(a, b); }, cs[a].table | cs[b].table, "join", b);
        lindenbaum.expect(lu->leq(a, b) == ((cs[a].table & ~cs[b].table) == 0), where("order", b));
      }
    }
  }

  {
    ClassSpace space(one);
    auto bfs = enumerate_class_sdfses(space);
    auto scan = enumerate_coherent_sdses(one.class_universe(), CoherenceMode::finite, cfg);
    std::set<std::vector<Subset>> a, b;
    for (const auto& f : bfs) a.insert(f.members());
    for (const auto& k : scan) b.insert(k.members());
    enumeration.expect(a == b, [&] {
      return in_universe(one.class_universe(), "search found " + std::to_string(a.size()) + ", scan found " +
                                                   std::to_string(b.size()) + "\n");
    });
  }

  const LogicUniverse& lu = options.budget == Budget::tiny ? one : pq;
  ClassSpace space(lu);
  const Universe& cu = lu.class_universe();
  auto families = enumerate_class_sdfses(space);
  std::stable_sort(families.begin(), families.end(),
                   [](const Sdfs& a, const Sdfs& b) { return a.members().size() < b.members().size(); });
  for (const auto& f : families) {
    auto family = [&] {
      return "atoms: " + std::to_string(lu.atoms().size()) + ", depth " + std::to_string(lu.depth()) +
             "\n" + show_minimal(cu, f);
    };
    try {
      auto v = check_sds_coherent(cu, Sds(f), CoherenceMode::finite, cfg);
      sdfs_coherent.expect(v.ok(), [&] { return family() + describe(cu, v) + "\n"; });
    } catch (const CapacityError&) {
    }

    auto tables = disjunction_tables(space, f);
    auto r = check_disjunction_representation(space, f);
    d_coherent.expect(r.coherent, [&] { return family() + show_tables(lu, tables); });
    Sdfs model = model_of_tables(space, tables);
    model_below.expect(model.subset_of(f), [&] { return family() + show_tables(lu, tables); });
    representation.expect(r.representation, [&] {
      std::string out = family() + show_tables(lu, tables);
      if (r.missing) out += "in F but not in S^(D(F)): " + show_set(cu, *r.missing) + "\n";
      return out;
    });
  }

  Report r;
  for (Law* law : {&laws, &sampled, &theories, &lindenbaum, &filters, &enumeration, &sdfs_coherent, &d_coherent,
                   &model_below, &representation})
    law->finish(r);
  return r;
}

}  // namespace desire::lawcheck
