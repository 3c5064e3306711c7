#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "desire/core.hpp"
#include "desire/logic.hpp"

using namespace desire;
using namespace desire::logic;

namespace {

// Independent evaluator over a named valuation.
bool eval(const Wff& w, const std::map<std::string, bool>& v) {
  switch (w.op()) {
    case Op::atom:
      return v.at(w.name());
    case Op::negation:
      return !eval(w.left(), v);
    case Op::conjunction:
      return eval(w.left(), v) && eval(w.right(), v);
    case Op::disjunction:
      return eval(w.left(), v) || eval(w.right(), v);
    case Op::implication:
      return !eval(w.left(), v) || eval(w.right(), v);
  }
  return false;
}

std::vector<std::map<std::string, bool>> valuations(const std::vector<std::string>& atoms) {
  std::vector<std::map<std::string, bool>> out;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms.size()); ++m) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (m >> i) & 1u;
    out.push_back(v);
  }
  return out;
}

// Prefix key with commutative operands sorted; shares nothing with the library printer.
std::string prefix_key(const Wff& w) {
  switch (w.op()) {
    case Op::atom:
      return w.name();
    case Op::negation:
      return "N(" + prefix_key(w.left()) + ")";
    case Op::implication:
      return "I(" + prefix_key(w.left()) + "," + prefix_key(w.right()) + ")";
    default: {
      std::string a = prefix_key(w.left()), b = prefix_key(w.right());
      if (b < a) std::swap(a, b);
      return std::string(w.op() == Op::conjunction ? "A(" : "O(") + a + "," + b + ")";
    }
  }
}

// Every formula of depth at most d, distinct up to swapping & and | operands.
std::map<std::string, Wff> brute_universe(const std::vector<std::string>& atoms, std::size_t d) {
  std::map<std::string, Wff> out;
  for (const auto& a : atoms) out.emplace(a, Wff::atom(a));
  for (std::size_t level = 1; level <= d; ++level) {
    std::vector<Wff> prev;
    for (auto& [k, w] : out) prev.push_back(w);
    for (const auto& x : prev) {
      Wff n = Wff::negation(x);
      out.emplace(prefix_key(n), n);
      for (const auto& y : prev)
        for (Op op : {Op::conjunction, Op::disjunction, Op::implication}) {
          Wff b = Wff::binary(op, x, y);
          out.emplace(prefix_key(b), b);
        }
    }
  }
  return out;
}

Wff random_wff(std::mt19937_64& rng, std::size_t depth) {
  static const std::vector<std::string> names{"p", "q", "r"};
  if (depth == 0 || rng() % 4 == 0) return Wff::atom(names[rng() % names.size()]);
  switch (rng() % 4) {
    case 0:
      return Wff::negation(random_wff(rng, depth - 1));
    case 1:
      return Wff::binary(Op::conjunction, random_wff(rng, depth - 1), random_wff(rng, depth - 1));
    case 2:
      return Wff::binary(Op::disjunction, random_wff(rng, depth - 1), random_wff(rng, depth - 1));
    default:
      return Wff::binary(Op::implication, random_wff(rng, depth - 1), random_wff(rng, depth - 1));
  }
}

const LogicUniverse& pq2() {
  static const LogicUniverse lu({"p", "q"}, 2);
  return lu;
}

Subset class_set(const LogicUniverse& lu, std::vector<const char*> wffs) {
  Subset s = 0;
  for (auto w : wffs) s |= Subset{1} << lu.class_index(parse_wff(w));
  return s;
}

}  // namespace

TEST(Parser, Examples) {
  Wff a = parse_wff("p | ~p");
  EXPECT_EQ(a, Wff::binary(Op::disjunction, Wff::atom("p"), Wff::negation(Wff::atom("p"))));
  Wff b = parse_wff("p & q -> p");
  EXPECT_EQ(b, Wff::binary(Op::implication, Wff::binary(Op::conjunction, Wff::atom("p"), Wff::atom("q")), Wff::atom("p")));
  try {
    parse_wff("p & | q");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_EQ(e.detail(), "unexpected token `|`");
  }
  EXPECT_THROW(parse_wff("(p"), SyntaxError);
  EXPECT_THROW(parse_wff(""), SyntaxError);
  EXPECT_THROW(parse_wff("p $ q"), SyntaxError);
}

TEST(Parser, PrecedenceAndAssociativity) {
  Wff p = Wff::atom("p"), q = Wff::atom("q"), r = Wff::atom("r");
  EXPECT_EQ(parse_wff("p -> q -> r"), Wff::binary(Op::implication, Wff::binary(Op::implication, p, q), r));
  EXPECT_EQ(parse_wff("p | q & r"), Wff::binary(Op::disjunction, p, Wff::binary(Op::conjunction, q, r)));
  EXPECT_EQ(parse_wff("~p & q"), Wff::binary(Op::conjunction, Wff::negation(p), q));
  EXPECT_EQ(to_string(Wff::binary(Op::implication, p, Wff::binary(Op::implication, q, r))), "p -> (q -> r)");
  EXPECT_EQ(to_string(Wff::binary(Op::implication, Wff::binary(Op::implication, p, q), r)), "p -> q -> r");
  EXPECT_EQ(to_string(Wff::negation(Wff::binary(Op::conjunction, p, q))), "~(p & q)");
  EXPECT_EQ(to_string(parse_wff("((p) & (q | r))")), "p & (q | r)");
}

TEST(Parser, PrintingRoundTrips) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    Wff w = random_wff(rng, 5);
    EXPECT_EQ(parse_wff(to_string(w)), w) << to_string(w);
    const std::string c = to_string(canonical(w));
    EXPECT_EQ(to_string(canonical(parse_wff(c))), c);
    EXPECT_EQ(truth_table(canonical(w), {"p", "q", "r"}), truth_table(w, {"p", "q", "r"}));
  }
}

TEST(Entails, Examples) {
  const std::vector<std::string> atoms{"p", "q"};
  EXPECT_TRUE(entails(atoms, {parse_wff("p | q"), parse_wff("~p")}, parse_wff("q")));
  EXPECT_TRUE(entails(atoms, {}, parse_wff("p | ~p")));
  EXPECT_FALSE(entails(atoms, {parse_wff("p")}, parse_wff("q")));
  EXPECT_THROW(entails(atoms, {}, parse_wff("z")), InputError);
}

TEST(Entails, MatchesValuationScan) {
  std::mt19937_64 rng(4);
  const std::vector<std::string> atoms{"p", "q", "r"};
  auto vals = valuations(atoms);
  for (int i = 0; i < 500; ++i) {
    std::vector<Wff> premises{random_wff(rng, 3), random_wff(rng, 2)};
    Wff conclusion = random_wff(rng, 3);
    bool expected = true;
    for (const auto& v : vals)
      if (eval(premises[0], v) && eval(premises[1], v) && !eval(conclusion, v)) expected = false;
    EXPECT_EQ(entails(atoms, premises, conclusion), expected);
  }
}

TEST(Universe, MatchesBruteForceEnumeration) {
  for (std::size_t d = 0; d <= 2; ++d) {
    for (const std::vector<std::string>& atoms : {std::vector<std::string>{"p"}, std::vector<std::string>{"p", "q"}}) {
      LogicUniverse lu(atoms, d);
      auto brute = brute_universe(atoms, d);
      ASSERT_EQ(lu.size(), brute.size());
      std::set<std::vector<bool>> tables;
      for (const auto& [k, w] : brute) {
        ASSERT_TRUE(lu.find(w).has_value()) << k;
        std::vector<bool> row;
        for (const auto& v : valuations(atoms)) row.push_back(eval(w, v));
        tables.insert(row);
      }
      EXPECT_EQ(lu.classes().size(), tables.size());
    }
  }
  EXPECT_EQ(pq2().size(), 422u);
  EXPECT_EQ(pq2().classes().size(), 15u);
  EXPECT_THROW(LogicUniverse({"p", "q"}, 3, 5000), CapacityError);
  EXPECT_THROW(pq2().index_of(parse_wff("p & q & p & q")), CapacityError);
  EXPECT_THROW(LogicUniverse({"p", "p"}, 1), InputError);
}

TEST(Universe, ForbiddenAndAlwaysDesirable) {
  const auto& lu = pq2();
  const Universe& u = lu.universe();
  for (std::size_t i = 0; i < lu.size(); ++i) {
    bool taut = true, contra = true;
    for (const auto& v : valuations(lu.atoms())) {
      const bool x = eval(lu.wffs()[i], v);
      taut = taut && x;
      contra = contra && !x;
    }
    EXPECT_EQ(u.always_desirable().contains(i), taut);
    EXPECT_EQ(u.forbidden().contains(i), contra);
  }
}

TEST(Closure, Examples) {
  const auto& lu = pq2();
  ThingSet mp = logic_closure(lu, {parse_wff("p"), parse_wff("p -> q")});
  EXPECT_TRUE(mp.contains(lu.index_of(parse_wff("q"))));
  EXPECT_EQ(lu.universe().closure(lu.make_set({parse_wff("p"), parse_wff("p -> q")})), mp);
  EXPECT_EQ(logic_closure(lu, {}), lu.universe().always_desirable());
  ThingSet bad = logic_closure(lu, {parse_wff("p"), parse_wff("~p")});
  EXPECT_TRUE(bad.intersects(lu.universe().forbidden()));
  EXPECT_FALSE(is_consistent_sdt(lu.universe(), lu.make_set({parse_wff("p"), parse_wff("~p")})));
  EXPECT_EQ(lu.format(lu.make_set({parse_wff("q | p"), parse_wff("p")})), "{p, p | q}");
}

TEST(Closure, LawsHold) {
  LogicUniverse small({"p"}, 1);
  EXPECT_EQ(small.size(), 5u);
  EXPECT_FALSE(check_closure_laws(small.universe()).has_value());
  EXPECT_FALSE(check_finitary(small.universe()).has_value());
  EXPECT_FALSE(check_closure_laws(pq2().class_universe()).has_value());

  const Universe& u = pq2().universe();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    ThingSet a(u.size()), b(u.size());
    for (std::size_t t = 0; t < u.size(); ++t) {
      if (rng() % 60 == 0) a.insert(t);
      if (rng() % 40 == 0) b.insert(t);
    }
    b |= a;
    ThingSet ca = u.closure(a), cb = u.closure(b);
    EXPECT_TRUE(a.subset_of(ca));
    EXPECT_TRUE(ca.subset_of(cb));
    EXPECT_EQ(u.closure(ca), ca);
  }
}

TEST(Theories, CoherentSetsAreModelSets) {
  const auto& lu = pq2();
  auto coherent = enumerate_coherent_sdts_lectic(lu.universe(), 1000);
  EXPECT_EQ(coherent.size(), 15u);
  std::set<TruthTable> models;
  for (const auto& d : coherent) {
    TruthTable m = lu.valuations();
    d.for_each([&](std::size_t i) { m &= lu.tables()[i]; });
    EXPECT_NE(m, 0u);
    EXPECT_EQ(lu.consequences(m), d);
    models.insert(m);
  }
  EXPECT_EQ(models.size(), 15u);
}

TEST(Lindenbaum, Examples) {
  LogicUniverse p2({"p"}, 2);
  EXPECT_EQ(p2.classes().size(), 4u);
  const auto& lu = pq2();
  const std::size_t pq = lu.class_index(parse_wff("p & q"));
  const std::size_t p = lu.class_index(parse_wff("p"));
  EXPECT_EQ(lu.meet(pq, p), pq);
  EXPECT_EQ(lu.join(pq, p), p);
  EXPECT_EQ(lu.complement(p), lu.class_index(parse_wff("~p")));
  EXPECT_TRUE(lu.leq(pq, p));
  EXPECT_EQ(to_string(lu.classes()[p].representative), "p");
  // p & ~q and ~p & q join to exclusive or, which depth 2 does not reach.
  EXPECT_THROW(lu.join(lu.class_index(parse_wff("p & ~q")), lu.class_index(parse_wff("~p & q"))), CapacityError);

  std::size_t covered = 0;
  for (const auto& c : lu.classes()) {
    covered += c.members.size();
    for (auto i : c.members) EXPECT_EQ(lu.tables()[i], c.table);
  }
  EXPECT_EQ(covered, lu.size());
}

TEST(Lindenbaum, CoherentSetsAreProperFilters) {
  const auto& lu = pq2();
  const TruthTable all = lu.valuations();
  // Filters of the full 16-element algebra, by definition.
  auto is_filter = [&](const std::set<TruthTable>& f) {
    if (f.empty()) return false;
    for (auto a : f)
      for (TruthTable b = 0; b <= all; ++b) {
        if ((a & ~b) == 0 && !f.count(b)) return false;
        if (f.count(b) && !f.count(a & b)) return false;
      }
    return true;
  };
  for (const auto& d : enumerate_coherent_sdts_lectic(lu.universe(), 1000)) {
    std::set<TruthTable> classes;
    d.for_each([&](std::size_t i) { classes.insert(lu.tables()[i]); });
    TruthTable m = all;
    for (auto t : classes) m &= t;
    std::set<TruthTable> up;
    for (TruthTable b = 0; b <= all; ++b)
      if ((m & ~b) == 0) up.insert(b);
    EXPECT_TRUE(is_filter(up));
    EXPECT_FALSE(up.count(0));
    for (auto t : up)
      if (lu.class_of(t)) EXPECT_TRUE(classes.count(t));
  }
  for (TruthTable m = 1; m <= all; ++m) EXPECT_TRUE(is_coherent_sdt(lu.universe(), lu.consequences(m)));
}

TEST(Disjunction, Examples) {
  const auto& lu = pq2();
  ClassSpace space(lu);
  const std::size_t n = lu.classes().size();
  Sds w(n);
  w.insert(class_set(lu, {"p", "q"}));
  Sdfs f = class_sdfs_closure(space, w);
  const TruthTable p_or_q = truth_table(parse_wff("p | q"), lu.atoms());
  auto tables = disjunction_tables(space, f);
  EXPECT_TRUE(std::binary_search(tables.begin(), tables.end(), p_or_q));
  const TruthTable p_only = truth_table(parse_wff("p"), lu.atoms());
  const TruthTable q_only = truth_table(parse_wff("q"), lu.atoms());
  std::size_t disjunction_rule_misses = 0;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    TruthTable t = 0;
    bool from_p = false, from_q = false;
    for (std::size_t c = 0; c < n; ++c)
      if ((s >> c) & 1u) {
        const TruthTable m = lu.classes()[c].table;
        t |= m;
        from_p = from_p || (p_only & ~m) == 0;
        from_q = from_q || (q_only & ~m) == 0;
      }
    // Every theory containing p or q meets the set.
    EXPECT_EQ(f.contains(s), from_p && from_q) << s;
    if (f.contains(s) != ((p_or_q & ~t) == 0)) ++disjunction_rule_misses;
  }
  // p | q entails p | ~p, yet Cn(q) meets {p, q} and misses {p, ~p}.
  EXPECT_FALSE(f.contains(class_set(lu, {"p", "~p"})));
  EXPECT_GT(disjunction_rule_misses, 0u);
  EXPECT_FALSE(f.contains(class_set(lu, {"p & q"})));

  Sdfs bottom = class_sdfs_closure(space, Sds(n));
  EXPECT_EQ(disjunction_tables(space, bottom), std::vector<TruthTable>{lu.valuations()});
  EXPECT_EQ(disjunction_sdt(space, bottom), lu.universe().always_desirable());

  Sds xw(n);
  xw.insert(class_set(lu, {"p & ~q"}));
  Sdfs xf = class_sdfs_closure(space, xw);
  try {
    disjunction_sdt(space, xf);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("has no equivalent wff within depth 2"), std::string::npos);
  }
}

TEST(Disjunction, EnumerationMatchesBruteForceOnOneAtom) {
  LogicUniverse lu({"p"}, 2);
  ClassSpace space(lu);
  auto bfs = enumerate_class_sdfses(space);
  auto scan = enumerate_coherent_sdses(lu.class_universe(), CoherenceMode::finite);
  std::set<std::vector<Subset>> a, b;
  for (const auto& f : bfs) a.insert(f.members());
  for (const auto& k : scan) b.insert(k.members());
  EXPECT_EQ(a, b);
}

// The proposition's coherence claim holds everywhere; its representation claim
// F = S^(D(F)) fails for disjunctive families such as the closure of {{p, q}}.
TEST(Disjunction, PropositionOverEveryFamily) {
  const auto& lu = pq2();
  ClassSpace space(lu);
  auto all = enumerate_class_sdfses(space);
  EXPECT_GT(all.size(), 15u);
  std::size_t conjunctive = 0;
  for (const auto& f : all) {
    auto r = check_disjunction_representation(space, f);
    EXPECT_TRUE(r.coherent);
    EXPECT_TRUE(model_of_tables(space, disjunction_tables(space, f)).subset_of(f));
    const bool is_model = is_conjunctive(lu.class_universe(), Sds(f));
    EXPECT_EQ(r.representation, is_model);
    conjunctive += is_model;
  }
  EXPECT_EQ(conjunctive, 15u);

  // Over the full algebra D(F) can miss a meet the depth bound does not realize.
  Sds xw(lu.classes().size());
  xw.insert(class_set(lu, {"p | q"}));
  xw.insert(class_set(lu, {"p -> ~q"}));
  auto tables = disjunction_tables(space, class_sdfs_closure(space, xw));
  const TruthTable exclusive = truth_table(parse_wff("p & ~q | ~p & q"), lu.atoms());
  EXPECT_FALSE(lu.class_of(exclusive).has_value());
  EXPECT_FALSE(std::binary_search(tables.begin(), tables.end(), exclusive));
  EXPECT_TRUE(check_disjunction_representation(space, class_sdfs_closure(space, xw)).coherent);

  Sds w(lu.classes().size());
  w.insert(class_set(lu, {"p", "q"}));
  auto r = check_disjunction_representation(space, class_sdfs_closure(space, w));
  EXPECT_TRUE(r.coherent);
  EXPECT_FALSE(r.representation);
  EXPECT_FALSE(r.smallest);
  ASSERT_TRUE(r.missing.has_value());
  EXPECT_EQ(*r.missing, class_set(lu, {"p", "q"}));
}
