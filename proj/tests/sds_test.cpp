#include <gtest/gtest.h>

#include <random>

#include "desire/errors.hpp"
#include "desire/sds.hpp"
#include "desire/statements_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace desire;

namespace {

// Family from member sets written as "a b", "c", "" ...
Sds fam(const Universe& u, std::vector<std::string> sets) {
  Sds out(u.size());
  for (const auto& s : sets) out.insert(u.make_set(split_words(s)));
  return out;
}

Sds non_empty(std::size_t n) {
  Sds out = Sds::top(n);
  out.erase(Subset{0});
  return out;
}

Sds containing(std::size_t n, Subset s) {
  Sds out(n);
  for (Subset m = 0; m < (Subset{1} << n); ++m)
    if ((m & s) == s) out.insert(m);
  return out;
}

Sds meeting(std::size_t n, Subset s) {
  Sds out(n);
  for (Subset m = 0; m < (Subset{1} << n); ++m)
    if (m & s) out.insert(m);
  return out;
}

}  // namespace

TEST(SdsCheck, Examples) {
  Universe u1 = fixtures::u1();
  EXPECT_TRUE(check_sds_coherent(u1, non_empty(3)).ok());
  EXPECT_TRUE(check_sds_coherent(u1, containing(3, 0b011)).ok());

  Verdict v = check_sds_coherent(u1, fam(u1, {"a b"}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation->axiom, Axiom::k2);
  EXPECT_EQ(v.violation->sets, (std::vector<Subset>{0b011, 0b111}));
  EXPECT_EQ(describe(u1, v), "violated K2: {a b} is a member but its superset {a b c} is not");
}

TEST(SdsCheck, ProductionWitnessListsEverySelection) {
  Universe u1 = fixtures::u1();
  // {a} and {b} desirable, but {c} and the other products are not.
  Sds k = containing(3, 0b001) | containing(3, 0b010);
  Verdict v = check_sds_coherent(u1, k, CoherenceMode::finite);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation->axiom, Axiom::k5);
  EXPECT_EQ(v.violation->generators, (std::vector<Subset>{0b001, 0b010}));
  EXPECT_EQ(v.violation->sets, std::vector<Subset>{0b100});
  ASSERT_EQ(v.violation->choices.size(), 1u);
  EXPECT_EQ(v.violation->choices[0].produced_thing, 2u);
  EXPECT_EQ(describe(u1, v), "violated K5: W = [{a} {b}] produces {c} which is missing; (a b => c)");
  EXPECT_EQ(check_sds_coherent(u1, k, CoherenceMode::full).violation->axiom, Axiom::k5);
}

TEST(SdfsCheck, Examples) {
  Universe u2 = fixtures::u2();
  EXPECT_TRUE(check_sdfs_coherent(u2, Sdfs(meeting(3, 0b001))).ok());

  Verdict v = check_sdfs_coherent(u2, Sdfs(3));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation->axiom, Axiom::k4);
  EXPECT_EQ(describe(u2, v, true), "violated F4: {a} is missing");

  Sdfs with_empty = Sdfs(meeting(3, 0b001));
  with_empty.insert(Subset{0});
  EXPECT_EQ(check_sdfs_coherent(u2, with_empty).violation->axiom, Axiom::k1);
  EXPECT_EQ(check_sdfs_coherent(fixtures::u1(), Sdfs(Sds::top(3))).violation->axiom, Axiom::k1);
}

TEST(SdsCheck, ForbiddenThingsMustBeStrippable) {
  Universe u2 = fixtures::u2();
  Sds k = meeting(3, 0b001);
  k.insert(Subset{0b110});
  k.insert(Subset{0b100});
  Verdict v = check_sds_coherent(u2, Sds(up_closure(k)));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation->axiom, Axiom::k3);
}

TEST(Production, Examples) {
  Universe u1 = fixtures::u1();
  EXPECT_EQ(production_step(u1, std::vector<Subset>{0b001, 0b010}), non_empty(3));
  EXPECT_EQ(production_step(u1, std::vector<Subset>{0b011}), containing(3, 0b011));
  EXPECT_THROW(production_step(u1, std::vector<Subset>{0b001, 0}), InputError);
  // W = ∅: one empty selection, cl(∅) = T+.
  EXPECT_EQ(production_step(fixtures::u2(), std::vector<Subset>{}), meeting(3, 0b001));
  EXPECT_TRUE(production_step(u1, std::vector<Subset>{}).empty());
}

TEST(Production, HittingSetsMatchRawProductsUpClosed) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    auto spec = fixtures::random_spec(rng, 1 + rng() % 4, 6);
    Universe u = fixtures::make_universe(spec);
    for (int j = 0; j < 20; ++j) {
      std::vector<Subset> w;
      const std::size_t size = rng() % 4;
      for (std::size_t k = 0; k < size; ++k) w.push_back(1 + static_cast<Subset>(rng() % oracle::full(spec.n)));
      std::sort(w.begin(), w.end());
      w.erase(std::unique(w.begin(), w.end()), w.end());
      auto raw = oracle::raw_products(spec, w);
      EXPECT_EQ(fixtures::to_bits(raw_production(u, w)), raw);
      Sds produced = production_step(u, w);
      EXPECT_EQ(fixtures::to_bits(produced), fixtures::to_bits(up_closure(fixtures::to_sds(spec.n, raw))));
      EXPECT_EQ(up_closure(produced), static_cast<const SetFamily&>(produced));
    }
  }
}

TEST(Closure, Examples) {
  Universe u1 = fixtures::u1();
  Universe u2 = fixtures::u2();
  EXPECT_EQ(sds_closure(u1, fam(u1, {"a", "b"})), non_empty(3));
  EXPECT_EQ(sds_closure(u1, fam(u1, {"a b"})), containing(3, 0b011));
  Sds top = sds_closure(u2, fam(u2, {"b"}));
  EXPECT_TRUE(top.is_top());
  EXPECT_EQ(format_family(u2, top), "INCONSISTENT\n");
}

TEST(ConjunctiveClosure, Examples) {
  Universe u1 = fixtures::u1();
  Universe u2 = fixtures::u2();
  EXPECT_EQ(conjunctive_closure(u1, fam(u1, {"a", "b"})), non_empty(3));
  EXPECT_EQ(conjunctive_closure(u1, fam(u1, {"a b"})), containing(3, 0b011));
  EXPECT_EQ(conjunctive_closure(u2, Sds(3)), meeting(3, 0b001));
  EXPECT_TRUE(conjunctive_closure(u2, fam(u2, {"b"})).is_top());
}

TEST(ClosureOutput, OneSetPerLine) {
  Universe u1 = fixtures::u1();
  EXPECT_EQ(format_family(u1, sds_closure(u1, fam(u1, {"a b"}))), "a b\na b c\n");
}

TEST(Conversions, Examples) {
  Universe u1 = fixtures::u1();
  Universe u2 = fixtures::u2();
  EXPECT_EQ(sdtify(u1, sdsify(u1, u1.make_set({"a", "c"}))), u1.make_set({"a", "c"}));
  EXPECT_EQ(sdsify(u2, u2.make_set({"a"})), meeting(3, 0b001));
  EXPECT_EQ(sdtify(u1, fam(u1, {"a b"})), u1.empty_set());
  EXPECT_EQ(sdfsify(u1, u1.make_set({"b"})), Sdfs(meeting(3, 0b010)));

  EXPECT_TRUE(is_conjunctive(u1, sdsify(u1, u1.make_set({"a", "c"}))));
  EXPECT_FALSE(is_conjunctive(u1, containing(3, 0b011)));
  EXPECT_TRUE(conjunctive_part(u1, containing(3, 0b011)).empty());
  EXPECT_TRUE(is_conjunctive(u2, meeting(3, 0b001)));
}

TEST(Completeness, Examples) {
  Universe u1 = fixtures::u1();
  EXPECT_TRUE(is_complete(sdsify(u1, u1.make_set({"a", "c"}))));
  auto w = completeness_witness(containing(3, 0b011));
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(containing(3, 0b011).contains(w->first));
  EXPECT_FALSE(containing(3, 0b011).contains(w->second));
  EXPECT_TRUE(containing(3, 0b011).contains(w->first | w->second));
  EXPECT_TRUE(is_complete(Sds(3)));
}

TEST(FinitePart, Examples) {
  Universe u1 = fixtures::u1();
  for (const auto& k : enumerate_coherent_sdses(u1)) {
    EXPECT_EQ(finitary_part(k), k);
    EXPECT_TRUE(is_finitary(k));
    EXPECT_EQ(finite_part(up_close(finite_part(k))), finite_part(k));
  }
  EXPECT_TRUE(up_close(Sdfs(3)).empty());
}

TEST(Extensions, Examples) {
  Universe u1 = fixtures::u1();
  EventSpace space(u1);
  Sds k = containing(3, 0b011);
  auto ext = enumerate_complete_coherent_extensions(space, k);
  for (const char* d : {"a c", "b c", "a b c"}) {
    Sds model = sdsify(u1, u1.make_set(split_words(d)));
    EXPECT_NE(std::find(ext.begin(), ext.end(), model), ext.end()) << d;
  }
  Sds meet = Sds::top(3);
  for (const auto& e : ext) meet = meet & e;
  EXPECT_EQ(meet, k);

  Sds model = sdsify(u1, u1.make_set({"a", "c"}));
  auto self = enumerate_complete_coherent_extensions(space, model);
  EXPECT_NE(std::find(self.begin(), self.end(), model), self.end());

  Universe u2 = fixtures::u2();
  EXPECT_THROW(enumerate_complete_coherent_extensions(EventSpace(u2), fam(u2, {"b"})), InconsistencyError);
}

TEST(StatementsFile, Parses) {
  Universe u1 = fixtures::u1();
  auto w = parse_statements(u1, "# desirable\nassert-set: a b   # both\nassert-set: c\n");
  EXPECT_EQ(make_sds(u1, w), fam(u1, {"a b", "c"}));
  EXPECT_EQ(parse_statements(u1, statements_to_text(u1, w)), w);
  try {
    parse_statements(u1, "assert-set: a\nassert-set: q\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_statements(u1, "assert: a\n"), InputError);
}

// Exhaustive agreement with the literal axioms on random universes of at most three things.
TEST(OracleSuite, CheckerMatchesLiteralAxioms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 12; ++i) {
    auto spec = fixtures::random_spec(rng, 1 + rng() % 3, 5);
    Universe u = fixtures::make_universe(spec);
    const std::uint64_t families = std::uint64_t{1} << (1u << spec.n);
    for (std::uint64_t f = 0; f < families; ++f) {
      Sds k = fixtures::to_sds(spec.n, f);
      const bool expected = oracle::coherent(spec, f);
      ASSERT_EQ(check_sds_coherent(u, k, CoherenceMode::finite).ok(), expected) << f;
      ASSERT_EQ(check_sds_coherent(u, k, CoherenceMode::full).ok(), expected) << f;
    }
  }
}

TEST(OracleSuite, ClosuresAgreeWithOracleAndEachOther) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 25; ++i) {
    auto spec = fixtures::random_spec(rng, 1 + rng() % 3, 5);
    Universe u = fixtures::make_universe(spec);
    EventSpace space(u);
    auto coherent = oracle::coherent_families(spec);
    const Subset subsets = Subset{1} << spec.n;
    // Every W of at most three members.
    for (Subset a = 0; a <= subsets; ++a)
      for (Subset b = a; b <= subsets; ++b)
        for (Subset c = b; c <= subsets; ++c) {
          std::uint64_t w = 0;
          for (Subset s : {a, b, c})
            if (s < subsets) w |= oracle::family_bit(s);
          Sds ws = fixtures::to_sds(spec.n, w);
          const auto expected = oracle::sds_closure(coherent, spec.n, w);
          Sds fixpoint = sds_closure(u, ws);
          ASSERT_EQ(fixtures::to_bits(fixpoint), expected);
          ASSERT_EQ(conjunctive_closure(space, ws), fixpoint);
          if (!fixpoint.is_top()) ASSERT_EQ(intersection_closure(space, ws), fixpoint);
        }
  }
}

TEST(OracleSuite, ConjunctiveModelsAndBottom) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 25; ++i) {
    auto spec = fixtures::random_spec(rng, 1 + rng() % 3, 5);
    Universe u = fixtures::make_universe(spec);
    auto coherent_sdts = oracle::coherent_sdts(spec);
    auto coherent = oracle::coherent_families(spec);

    // Coherent and conjunctive exactly when S(D) for a coherent D.
    for (auto k : coherent) {
      Sds ks = fixtures::to_sds(spec.n, k);
      const bool conj = is_conjunctive(u, ks);
      const Subset d = static_cast<Subset>(sdtify(u, ks).mask());
      const bool from_model = std::find(coherent_sdts.begin(), coherent_sdts.end(), d) != coherent_sdts.end() &&
                              oracle::conjunctive_model(spec.n, d) == k;
      EXPECT_EQ(conj, from_model);
    }
    for (auto d : coherent_sdts) {
      const auto model = oracle::conjunctive_model(spec.n, d);
      EXPECT_TRUE(oracle::coherent(spec, model));
      EXPECT_TRUE(is_complete(fixtures::to_sds(spec.n, model)));
      EXPECT_EQ(sdtify(u, fixtures::to_sds(spec.n, model)).mask(), d);
      for (auto d2 : coherent_sdts) {
        const bool sub = (d & ~d2) == 0;
        const auto model2 = oracle::conjunctive_model(spec.n, d2);
        EXPECT_EQ(sub, (model & ~model2) == 0);
      }
    }

    std::uint64_t meet = oracle::all_subsets(spec.n);
    for (auto k : coherent) meet &= k;
    const Subset always = oracle::closure(spec, 0);
    EXPECT_EQ(meet, fixtures::to_bits(meeting(spec.n, always)));
    EXPECT_EQ(sds_closure(u, Sds(spec.n)), meeting(spec.n, always));

    // Intersection of complete coherent extensions is the closure.
    EventSpace space(u);
    for (auto k : coherent) {
      Sds ks = fixtures::to_sds(spec.n, k);
      auto ext = enumerate_complete_coherent_extensions(space, ks);
      Sds all = Sds::top(spec.n);
      for (const auto& e : ext) {
        EXPECT_TRUE(is_complete(e));
        EXPECT_TRUE(oracle::coherent(spec, fixtures::to_bits(e)));
        all = all & e;
      }
      EXPECT_EQ(all, ks);
      std::size_t expected_count = 0;
      for (auto other : coherent)
        if ((k & ~other) == 0 && oracle::complete(spec.n, other)) ++expected_count;
      EXPECT_EQ(ext.size(), expected_count);
    }
  }
}

TEST(OracleSuite, EnumeratedCoherentFamiliesMatch) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    auto spec = fixtures::random_spec(rng, 1 + rng() % 3, 5);
    Universe u = fixtures::make_universe(spec);
    std::vector<std::uint64_t> got;
    for (const auto& k : enumerate_coherent_sdses(u)) got.push_back(fixtures::to_bits(k));
    EXPECT_EQ(got, oracle::coherent_families(spec));
  }
}

TEST(OracleSuite, FourThingUniverseClosures) {
  // Closure as the intersection of the conjunctive models containing W.
  std::mt19937_64 rng(29);
  for (int i = 0; i < 5; ++i) {
    auto spec = fixtures::random_spec(rng, 4, 6);
    Universe u = fixtures::make_universe(spec);
    EventSpace space(u);
    auto coherent_sdts = oracle::coherent_sdts(spec);
    for (int j = 0; j < 30; ++j) {
      std::uint64_t w = 0;
      for (int m = 0; m < 3; ++m) w |= oracle::family_bit(1 + rng() % 15);
      std::uint64_t expected = ~std::uint64_t{0} >> 48;
      bool any = false;
      for (auto d : coherent_sdts) {
        const auto model = oracle::conjunctive_model(4, d);
        if ((w & ~model) == 0) expected &= model, any = true;
      }
      if (!any) expected = oracle::all_subsets(4);
      Sds closed = sds_closure(u, fixtures::to_sds(4, w));
      EXPECT_EQ(fixtures::to_bits(closed), expected);
      EXPECT_EQ(conjunctive_closure(space, fixtures::to_sds(4, w)), closed);
      if (!closed.is_top()) EXPECT_TRUE(oracle::coherent(spec, expected));
    }
  }
}

// Each engine with one axiom switched off must disagree with the oracle somewhere.
TEST(Mutation, EachDisabledAxiomIsDetected) {
  Universe u1 = fixtures::u1();
  Universe u2 = fixtures::u2();
  Universe u3 = fixtures::u3();
  auto differs = [](const Universe& u, const fixtures::RuleSpec& spec, const Sds& w, Axiom off) {
    auto coherent = oracle::coherent_families(spec);
    return fixtures::to_bits(sds_closure(u, w, EngineConfig::without(off))) !=
           oracle::sds_closure(coherent, spec.n, fixtures::to_bits(w));
  };
  EXPECT_TRUE(differs(u2, fixtures::u2_spec(), fam(u2, {"b c"}), Axiom::k3));
  EXPECT_TRUE(differs(u2, fixtures::u2_spec(), Sds(3), Axiom::k4));
  EXPECT_TRUE(differs(u1, fixtures::u1_spec(), fam(u1, {"a", "b"}), Axiom::k5));
  EXPECT_TRUE(differs(u3, fixtures::u3_spec(), fam(u3, {"a"}), Axiom::k2));
  // Without K1 the checker accepts the full power set.
  EXPECT_TRUE(check_sds_coherent(u1, Sds::top(3), CoherenceMode::finite, EngineConfig::without(Axiom::k1)).ok());
  EXPECT_FALSE(oracle::coherent(fixtures::u1_spec(), oracle::all_subsets(3)));
}
