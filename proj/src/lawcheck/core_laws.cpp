#include "common.hpp"
#include "desire/core.hpp"

namespace desire::lawcheck {

Report run_core(const Options& options) {
  auto rng = suite_rng(options, 1);
  const auto us = universes(rng, scaled(options.budget, 20, 200, 1000), 5);

  Law laws("core", "closure laws C1-C3 on every subset");
  Law via_intersection("core", "closure equals the intersection of coherent supersets on consistent subsets");
  Law meets("core", "intersections of coherent SDT pairs and triples are coherent");
  Law bottom("core", "T+ equals the intersection of all closed SDTs");
  Law finitary("core", "closure is finitary");

  for (const auto& u : us) {
    const std::size_t n = u.size();
    auto law = check_closure_laws(u);
    laws.expect(!law, [&] { return in_universe(u, describe(*law) + "\n"); });

    auto coherent = enumerate_coherent_sdts(u);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ThingSet s = u.from_mask(m);
      if (!is_consistent_sdt(u, s)) continue;
      ThingSet expected = u.closure(s);
      ThingSet got = sdt_closure_via_intersection(u, coherent, s);
      via_intersection.expect(got == expected, [&] {
        return in_universe(u, "set: " + u.format(s) + "\nclosure: " + u.format(expected) + "\nintersection: " + u.format(got) + "\n");
      });
    }

    for (std::size_t i = 0; i < coherent.size(); ++i)
      for (std::size_t j = i; j < coherent.size(); ++j)
        for (std::size_t k = j; k < coherent.size(); ++k) {
          ThingSet x = coherent[i] & coherent[j] & coherent[k];
          meets.expect(is_coherent_sdt(u, x), [&] {
            return in_universe(u, "sets: " + u.format(coherent[i]) + " " + u.format(coherent[j]) + " " +
                                      u.format(coherent[k]) + "\nintersection: " + u.format(x) + "\n");
          });
        }

    ThingSet closed_meet = u.full_set();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ThingSet s = u.from_mask(m);
      if (u.closure(s) == s) closed_meet &= s;
    }
    bottom.expect(closed_meet == u.always_desirable(), [&] {
      return in_universe(u, "T+: " + u.format(u.always_desirable()) + "\nintersection: " + u.format(closed_meet) + "\n");
    });

    auto bad = check_finitary(u);
    finitary.expect(!bad, [&] { return in_universe(u, "set: " + u.format(u.from_mask(*bad)) + "\n"); });
  }

  Report r;
  for (Law* l : {&laws, &via_intersection, &meets, &bottom, &finitary}) l->finish(r);
  return r;
}

}  // namespace desire::lawcheck
