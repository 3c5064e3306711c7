#include <algorithm>

#include "common.hpp"
#include "desire/filters.hpp"
#include "literal.hpp"

namespace desire::lawcheck {

namespace {

bool by_members(const SetFamily& a, const SetFamily& b) { return a.members() < b.members(); }

std::string show_filter(const LatticeFilter& f) {
  std::string out = "filter:";
  const auto& l = f.lattice();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (f.contains(i)) out += " " + l.space().format(l.at(i));
  return out + "\n";
}

}  // namespace

Report run_filters(const Options& options) {
  auto rng = suite_rng(options, 3);
  const auto us = universes(rng, scaled(options.budget, 4, 30, 120), 3);
  const EngineConfig& cfg = options.engine;

  Law enumeration("filters", "engine enumeration of coherent SDSes matches the literal axioms");
  Law laws("filters", "LF1/LF2 hold for every proper filter and for pairwise intersections");
  Law proper_count("filters", "proper filters correspond to the non-bottom elements");
  Law proper("filters", "order isomorphism: filterize(K) is a proper filter");
  Law back("filters", "order isomorphism: desirify(filterize(K)) = K");
  Law forth("filters", "order isomorphism: filterize(desirify(F)) = F for every proper filter");
  Law coherent_image("filters", "order isomorphism: desirify(F) is finitely coherent");
  Law monotone("filters", "order isomorphism: K1 within K2 iff filterize(K1) within filterize(K2)");
  Law meets("filters", "order isomorphism: intersections map to intersections");
  Law bottom("filters", "order isomorphism: the smallest coherent SDS maps to the filter of the top element");
  Law prime("filters", "order isomorphism: prime iff complete");
  Law principal("filters", "principal filterize agrees with filterize");
  Law sdfs("filters", "order isomorphism for SDFSes: round trips through sdfs_filterize");
  Law decomposition("filters", "prime filter representation: the primes above F meet in F");
  Law pulled("filters", "prime filter representation: pulled-back primes are the complete coherent extensions");

  for (const auto& u : us) {
    const std::size_t n = u.size();
    EventSpace space(u);
    if (space.size() > 6) continue;
    auto lattice = build_event_lattice(space);
    if (lattice->size() > 32) continue;
    const auto& l = *lattice;

    std::vector<Sds> literal_coherent;
    for (auto k : literal::coherent_families(u)) literal_coherent.push_back(literal::family_of(n, k));
    auto engine = enumerate_coherent_sdses(u, CoherenceMode::finite, cfg);
    std::sort(engine.begin(), engine.end(), by_members);
    std::sort(literal_coherent.begin(), literal_coherent.end(), by_members);
    enumeration.expect(engine == literal_coherent, [&] {
      std::string out = "engine found " + std::to_string(engine.size()) + ", literal " +
                        std::to_string(literal_coherent.size()) + "\n";
      for (const auto& k : engine)
        if (std::find(literal_coherent.begin(), literal_coherent.end(), k) == literal_coherent.end())
          return in_universe(u, out + "engine only: " + format_family_inline(u, k) + "\n");
      for (const auto& k : literal_coherent)
        if (std::find(engine.begin(), engine.end(), k) == engine.end())
          return in_universe(u, out + "literal only: " + format_family_inline(u, k) + "\n");
      return in_universe(u, out);
    });

    const auto filters = all_proper_filters(lattice);
    for (const auto& a : filters) {
      laws.expect(filter_defect(l, a.members()).empty() && !a.contains(l.bottom()),
                  [&] { return in_universe(u, show_filter(a) + filter_defect(l, a.members()) + "\n"); });
      for (const auto& b : filters) {
        ElementSet both = a.members() & b.members();
        laws.expect(filter_defect(l, both).empty(), [&] {
          return in_universe(u, show_filter(a) + show_filter(b) + filter_defect(l, both) + "\n");
        });
      }
    }
    proper_count.expect(filters.size() + 1 == l.size(), [&] {
      return in_universe(u, std::to_string(filters.size()) + " proper filters on " + std::to_string(l.size()) +
                                " elements\n");
    });

    // Source of K is the literal enumeration; the engine under test supplies everything else.
    std::vector<LatticeFilter> images;
    for (const auto& k : literal_coherent) {
      LatticeFilter f = filterize(lattice, k);
      auto where = [&] { return in_universe(u, "K: " + format_family_inline(u, k) + "\n" + show_filter(f)); };
      proper.expect(is_proper(f), where);
      back.expect(desirify(f) == k, where);
      prime.expect(is_prime(f) == is_complete(k), where);
      principal.expect(principal_filterize(lattice, k).filter == f, where);
      Sdfs fk(k);
      LatticeFilter ff = sdfs_filterize(lattice, fk);
      sdfs.expect(ff == f && sdfs_desirify(ff) == fk, where);

      std::vector<LatticeFilter> primes = prime_decomposition(f);
      decomposition.expect(intersect_all(primes, l.size()) == f.members(), where);
      std::vector<Sds> up;
      for (const auto& p : primes) up.push_back(desirify(p));
      auto ext = enumerate_complete_coherent_extensions(space, k);
      std::sort(up.begin(), up.end(), by_members);
      std::sort(ext.begin(), ext.end(), by_members);
      Sds meet = Sds::top(n);
      for (const auto& e : ext) meet = meet & e;
      pulled.expect(up == ext && meet == k, where);
      images.push_back(std::move(f));
    }
    for (const auto& f : filters) {
      Sds k = desirify(f);
      auto where = [&] { return in_universe(u, show_filter(f) + "desirified: " + format_family_inline(u, k) + "\n"); };
      forth.expect(filterize(lattice, k) == f, where);
      coherent_image.expect(check_sds_coherent(u, k, CoherenceMode::finite, cfg).ok(), where);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = 0; j < images.size(); ++j) {
        const Sds& a = literal_coherent[i];
        const Sds& b = literal_coherent[j];
        auto where = [&] {
          return in_universe(u, "K1: " + format_family_inline(u, a) + "\nK2: " + format_family_inline(u, b) + "\n");
        };
        monotone.expect(a.subset_of(b) == images[i].subset_of(images[j]), where);
        meets.expect(filterize(lattice, a & b).members() == (images[i].members() & images[j].members()), where);
      }
    if (!literal_coherent.empty()) {
      Sds smallest = Sds::top(n);
      for (const auto& k : literal_coherent) smallest = smallest & k;
      bottom.expect(filterize(lattice, smallest) == LatticeFilter::principal(lattice, l.top()),
                    [&] { return in_universe(u, "smallest: " + format_family_inline(u, smallest) + "\n"); });
    }
  }

  Report r;
  for (Law* law : {&enumeration, &laws, &proper_count, &proper, &back, &forth, &coherent_image, &monotone, &meets,
                   &bottom, &prime, &principal, &sdfs, &decomposition, &pulled})
    law->finish(r);
  return r;
}

}  // namespace desire::lawcheck
