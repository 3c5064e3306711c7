#include <algorithm>

#include "common.hpp"
#include "desire/core.hpp"
#include "desire/events.hpp"
#include "literal.hpp"

namespace desire::lawcheck {

namespace literal {

Bits bits_of(const SetFamily& f) {
  Bits b = 0;
  f.for_each([&](Subset s) { b |= Bits{1} << s; });
  return b;
}

Sds family_of(std::size_t n, Bits b) {
  Sds out(n);
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if ((b >> s) & 1u) out.insert(s);
  return out;
}

Bits raw_products(const Universe& u, const std::vector<Subset>& w) {
  const std::size_t n = u.size();
  std::vector<std::vector<Subset>> options;
  for (auto s : w) {
    std::vector<Subset> one;
    for (std::size_t t = 0; t < n; ++t)
      if ((s >> t) & 1u) one.push_back(Subset{1} << t);
    if (one.empty()) return 0;
    options.push_back(std::move(one));
  }
  std::vector<Subset> targets;
  std::vector<std::size_t> at(w.size(), 0);
  for (;;) {
    Subset image = 0;
    for (std::size_t i = 0; i < w.size(); ++i) image |= options[i][at[i]];
    targets.push_back(static_cast<Subset>(u.closure(u.from_mask(image)).mask()));
    std::size_t i = 0;
    while (i < w.size() && ++at[i] == options[i].size()) at[i++] = 0;
    if (i == w.size()) break;
  }
  Bits reach = 1;
  for (auto c : targets) {
    Bits next = 0;
    for (Subset r = 0; r < (Subset{1} << n); ++r) {
      if (!((reach >> r) & 1u)) continue;
      for (std::size_t t = 0; t < n; ++t)
        if ((c >> t) & 1u) next |= Bits{1} << (r | (Subset{1} << t));
    }
    reach = next;
  }
  return reach;
}

std::optional<std::string> violation(const Universe& u, Bits k) {
  const std::size_t n = u.size();
  const Subset top = static_cast<Subset>((1u << n) - 1);
  const auto forbidden = static_cast<Subset>(u.forbidden().mask());
  auto show = [&](Subset s) { return format_subset_braced(u, s); };
  if (k & 1u) return std::string("K1: the empty set is a member");
  std::vector<Subset> members;
  for (Subset s = 0; s <= top; ++s)
    if ((k >> s) & 1u) members.push_back(s);
  for (auto s : members) {
    for (Subset bigger = s; bigger <= top; ++bigger)
      if ((s & ~bigger) == 0 && !((k >> bigger) & 1u)) return "K2: " + show(s) + " without " + show(bigger);
    if (!((k >> (s & ~forbidden)) & 1u)) return "K3: " + show(s) + " without " + show(s & ~forbidden);
  }
  const auto always = static_cast<Subset>(u.always_desirable().mask());
  for (std::size_t t = 0; t < n; ++t)
    if (((always >> t) & 1u) && !((k >> (Subset{1} << t)) & 1u)) return "K4: " + show(Subset{1} << t) + " missing";
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << members.size()); ++pick) {
    std::vector<Subset> w;
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((pick >> i) & 1u) w.push_back(members[i]);
    Bits missing = raw_products(u, w) & ~k;
    if (missing) {
      std::string ws;
      for (auto s : w) ws += (ws.empty() ? "" : " ") + show(s);
      return "K5: W = [" + ws + "] produces " + show(static_cast<Subset>(__builtin_ctzll(missing))) + " which is missing";
    }
  }
  return std::nullopt;
}

std::vector<Bits> coherent_families(const Universe& u) {
  const std::size_t n = u.size();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Bits> out;
  const Bits count = Bits{1} << subsets;
  for (Bits k = 0; k < count; ++k) {
    if (k & 1u) continue;
    bool up = true;
    for (Subset s = 0; s < subsets && up; ++s)
      if ((k >> s) & 1u)
        for (std::size_t t = 0; t < n && up; ++t) up = (k >> (s | (Subset{1} << t))) & 1u;
    if (up && !violation(u, k)) out.push_back(k);
  }
  return out;
}

Bits least_containing(const std::vector<Bits>& coherent, std::size_t n, Bits w) {
  const std::size_t subsets = std::size_t{1} << n;
  const Bits all = subsets == 64 ? ~Bits{0} : (Bits{1} << subsets) - 1;
  Bits out = all;
  bool any = false;
  for (auto k : coherent)
    if ((w & ~k) == 0) out &= k, any = true;
  return any ? out : all;
}

}  // namespace literal

namespace {

std::vector<std::vector<Subset>> small_families(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<Subset>> out{{}};
  const Subset subsets = Subset{1} << n;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_size) continue;
    const Subset from = out[i].empty() ? 0 : out[i].back() + 1;
    for (Subset s = from; s < subsets; ++s) {
      auto next = out[i];
      next.push_back(s);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::string show_w(const Universe& u, const std::vector<Subset>& w) {
  std::string out = "W: [";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + format_subset_braced(u, w[i]);
  return out + "]\n";
}

}  // namespace

Report run_sds(const Options& options) {
  auto rng = suite_rng(options, 2);
  const auto us = universes(rng, scaled(options.budget, 3, 30, 100), 3);
  const EngineConfig& cfg = options.engine;

  Law least("sds", "closure is the least coherent SDS containing W");
  Law conj("sds", "conjunctive representation: fixpoint closure equals the event-based closure");
  Law simplified("sds", "finitary form: closure equals the intersection of S(D) over E_W");
  Law checker("sds", "coherence checker agrees with the literal axioms K1-K5");
  Law modes("sds", "finite and full coherence verdicts coincide");
  Law characterization("sds", "conjunctivity: S(D) is coherent, conjunctive and complete with s(S(D)) = D");
  Law embedding("sds", "order embedding: D1 within D2 iff S(D1) within S(D2)");
  Law bottom("sds", "smallest coherent SDS: sets meeting T+");
  Law production("sds", "production step equals the upward closure of the raw products");
  Law binary("sds", "E_W = {D : W within S(D)}");
  Law meet("sds", "E of a union is the intersection of the Es");
  Law workhorse("sds", "workhorse: E_W1 within E_W2 and W1 within K imply W2 within K");
  Law consistency("sds", "a coherent K makes E_W non-empty for finite W within K");

  for (const auto& u : us) {
    const std::size_t n = u.size();
    EventSpace space(u);
    const auto literal_coherent = literal::coherent_families(u);

    std::vector<literal::Bits> families;
    for (const auto& w : small_families(n, 3)) {
      Sds ws(n);
      for (auto s : w) ws.insert(s);
      const literal::Bits wb = literal::bits_of(ws);
      Sds closed = sds_closure(u, ws, cfg);
      const literal::Bits expected = literal::least_containing(literal_coherent, n, wb);
      least.expect(literal::bits_of(closed) == expected, [&] {
        return in_universe(u, show_w(u, w) + "closure: " + format_family_inline(u, closed) +
                                  "\nexpected: " + format_family_inline(u, literal::family_of(n, expected)) + "\n");
      });
      Sds rep = conjunctive_closure(space, ws);
      conj.expect(rep == closed, [&] {
        return in_universe(u, show_w(u, w) + "fixpoint: " + format_family_inline(u, closed) +
                                  "\nconjunctive: " + format_family_inline(u, rep) + "\n");
      });
      Sdfs fclosed = sdfs_closure(u, ws, cfg);
      conj.expect(static_cast<const SetFamily&>(fclosed) == rep, [&] {
        return in_universe(u, show_w(u, w) + "SDFS fixpoint: " + format_family_inline(u, fclosed) +
                                  "\nconjunctive: " + format_family_inline(u, rep) + "\n");
      });
      Sds inter = intersection_closure(space, ws);
      simplified.expect(inter == rep, [&] {
        return in_universe(u, show_w(u, w) + "intersection form: " + format_family_inline(u, inter) +
                                  "\nconjunctive: " + format_family_inline(u, rep) + "\n");
      });
      families.push_back(literal::bits_of(closed));
      families.push_back(expected);
    }

    if (n <= 2)
      for (literal::Bits k = 0; k < (literal::Bits{1} << (std::size_t{1} << n)); ++k) families.push_back(k);
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());
    for (auto k : families) {
      Sds fam = literal::family_of(n, k);
      auto why = literal::violation(u, k);
      const Verdict finite = check_sds_coherent(u, fam, CoherenceMode::finite, cfg);
      const Verdict full = check_sds_coherent(u, fam, CoherenceMode::full, cfg);
      checker.expect(finite.ok() == !why && full.ok() == !why, [&] {
        return in_universe(u, "K: " + format_family_inline(u, fam) + "\nliteral: " + (why ? *why : "coherent") +
                                  "\nchecker: " + describe(u, finite) + "\n");
      });
      modes.expect(finite.ok() == full.ok(), [&] {
        return in_universe(u, "K: " + format_family_inline(u, fam) + "\nfinite: " + describe(u, finite) +
                                  "\nfull: " + describe(u, full) + "\n");
      });
    }

    for (const auto& d : space.coherent()) {
      Sds model = sdsify(u, d);
      const bool ok = check_sds_coherent(u, model, CoherenceMode::finite, cfg).ok() && is_conjunctive(u, model) &&
                      is_complete(model) && sdtify(u, model) == d;
      characterization.expect(ok, [&] { return in_universe(u, "D: " + u.format(d) + "\n"); });
      for (const auto& e : space.coherent()) {
        const bool lhs = d.subset_of(e);
        const bool rhs = model.subset_of(sdsify(u, e));
        embedding.expect(lhs == rhs, [&] { return in_universe(u, "D1: " + u.format(d) + "\nD2: " + u.format(e) + "\n"); });
      }
    }

    const auto coherent = enumerate_coherent_sdses(u, CoherenceMode::finite, cfg);
    Sds smallest = Sds::top(n);
    for (const auto& k : coherent) smallest = smallest & k;
    Sds meeting(n);
    for (Subset s = 0; s < (Subset{1} << n); ++s)
      if (s & u.always_desirable().mask()) meeting.insert(s);
    if (!coherent.empty())
      bottom.expect(smallest == meeting, [&] {
        return in_universe(u, "intersection: " + format_family_inline(u, smallest) +
                                  "\nexpected: " + format_family_inline(u, meeting) + "\n");
      });
    else
      bottom.expect(false, [&] { return in_universe(u, "no coherent SDS found\n"); });

    for (const auto& w : small_families(n, 3)) {
      if (std::find(w.begin(), w.end(), Subset{0}) != w.end()) continue;
      const literal::Bits raw = literal::raw_products(u, w);
      const Sds produced = production_step(u, w);
      const Sds up = Sds(up_closure(literal::family_of(n, raw)));
      production.expect(literal::bits_of(raw_production(u, w)) == raw && produced == up, [&] {
        return in_universe(u, show_w(u, w) + "production: " + format_family_inline(u, produced) +
                                  "\nexpected: " + format_family_inline(u, up) + "\n");
      });

      Sds ws(n);
      for (auto s : w) ws.insert(s);
      Event e = event_of(space, ws);
      Event by_models;
      for (std::size_t i = 0; i < space.size(); ++i)
        if (ws.subset_of(sdsify(u, space.coherent()[i]))) by_models.bits |= std::uint64_t{1} << i;
      binary.expect(e == by_models, [&] {
        return in_universe(u, show_w(u, w) + "E_W: " + space.format(e) + "\nexpected: " + space.format(by_models) + "\n");
      });
      Event product = space.all();
      for (auto s : w) product = product & basic_event(space, s);
      meet.expect(e == product, [&] {
        return in_universe(u, show_w(u, w) + "E_W: " + space.format(e) + "\nintersection: " + space.format(product) + "\n");
      });

      for (const auto& k : coherent) {
        if (!ws.subset_of(k)) continue;
        consistency.expect(!e.empty(), [&] { return in_universe(u, show_w(u, w) + "K: " + format_family_inline(u, k) + "\n"); });
        for (Subset s = 0; s < (Subset{1} << n); ++s) {
          if (!e.subset_of(basic_event(space, s))) continue;
          workhorse.expect(k.contains(s), [&] {
            return in_universe(u, show_w(u, w) + "K: " + format_family_inline(u, k) + "\nW2: [" +
                                      format_subset_braced(u, s) + "]\n");
          });
        }
      }
    }
  }

  Report r;
  for (Law* l : {&least, &conj, &simplified, &checker, &modes, &characterization, &embedding, &bottom, &production,
                 &binary, &meet, &workhorse, &consistency})
    l->finish(r);
  return r;
}

}  // namespace desire::lawcheck
