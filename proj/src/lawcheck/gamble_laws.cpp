#include <algorithm>

#include "common.hpp"
#include "desire/gambles.hpp"

namespace desire::lawcheck {

using namespace desire::gambles;

namespace {

Rational small(std::mt19937_64& rng, int lo, int hi) {
  const int den = 1 + static_cast<int>(rng() % 3);
  const int num = lo * den + static_cast<int>(rng() % static_cast<unsigned>((hi - lo) * den + 1));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Gamble random_gamble(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  Gamble g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(small(rng, lo, hi));
  return g;
}

bool is_zero(const Gamble& g) {
  return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v == 0; });
}

std::string show(const GambleStatementSet& d) {
  std::string out = "D:";
  for (const auto& g : d.desirable) out += " " + format_gamble(g);
  return out + "\n";
}

std::string show(const std::vector<Gamble>& h, const char* label) {
  std::string out = label;
  for (const auto& g : h) out += " " + format_gamble(g);
  return out + "\n";
}

std::string show(const CredalSet& m) {
  std::string out = "M: mass functions on " + std::to_string(m.outcomes) + " outcomes";
  for (const auto& c : m.constraints) {
    out += "; " + format_gamble(c.coeffs) + (c.relation == Relation::ge ? " >= " : c.relation == Relation::le ? " <= " : " = ");
    out += c.rhs.get_str();
  }
  return out + "\n";
}

// g = Σλd + positive part, with nonnegative parts and something positive when g is not zero.
bool valid_certificate(const GambleStatementSet& d, const Gamble& g, const Combination& c) {
  if (c.lambda.size() != d.desirable.size() || c.positive_part.size() != g.size()) return false;
  Gamble sum = c.positive_part;
  bool any = false;
  for (const auto& v : c.positive_part) {
    if (v < 0) return false;
    any = any || v > 0;
  }
  for (std::size_t i = 0; i < c.lambda.size(); ++i) {
    if (c.lambda[i] < 0) return false;
    any = any || c.lambda[i] > 0;
    for (std::size_t x = 0; x < g.size(); ++x) sum[x] += c.lambda[i] * d.desirable[i][x];
  }
  return any && sum == g;
}

bool in_credal(const CredalSet& m, const std::vector<Rational>& p) {
  if (p.size() != m.outcomes) return false;
  for (const auto& c : m.with_simplex()) {
    Rational lhs = expectation(p, c.coeffs);
    if ((c.relation == Relation::ge && lhs < c.rhs) || (c.relation == Relation::le && lhs > c.rhs) ||
        (c.relation == Relation::eq && lhs != c.rhs))
      return false;
  }
  return true;
}

CredalSet random_credal(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    CredalSet m = CredalSet::vacuous(n);
    const std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) m.constraints.push_back({random_gamble(rng, n, -2, 2), Relation::ge, small(rng, -1, 1)});
    if (m.some_point()) return m;
  }
}

}  // namespace

Report run_gambles(const Options& options) {
  auto rng = suite_rng(options, 5);
  const std::size_t rounds = scaled(options.budget, 15, 150, 1500);

  Law certificates("gambles", "natural extension certificates combine to the gamble");
  Law consistency("gambles", "inconsistency certificates combine to zero");
  Law od1("gambles", "OD1: a consistent natural extension avoids zero");
  Law od2("gambles", "OD2: the natural extension contains every positive gamble and every generator");
  Law od3("gambles", "OD3: the natural extension is closed under positive scaling and sums");
  Law nonpositive("gambles", "a consistent natural extension avoids every nowhere-positive gamble");
  Law rescaling("gambles", "rescaling a generator leaves the natural extension unchanged");
  Law conjunctive("gambles", "singleton gamble sets behave like the natural extension");
  Law produced("gambles", "OF5 violations produce only nowhere-positive gambles");
  Law complement("gambles", "rejection is the complement of E-admissibility");
  Law witnesses("gambles", "E-admissibility and credal witnesses are valid");
  Law dominance("gambles", "strictly dominated options are rejected");
  Law sen("gambles", "rejection persists when options are added");

  for (std::size_t round = 0; round < rounds; ++round) {
    const std::size_t n = 2 + rng() % 2;
    GambleStatementSet d{n, {}};
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) d.desirable.push_back(random_gamble(rng, n));
    Gamble g = random_gamble(rng, n);
    auto where = [&] { return show(d) + "g: " + format_gamble(g) + "\n"; };

    auto r = natural_extension(d, g);
    if (r.member) certificates.expect(r.certificate && valid_certificate(d, g, *r.certificate), where);
    auto bad = inconsistency(d);
    if (bad.member) consistency.expect(bad.certificate && valid_certificate(d, Gamble(n), *bad.certificate), where);

    GambleSetStatementSet f{n, {}};
    for (const auto& h : d.desirable) f.members.push_back({h});
    std::vector<Gamble> pair{g, random_gamble(rng, n)};
    const bool expected = bad.member || natural_extension_contains(d, pair[0]) || natural_extension_contains(d, pair[1]);
    conjunctive.expect(gamble_sdfs_contains(f, pair) == expected, [&] { return show(d) + show(pair, "h:"); });

    GambleSetStatementSet mixed{n, {}};
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      std::vector<Gamble> member;
      for (std::size_t j = 0; j < 1 + rng() % 2; ++j) member.push_back(random_gamble(rng, n));
      mixed.members.push_back(std::move(member));
    }
    auto v = check_gamble_sdfs(mixed);
    if (v.status == GambleVerdict::Status::violated && v.axiom == "OF5")
      produced.expect(!v.produced.empty() && std::all_of(v.produced.begin(), v.produced.end(), is_nonpositive), [&] {
        std::string out;
        for (const auto& m : mixed.members) out += show(m, "member:");
        return out;
      });

    if (!bad.member) {
      od1.expect(!natural_extension_contains(d, Gamble(n)), where);
      Gamble pos = random_gamble(rng, n, 0, 2);
      if (is_positive(pos))
        od2.expect(natural_extension_contains(d, pos), [&] { return show(d) + "positive: " + format_gamble(pos) + "\n"; });
      for (const auto& h : d.desirable) od2.expect(natural_extension_contains(d, h), where);
      Gamble nonpos = random_gamble(rng, n, -2, 0);
      nonpositive.expect(!natural_extension_contains(d, nonpos),
                         [&] { return show(d) + "nowhere positive: " + format_gamble(nonpos) + "\n"; });

      Gamble g2 = random_gamble(rng, n);
      const Rational a = small(rng, 1, 3), b = small(rng, 1, 3);
      Gamble scaled_g = g, combo(n);
      for (std::size_t x = 0; x < n; ++x) {
        scaled_g[x] *= a;
        combo[x] = a * g[x] + b * g2[x];
      }
      const bool member = r.member;
      od3.expect(natural_extension_contains(d, scaled_g) == member, where);
      if (member && !is_zero(combo) && natural_extension_contains(d, g2))
        od3.expect(natural_extension_contains(d, combo),
                   [&] { return where() + "g2: " + format_gamble(g2) + "\nsum: " + format_gamble(combo) + "\n"; });

      GambleStatementSet rescaled = d;
      for (auto& x : rescaled.desirable[0]) x *= b;
      rescaling.expect(natural_extension_contains(rescaled, g) == member, where);
    }

    CredalSet m = random_credal(rng, n);
    std::vector<Gamble> opts;
    for (std::size_t k = 0; k < 1 + rng() % 4; ++k) opts.push_back(random_gamble(rng, n));
    auto at = [&] { return show(m) + show(opts, "options:"); };
    auto adm = e_admissible(m, opts);
    for (std::size_t u = 0; u < opts.size(); ++u) {
      const bool admissible = std::find(adm.admissible.begin(), adm.admissible.end(), u) != adm.admissible.end();
      complement.expect(rejects(m, opts, u) == !admissible, at);
      if (!admissible) continue;
      const auto& p = adm.witness[u];
      bool ok = p && in_credal(m, *p);
      if (ok)
        for (const auto& o : opts) ok = ok && expectation(*p, opts[u]) >= expectation(*p, o);
      witnesses.expect(ok, at);
    }
    auto credal = credal_sdfs(m, opts);
    if (!credal.member) {
      bool ok = credal.witness && in_credal(m, *credal.witness);
      if (ok)
        for (const auto& o : opts) ok = ok && expectation(*credal.witness, o) <= 0;
      witnesses.expect(ok, at);
    }

    std::vector<Gamble> more = opts;
    Gamble worse = opts[0];
    for (auto& x : worse) x -= small(rng, 1, 2);
    more.push_back(worse);
    auto dominated = e_admissible(m, more);
    dominance.expect(std::find(dominated.rejected.begin(), dominated.rejected.end(), more.size() - 1) !=
                         dominated.rejected.end(),
                     [&] { return show(m) + show(more, "options:"); });
    more.push_back(random_gamble(rng, n));
    for (std::size_t u = 0; u < opts.size(); ++u)
      if (rejects(m, opts, u))
        sen.expect(rejects(m, more, u), [&] { return show(m) + show(more, "options:") + "rejected: " + std::to_string(u) + "\n"; });
  }

  Report r;
  for (Law* law : {&certificates, &consistency, &od1, &od2, &od3, &nonpositive, &rescaling, &conjunctive, &produced,
                   &complement, &witnesses, &dominance, &sen})
    law->finish(r);
  return r;
}

}  // namespace desire::lawcheck
