#include "desire/gambles.hpp"

#include <algorithm>

#include "desire/errors.hpp"

namespace desire::gambles {

namespace {

void check_width(const Gamble& g, std::size_t outcomes) {
  if (g.size() != outcomes)
    throw InputError("gamble " + format_gamble(g) + " has " + std::to_string(g.size()) + " values, expected " +
                     std::to_string(outcomes));
}

bool is_zero(const Gamble& g) {
  return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v == 0; });
}

// Calls visit with each choice of one gamble per member until it returns false.
template <typename Visit>
void for_each_selection(const GambleSetStatementSet& f, Visit visit) {
  std::size_t count = 1;
  for (const auto& m : f.members) {
    if (m.empty()) return;
    if (count > kMaxSelections / m.size())
      throw CapacityError("more than " + std::to_string(kMaxSelections) + " selections");
    count *= m.size();
  }
  std::vector<std::size_t> at(f.members.size(), 0);
  for (;;) {
    GambleStatementSet sel{f.outcomes, {}};
    for (std::size_t i = 0; i < at.size(); ++i) sel.desirable.push_back(f.members[i][at[i]]);
    if (!visit(sel)) return;
    std::size_t i = 0;
    while (i < at.size() && ++at[i] == f.members[i].size()) at[i++] = 0;
    if (i == at.size()) return;
  }
}

std::string format_set(const std::vector<Gamble>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + format_gamble(s[i]);
  return out + "}";
}

}  // namespace

bool is_positive(const Gamble& g) {
  return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v >= 0; }) && !is_zero(g);
}

bool is_nonpositive(const Gamble& g) {
  return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v <= 0; });
}

std::string format_gamble(const Gamble& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g[i].get_str();
  return out + ")";
}

NatexResult natural_extension(const GambleStatementSet& d, const Gamble& g) {
  check_width(g, d.outcomes);
  for (const auto& h : d.desirable) check_width(h, d.outcomes);
  const std::size_t k = d.desirable.size();
  const std::size_t n = d.outcomes;
  // Variables: lambda (k), then the positive part (n).
  std::vector<LinearConstraint> rows;
  for (std::size_t x = 0; x < n; ++x) {
    LinearConstraint c{std::vector<Rational>(k + n), Relation::eq, g[x]};
    for (std::size_t i = 0; i < k; ++i) c.coeffs[i] = d.desirable[i][x];
    c.coeffs[k + x] = 1;
    rows.push_back(std::move(c));
  }
  // For g = 0 the system is homogeneous; normalize to exclude the zero combination.
  if (is_zero(g)) rows.push_back({std::vector<Rational>(k + n, Rational(1)), Relation::eq, Rational(1)});
  auto point = feasible_point(k + n, rows);
  NatexResult r;
  if (!point) return r;
  r.member = true;
  Combination c;
  c.lambda.assign(point->begin(), point->begin() + static_cast<std::ptrdiff_t>(k));
  c.positive_part.assign(point->begin() + static_cast<std::ptrdiff_t>(k), point->end());
  r.certificate = std::move(c);
  return r;
}

bool natural_extension_contains(const GambleStatementSet& d, const Gamble& g) {
  return natural_extension(d, g).member;
}

NatexResult inconsistency(const GambleStatementSet& d) { return natural_extension(d, Gamble(d.outcomes)); }

bool is_consistent_gambles(const GambleStatementSet& d) { return !inconsistency(d).member; }

GambleVerdict check_gamble_sdfs(const GambleSetStatementSet& f) {
  for (const auto& m : f.members)
    for (const auto& g : m) check_width(g, f.outcomes);
  GambleVerdict v;
  for (const auto& m : f.members)
    if (m.empty()) {
      v.status = GambleVerdict::Status::violated;
      v.axiom = "OF1";
      v.description = "the empty set is a member";
      return v;
    }
  for (const auto& m : f.members)
    if (std::all_of(m.begin(), m.end(), is_nonpositive)) {
      v.status = GambleVerdict::Status::violated;
      v.axiom = "OF3";
      v.description = "member " + format_set(m) + " lies in 𝒢⪯0, removing 𝒢⪯0 leaves the empty set";
      return v;
    }

  bool consistent = false;
  std::vector<Gamble> produced;
  for_each_selection(f, [&](const GambleStatementSet& sel) {
    auto r = inconsistency(sel);
    if (!r.member) {
      consistent = true;
      return false;
    }
    Gamble sum(f.outcomes);
    for (std::size_t i = 0; i < sel.desirable.size(); ++i)
      for (std::size_t x = 0; x < f.outcomes; ++x) sum[x] += r.certificate->lambda[i] * sel.desirable[i][x];
    if (std::find(produced.begin(), produced.end(), sum) == produced.end()) produced.push_back(std::move(sum));
    return true;
  });
  if (consistent) return v;
  v.status = GambleVerdict::Status::violated;
  v.axiom = "OF5";
  v.description = "production over every member yields " + format_set(produced) +
                  " inside 𝒢⪯0, removing 𝒢⪯0 leaves the empty set";
  v.produced = std::move(produced);
  return v;
}

bool gamble_sdfs_contains(const GambleSetStatementSet& f, const std::vector<Gamble>& h) {
  for (const auto& g : h) check_width(g, f.outcomes);
  bool consistent = false;
  bool contained = true;
  for_each_selection(f, [&](const GambleStatementSet& sel) {
    if (!is_consistent_gambles(sel)) return true;
    consistent = true;
    contained = std::any_of(h.begin(), h.end(), [&](const Gamble& g) { return natural_extension_contains(sel, g); });
    return contained;
  });
  return !consistent || contained;
}

std::vector<Gamble> shift_out(const std::vector<Gamble>& options, std::size_t u) {
  if (u >= options.size()) throw InputError("option index out of range");
  std::vector<Gamble> out;
  for (const auto& h : options) {
    if (h == options[u]) continue;
    Gamble d(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) d[x] = h[x] - options[u][x];
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
  return out;
}

bool rejects(const GambleSetStatementSet& model, const std::vector<Gamble>& options, std::size_t u) {
  auto shifted = shift_out(options, u);
  return !shifted.empty() && gamble_sdfs_contains(model, shifted);
}

std::vector<LinearConstraint> CredalSet::with_simplex() const {
  std::vector<LinearConstraint> out;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != outcomes) throw InputError("credal constraint width does not match the outcome count");
    out.push_back(c);
  }
  out.push_back({std::vector<Rational>(outcomes, Rational(1)), Relation::eq, Rational(1)});
  return out;
}

std::optional<std::vector<Rational>> CredalSet::some_point() const { return feasible_point(outcomes, with_simplex()); }

Rational expectation(const std::vector<Rational>& p, const Gamble& g) {
  Rational e = 0;
  for (std::size_t x = 0; x < p.size(); ++x) e += p[x] * g[x];
  return e;
}

namespace {

// Some p in M with E_p(h) <= 0 for every h.
std::optional<std::vector<Rational>> nowhere_desirable(const CredalSet& m, const std::vector<Gamble>& h) {
  auto rows = m.with_simplex();
  for (const auto& g : h) {
    check_width(g, m.outcomes);
    rows.push_back({g, Relation::le, Rational(0)});
  }
  return feasible_point(m.outcomes, rows);
}

void require_nonempty(const CredalSet& m) {
  if (!m.some_point()) throw InputError("credal set is empty");
}

}  // namespace

CredalVerdict credal_sdfs(const CredalSet& m, const std::vector<Gamble>& h) {
  require_nonempty(m);
  CredalVerdict v;
  v.witness = nowhere_desirable(m, h);
  v.member = !v.witness;
  return v;
}

bool rejects(const CredalSet& m, const std::vector<Gamble>& options, std::size_t u) {
  auto shifted = shift_out(options, u);
  return !shifted.empty() && credal_sdfs(m, shifted).member;
}

Admissibility e_admissible(const CredalSet& m, const std::vector<Gamble>& options) {
  require_nonempty(m);
  Admissibility a;
  for (std::size_t u = 0; u < options.size(); ++u) {
    check_width(options[u], m.outcomes);
    std::vector<Gamble> gaps;
    for (const auto& h : options) {
      check_width(h, m.outcomes);
      Gamble d(h.size());
      for (std::size_t x = 0; x < h.size(); ++x) d[x] = h[x] - options[u][x];
      gaps.push_back(std::move(d));
    }
    auto p = nowhere_desirable(m, gaps);
    (p ? a.admissible : a.rejected).push_back(u);
    a.witness.push_back(std::move(p));
  }
  return a;
}

}  // namespace desire::gambles
