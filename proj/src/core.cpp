#include "desire/core.hpp"

#include <algorithm>

#include "desire/errors.hpp"

namespace desire {

ThingSet closure(const Universe& u, const ThingSet& s) { return u.closure(s); }

bool is_coherent_sdt(const Universe& u, const ThingSet& s) {
  return !s.intersects(u.forbidden()) && u.closure(s) == s;
}

bool is_consistent_sdt(const Universe& u, const ThingSet& s) { return !u.closure(s).intersects(u.forbidden()); }

std::vector<ThingSet> enumerate_coherent_sdts(const Universe& u, std::size_t max_things) {
  const std::size_t n = u.size();
  if (n > max_things || n >= 63)
    throw CapacityError("refusing to scan 2^" + std::to_string(n) + " subsets (limit " + std::to_string(max_things) +
                        " things)");
  std::vector<ThingSet> out;
  const std::uint64_t forbidden = u.forbidden().mask();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (m & forbidden) continue;
    if (u.tabulated()) {
      if (u.closure_mask(static_cast<std::uint32_t>(m)) == m) out.push_back(u.from_mask(m));
    } else {
      ThingSet s = u.from_mask(m);
      if (u.closure(s) == s) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<ThingSet> enumerate_closed_sets(const Universe& u, std::size_t max_results) {
  const std::size_t n = u.size();
  std::vector<ThingSet> out;
  ThingSet current = u.closure(u.empty_set());
  const ThingSet all = u.full_set();
  while (true) {
    if (out.size() >= max_results) throw CapacityError("more than " + std::to_string(max_results) + " closed sets");
    out.push_back(current);
    if (current == all) break;
    for (std::size_t i = n; i-- > 0;) {
      if (current.contains(i)) {
        current.erase(i);
        continue;
      }
      ThingSet next = current;
      next.insert(i);
      next = u.closure(next);
      bool lectic = true;
      for (std::size_t j = 0; j < i && lectic; ++j)
        if (next.contains(j) && !current.contains(j)) lectic = false;
      if (lectic) {
        current = std::move(next);
        break;
      }
    }
  }
  return out;
}

std::vector<ThingSet> enumerate_coherent_sdts_lectic(const Universe& u, std::size_t max_results) {
  std::vector<ThingSet> out;
  for (auto& s : enumerate_closed_sets(u, max_results + 1))
    if (!s.intersects(u.forbidden())) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

ThingSet sdt_closure_via_intersection(const Universe& u, const std::vector<ThingSet>& coherent, const ThingSet& s) {
  ThingSet result = u.full_set();
  bool any = false;
  for (const auto& d : coherent) {
    if (s.subset_of(d)) {
      result &= d;
      any = true;
    }
  }
  if (!any) {
    throw InconsistencyError("inconsistent set " + u.format(s), u.format(u.closure(s) & u.forbidden()));
  }
  return result;
}

ThingSet sdt_closure_via_intersection(const Universe& u, const ThingSet& s, std::size_t max_things) {
  return sdt_closure_via_intersection(u, enumerate_coherent_sdts(u, max_things), s);
}

ThingSet never_desirable_things(const Universe& u) {
  ThingSet out = u.empty_set();
  for (std::size_t t = 0; t < u.size(); ++t) {
    if (u.forbidden().contains(t)) continue;
    ThingSet single = u.empty_set();
    single.insert(t);
    if (!is_consistent_sdt(u, single)) out.insert(t);
  }
  return out;
}

std::string describe(const ClosureLawViolation& v) {
  switch (v.law) {
    case 1:
      return "C1 (extensive) at subset mask " + std::to_string(v.first);
    case 2:
      return "C2 (monotone) at subset masks " + std::to_string(v.first) + " <= " + std::to_string(v.second);
    default:
      return "C3 (idempotent) at subset mask " + std::to_string(v.first);
  }
}

std::optional<ClosureLawViolation> check_closure_laws(std::size_t n,
                                                      const std::function<std::uint64_t(std::uint64_t)>& cl) {
  if (n > 20) throw CapacityError("exhaustive closure-law check is limited to 20 things");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> image(count);
  for (std::uint64_t a = 0; a < count; ++a) image[a] = cl(a);
  for (std::uint64_t a = 0; a < count; ++a)
    if ((a & ~image[a]) != 0) return ClosureLawViolation{1, a, 0};
  if (n <= 10) {
    for (std::uint64_t b = 0; b < count; ++b) {
      for (std::uint64_t a = b;; a = (a - 1) & b) {
        if ((image[a] & ~image[b]) != 0) return ClosureLawViolation{2, a, b};
        if (a == 0) break;
      }
    }
  } else {
    // Monotonicity along covering pairs implies it for all pairs.
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t b = a | (std::uint64_t{1} << t);
        if (b != a && (image[a] & ~image[b]) != 0) return ClosureLawViolation{2, a, b};
      }
    }
  }
  for (std::uint64_t a = 0; a < count; ++a)
    if (image[image[a]] != image[a]) return ClosureLawViolation{3, a, 0};
  return std::nullopt;
}

std::optional<ClosureLawViolation> check_closure_laws(const Universe& u) {
  return check_closure_laws(u.size(), [&](std::uint64_t m) { return u.closure(u.from_mask(m)).mask(); });
}

std::optional<std::uint64_t> check_finitary(const Universe& u) {
  const std::size_t n = u.size();
  if (n > 12) throw CapacityError("finitary check is limited to 12 things");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    std::uint64_t united = 0;
    for (std::uint64_t f = a;; f = (f - 1) & a) {
      united |= u.closure(u.from_mask(f)).mask();
      if (f == 0) break;
    }
    if (united != u.closure(u.from_mask(a)).mask()) return a;
  }
  return std::nullopt;
}

}  // namespace desire
