#include "desire/set_family.hpp"

#include "desire/errors.hpp"

namespace desire {

SetFamily::SetFamily(std::size_t things) : things_(things) {
  if (things > kMaxFamilyThings)
    throw CapacityError("set families are limited to universes of " + std::to_string(kMaxFamilyThings) + " things");
  bits_.resize(std::size_t{1} << things);
}

std::vector<Subset> SetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(count());
  for_each([&](Subset s) { out.push_back(s); });
  return out;
}

std::size_t SetFamily::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ things_;
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(bits_, std::back_inserter(blocks));
  for (auto b : blocks) {
    h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Sds Sds::top(std::size_t things) {
  Sds s(things);
  s.bits_.set();
  return s;
}

Sdfs Sdfs::top(std::size_t things) {
  Sdfs s(things);
  s.bits_.set();
  return s;
}

Sds make_sds(const Universe& u, const std::vector<ThingSet>& members) {
  Sds out(u.size());
  for (const auto& m : members) out.insert(m);
  return out;
}

Sdfs make_sdfs(const Universe& u, const std::vector<ThingSet>& members) { return Sdfs(make_sds(u, members)); }

std::string format_subset(const Universe& u, Subset s) { return u.format_members(u.from_mask(s)); }
std::string format_subset_braced(const Universe& u, Subset s) { return u.format(u.from_mask(s)); }

std::string format_family(const Universe& u, const SetFamily& f) {
  if (f.is_top()) return "INCONSISTENT\n";
  std::string out;
  f.for_each([&](Subset s) { out += format_subset(u, s) + "\n"; });
  return out;
}

std::string format_family_inline(const Universe& u, const SetFamily& f) {
  std::string out = "[";
  bool first = true;
  f.for_each([&](Subset s) {
    if (!first) out += ' ';
    first = false;
    out += format_subset_braced(u, s);
  });
  return out + "]";
}

}  // namespace desire
