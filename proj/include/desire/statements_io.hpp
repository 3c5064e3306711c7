#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "desire/set_family.hpp"
#include "desire/universe.hpp"

namespace desire {

// "assert-set: a b" lines, one desirable set each; '#' comments.
std::vector<ThingSet> parse_statements(const Universe& u, std::string_view text);
std::vector<ThingSet> load_statements(const Universe& u, const std::string& path);

std::string statements_to_text(const Universe& u, const std::vector<ThingSet>& sets);

}  // namespace desire
