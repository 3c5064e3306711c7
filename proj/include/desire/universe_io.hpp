#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "desire/universe.hpp"

namespace desire {

// Line-oriented universe text:
//   things: a b c
//   forbidden: c
//   rule: a b -> c
// '#' starts a comment. Errors carry the offending line number.
Universe parse_universe(std::string_view text);
Universe load_universe(const std::string& path);

// Inverse of parse_universe for rule-set universes.
std::string universe_to_text(const Universe& u);

std::string read_file(const std::string& path);

// Whitespace-separated tokens of one line.
std::vector<std::string> split_words(std::string_view line);

}  // namespace desire
