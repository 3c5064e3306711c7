#pragma once

#include <string>

#include "desire/lawcheck.hpp"
#include "desire/universe_io.hpp"

namespace desire::lawcheck {

inline std::size_t scaled(Budget b, std::size_t tiny, std::size_t standard, std::size_t full) {
  return b == Budget::tiny ? tiny : b == Budget::full ? full : standard;
}

inline std::string in_universe(const Universe& u, const std::string& detail) {
  return "universe:\n" + universe_to_text(u) + detail;
}

inline std::mt19937_64 suite_rng(const Options& o, std::uint64_t salt) { return std::mt19937_64(o.seed * 1000003u + salt); }

}  // namespace desire::lawcheck
