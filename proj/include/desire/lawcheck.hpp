#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "desire/sds.hpp"
#include "desire/universe.hpp"

namespace desire::lawcheck {

enum class Budget { tiny, standard, full };
// "tiny", "default" or "full".
Budget parse_budget(std::string_view text);

struct Options {
  std::uint64_t seed = 7;
  Budget budget = Budget::standard;
  EngineConfig engine;  // what the sds, filters and logic suites run the engine with
};

struct LawResult {
  std::string suite;
  std::string law;  // the theorem or property checked
  std::size_t cases = 0;
  std::optional<std::string> counterexample;  // first failing case, serialized
  bool passed() const { return !counterexample; }
};

struct Report {
  std::vector<LawResult> laws;
  bool passed() const;
  std::size_t failures() const;
};

inline const std::vector<std::string> kSuites{"core", "sds", "filters", "logic", "gambles"};

// One of kSuites or "all". Throws InputError for anything else.
Report run(std::string_view suite, const Options& options);

Report run_core(const Options& options);
Report run_sds(const Options& options);
Report run_filters(const Options& options);
Report run_logic(const Options& options);
Report run_gambles(const Options& options);

// Human-readable; counterexamples indented under their law.
std::string format_text(const Report& r);
// Tab-separated records "law", "counterexample" and "summary", fields in fixed order.
std::string format_lines(const Report& r);

// Cases are counted one by one; the first failure is kept.
class Law {
 public:
  Law(std::string suite, std::string law) { result_.suite = std::move(suite), result_.law = std::move(law); }
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && !result_.counterexample) result_.counterexample = describe();
  }
  bool failing() const { return result_.counterexample.has_value(); }
  void finish(Report& r) { r.laws.push_back(std::move(result_)); }

 private:
  LawResult result_;
};

// Random rule universe on n things whose cl(∅) avoids the forbidden things.
Universe random_universe(std::mt19937_64& rng, std::size_t n, std::size_t max_rules);
// The fixed small universes followed by random ones of increasing size.
std::vector<Universe> universes(std::mt19937_64& rng, std::size_t random_count, std::size_t max_things);

}  // namespace desire::lawcheck
