#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "desire/rational_lp.hpp"

namespace desire::gambles {

// One exact value per outcome.
using Gamble = std::vector<Rational>;

// 𝒢≻0: nowhere negative and somewhere positive.
bool is_positive(const Gamble& g);
// 𝒢⪯0: nowhere positive.
bool is_nonpositive(const Gamble& g);
std::string format_gamble(const Gamble& g);  // "(1, -1/2)"

// Generators of a set of desirable gambles; 𝒢≻0 is always included.
struct GambleStatementSet {
  std::size_t outcomes = 0;
  std::vector<Gamble> desirable;
};

// g = Σ lambda[i]·desirable[i] + positive_part, with positive_part zero or in 𝒢≻0.
struct Combination {
  std::vector<Rational> lambda;
  Gamble positive_part;
};

struct NatexResult {
  bool member = false;
  std::optional<Combination> certificate;
};

// Membership of g in posi(D ∪ 𝒢≻0). Throws InputError on dimension mismatch.
NatexResult natural_extension(const GambleStatementSet& d, const Gamble& g);
bool natural_extension_contains(const GambleStatementSet& d, const Gamble& g);

// 0 ∉ posi(D ∪ 𝒢≻0). The certificate, if any, combines to zero.
NatexResult inconsistency(const GambleStatementSet& d);
bool is_consistent_gambles(const GambleStatementSet& d);

// Finite sets of gambles, each asserted to contain a desirable one.
struct GambleSetStatementSet {
  std::size_t outcomes = 0;
  std::vector<std::vector<Gamble>> members;
};

struct GambleVerdict {
  enum class Status { no_violation_found, violated };
  Status status = Status::no_violation_found;
  std::string axiom;        // "OF1", "OF3" or "OF5"
  std::string description;
  std::vector<Gamble> produced;  // OF5: the combinations making up the produced set
};

inline constexpr std::size_t kMaxSelections = std::size_t{1} << 14;

// Looks for a derivable violation. Every selection of one gamble per member
// is tested for consistency; the verdict never claims full coherence.
GambleVerdict check_gamble_sdfs(const GambleSetStatementSet& f);

// ĥ in the least finitely coherent SDFS containing the statements. An
// inconsistent statement set contains everything.
bool gamble_sdfs_contains(const GambleSetStatementSet& f, const std::vector<Gamble>& h);

// H ⊖ u = {h - u : h ∈ H, h ≠ u}.
std::vector<Gamble> shift_out(const std::vector<Gamble>& options, std::size_t u);

// H ⊖ u desirable under the statement model. Throws InputError if u is out of range.
bool rejects(const GambleSetStatementSet& model, const std::vector<Gamble>& options, std::size_t u);

// Mass functions satisfying each constraint coeffs·p (relation) rhs.
struct CredalSet {
  std::size_t outcomes = 0;
  std::vector<LinearConstraint> constraints;

  static CredalSet vacuous(std::size_t outcomes) { return {outcomes, {}}; }
  // All constraints plus p >= 0 and Σp = 1.
  std::vector<LinearConstraint> with_simplex() const;
  std::optional<std::vector<Rational>> some_point() const;
};

Rational expectation(const std::vector<Rational>& p, const Gamble& g);

struct CredalVerdict {
  bool member = false;
  std::optional<std::vector<Rational>> witness;  // p with E_p(h) <= 0 for all h, when not a member
};

// ∀p ∈ M ∃h ∈ ĥ: E_p(h) > 0.
CredalVerdict credal_sdfs(const CredalSet& m, const std::vector<Gamble>& h);
bool rejects(const CredalSet& m, const std::vector<Gamble>& options, std::size_t u);

struct Admissibility {
  std::vector<std::size_t> admissible;
  std::vector<std::size_t> rejected;
  std::vector<std::optional<std::vector<Rational>>> witness;  // per option: p under which it is maximal
};

// Options maximizing expectation under some p ∈ M. Throws InputError when M is empty.
Admissibility e_admissible(const CredalSet& m, const std::vector<Gamble>& options);

// Files: "gamble name: 1 -1/2", "constraint: 1 0 >= 3/10", "set: a b",
// "assert-set: a b"; '#' comments.
struct GambleFile {
  std::size_t outcomes = 0;
  std::vector<std::string> names;
  std::vector<Gamble> gambles;
  std::vector<std::vector<std::size_t>> sets;         // "set:" lines
  std::vector<std::vector<std::size_t>> assertions;   // "assert-set:" lines
  std::size_t index_of(std::string_view name) const;
};

Rational parse_rational(std::string_view text);
GambleFile parse_gamble_file(std::string_view text);
CredalSet parse_credal(std::string_view text, std::size_t outcomes);

}  // namespace desire::gambles
