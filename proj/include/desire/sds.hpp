#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desire/events.hpp"
#include "desire/set_family.hpp"
#include "desire/universe.hpp"

namespace desire {

// The five coherence axioms. For SDFSes they are read as F1..F5.
enum class Axiom { k1 = 0, k2, k3, k4, k5 };

std::string axiom_name(Axiom a, bool finite_sets = false);

// Which axioms the engine enforces. Everything is on except in the mutation
// self-test, where one axiom at a time is switched off to show that the law
// checks notice.
struct EngineConfig {
  std::array<bool, 5> enabled{true, true, true, true, true};

  bool on(Axiom a) const { return enabled[static_cast<std::size_t>(a)]; }
  static EngineConfig without(Axiom a) {
    EngineConfig c;
    c.enabled[static_cast<std::size_t>(a)] = false;
    return c;
  }
};

enum class CoherenceMode { finite, full };

struct SelectionChoice {
  std::vector<std::size_t> picked;  // thing chosen from each member of W
  std::size_t produced_thing = 0;   // member of the produced set inside cl(sigma(W))
};

struct Violation {
  Axiom axiom = Axiom::k1;
  // K1: {∅}. K2: {s, s'} with s ⊆ s' missing. K3: {s, s minus T-}. K4: {{t}}.
  // K5: {produced set missing from K}.
  std::vector<Subset> sets;
  std::vector<Subset> generators;        // K5: the W
  std::vector<SelectionChoice> choices;  // K5: one entry per selection map
};

struct Verdict {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

std::string describe(const Universe& u, const Verdict& v, bool finite_sets = false);

Verdict check_sds_coherent(const Universe& u, const Sds& k, CoherenceMode mode = CoherenceMode::full,
                           const EngineConfig& config = {});
Verdict check_sdfs_coherent(const Universe& u, const Sdfs& f, CoherenceMode mode = CoherenceMode::finite,
                            const EngineConfig& config = {});

// Sets meeting cl(sigma(W)) for every selection sigma. Throws on ∅ ∈ W.
Sds production_step(const Universe& u, const std::vector<ThingSet>& w);
Sds production_step(const Universe& u, const std::vector<Subset>& w);
// Sets {t_sigma} for every way of picking t_sigma from each cl(sigma(W)),
// without upward closure.
Sds raw_production(const Universe& u, const std::vector<Subset>& w);

// Least coherent SDS containing w by axiom fixpoint; the full power set when w is inconsistent.
Sds sds_closure(const Universe& u, const SetFamily& w, const EngineConfig& config = {});
Sdfs sdfs_closure(const Universe& u, const SetFamily& w, const EngineConfig& config = {});

// Union over finite V ⊆ W of the intersection of S(D) over D in E_V.
Sds conjunctive_closure(const EventSpace& space, const SetFamily& w);
Sds conjunctive_closure(const Universe& u, const SetFamily& w);
// Intersection of S(D) over D in E_W; the full power set when E_W is empty.
Sds intersection_closure(const EventSpace& space, const SetFamily& w);

ThingSet sdtify(const Universe& u, const SetFamily& k);
Sds sdsify(const Universe& u, const ThingSet& d);
Sdfs sdfsify(const Universe& u, const ThingSet& d);

bool is_conjunctive(const Universe& u, const Sds& k);
Sds conjunctive_part(const Universe& u, const Sds& k);

// A pair s1, s2 with s1 ∪ s2 ∈ K but neither in K.
std::optional<std::pair<Subset, Subset>> completeness_witness(const SetFamily& k);
bool is_complete(const SetFamily& k);

Sdfs finite_part(const Sds& k);
Sds finitary_part(const Sds& k);
Sds up_close(const Sdfs& f);
bool is_finitary(const Sds& k);

// Complete coherent SDSes containing K. Throws InconsistencyError for inconsistent K.
std::vector<Sds> enumerate_complete_coherent_extensions(const EventSpace& space, const Sds& k);

// Every coherent SDS of a universe by scanning all families (at most 4 things).
std::vector<Sds> enumerate_coherent_sdses(const Universe& u, CoherenceMode mode = CoherenceMode::finite,
                                          const EngineConfig& config = {});

// Minimal members of a family.
std::vector<Subset> minimal_members(const SetFamily& k);
// Upward closure.
SetFamily up_closure(const SetFamily& k);

}  // namespace desire
