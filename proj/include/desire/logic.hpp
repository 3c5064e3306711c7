#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "desire/errors.hpp"
#include "desire/events.hpp"
#include "desire/sds.hpp"
#include "desire/universe.hpp"

namespace desire::logic {

enum class Op { atom, negation, conjunction, disjunction, implication };

// Immutable propositional formula; copies share structure.
class Wff {
 public:
  static Wff atom(std::string name);
  static Wff negation(Wff operand);
  static Wff binary(Op op, Wff left, Wff right);

  Op op() const;
  const std::string& name() const;  // atoms only
  const Wff& left() const;          // operand of a negation
  const Wff& right() const;
  std::size_t depth() const;

  friend bool operator==(const Wff& a, const Wff& b);

 private:
  struct Node;
  explicit Wff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError("syntax error at position " + std::to_string(position) + ": " + what),
        detail_(what),
        position_(position) {}
  const std::string& detail() const { return detail_; }
  // 1-based character offset of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// ~ binds tighter than &, then |, then ->; binary operators associate to the left.
Wff parse_wff(std::string_view text);
// Minimal parentheses.
std::string to_string(const Wff& w);
// Operands of & and | in a fixed order, recursively.
Wff canonical(const Wff& w);

inline constexpr std::size_t kMaxAtoms = 6;
// Bit v is the value under valuation v, where atom i is true iff bit i of v is set.
using TruthTable = std::uint64_t;

TruthTable all_valuations(std::size_t atom_count);
TruthTable truth_table(const Wff& w, const std::vector<std::string>& atoms);
bool entails(const std::vector<std::string>& atoms, const std::vector<Wff>& premises, const Wff& conclusion);

// Right-folded disjunction in canonical member order. Throws InputError when empty.
Wff disjoin(std::vector<Wff> members);

struct LindenbaumClass {
  Wff representative;
  TruthTable table = 0;
  std::vector<std::size_t> members;  // universe indices
};

// Every wff up to a syntactic depth, deduplicated by canonical form, with
// semantic consequence as its closure.
class LogicUniverse {
 public:
  LogicUniverse(std::vector<std::string> atoms, std::size_t depth, std::size_t max_things = 20000);

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return wffs_.size(); }
  const std::vector<Wff>& wffs() const { return wffs_; }
  const std::vector<TruthTable>& tables() const { return tables_; }
  TruthTable valuations() const { return all_valuations(atoms_.size()); }
  const Universe& universe() const { return universe_; }

  std::optional<std::size_t> find(const Wff& w) const;
  // Throws CapacityError naming the wff when it lies outside the depth bound.
  std::size_t index_of(const Wff& w) const;
  ThingSet make_set(const std::vector<Wff>& ws) const;
  // Universe wffs whose truth table is at least the given one.
  ThingSet consequences(TruthTable t) const;

  // Lindenbaum classes in representative order.
  const std::vector<LindenbaumClass>& classes() const { return classes_; }
  std::optional<std::size_t> class_of(TruthTable t) const;
  std::size_t class_index(const Wff& w) const;
  // Class operations; CapacityError when the result has no wff within the bound.
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t complement(std::size_t a) const;
  bool leq(std::size_t a, std::size_t b) const;

  // One thing per class, named by its representative; closure tabulated when
  // there are at most 16 classes.
  const Universe& class_universe() const { return class_universe_; }

  // "{p, p | q}"
  std::string format(const ThingSet& s) const;

 private:
  std::vector<std::string> atoms_;
  std::size_t depth_;
  std::vector<Wff> wffs_;
  std::vector<std::string> keys_;  // canonical print, parallel to wffs_
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<TruthTable> tables_;
  std::vector<LindenbaumClass> classes_;
  Universe universe_;
  Universe class_universe_;
};

Universe make_logic_universe(const std::vector<Wff>& wffs, const std::vector<TruthTable>& tables,
                             std::size_t atom_count);

// Closure of a set of premises within the universe: every wff they entail.
ThingSet logic_closure(const LogicUniverse& lu, const std::vector<Wff>& premises);

// Work on sets of desirable finite sets of wffs happens over the class universe.
struct ClassSpace {
  explicit ClassSpace(const LogicUniverse& lu);
  const LogicUniverse* logic;
  EventSpace events;
  std::vector<TruthTable> class_tables;
};

// Tables of the disjunctions of the members; the D(F) of an SDFS as a set of classes
// of the full Boolean algebra, which may go beyond the classes the universe realizes.
std::vector<TruthTable> disjunction_tables(const ClassSpace& space, const SetFamily& f);
// The same set as universe wffs. Throws CapacityError naming the first
// disjunction no universe wff is equivalent to.
ThingSet disjunction_sdt(const ClassSpace& space, const SetFamily& f);
// Class-level S^(D) for a set of tables.
Sdfs model_of_tables(const ClassSpace& space, const std::vector<TruthTable>& tables);

// Least finitely coherent SDFS of class sets containing w, through the
// conjunctive representation.
Sdfs class_sdfs_closure(const ClassSpace& space, const SetFamily& w);
// Every finitely coherent SDFS over the classes, by search over events.
std::vector<Sdfs> enumerate_class_sdfses(const ClassSpace& space);

// Which parts of the disjunction proposition hold for one finitely coherent SDFS.
struct DisjunctionReport {
  Sdfs family;
  bool coherent = true;             // D(F) within the universe deductively closed and consistent
  bool smallest = true;             // D(F) below every coherent D with F ⊆ S^(D), and itself such a D
  bool representation = true;       // F = S^(D(F))
  std::optional<Subset> missing;    // member of F outside S^(D(F))
};
DisjunctionReport check_disjunction_representation(const ClassSpace& space, const Sdfs& f);

// Wffs separated by ';', as in "p; q -> r".
std::vector<Wff> parse_wff_list(std::string_view text);

}  // namespace desire::logic
