#include <algorithm>
#include <cctype>
#include <tuple>

#include "desire/logic.hpp"

namespace desire::logic {

struct Wff::Node {
  Op op = Op::atom;
  std::string name;
  std::optional<Wff> left;
  std::optional<Wff> right;
  std::size_t depth = 0;
};

Wff Wff::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  return Wff(std::move(n));
}

Wff Wff::negation(Wff operand) {
  auto n = std::make_shared<Node>();
  n->op = Op::negation;
  n->depth = operand.depth() + 1;
  n->left = std::move(operand);
  return Wff(std::move(n));
}

Wff Wff::binary(Op op, Wff left, Wff right) {
  if (op == Op::atom || op == Op::negation) throw InputError("not a binary connective");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  return Wff(std::move(n));
}

Op Wff::op() const { return node_->op; }
const std::string& Wff::name() const { return node_->name; }
const Wff& Wff::left() const { return *node_->left; }
const Wff& Wff::right() const { return *node_->right; }
std::size_t Wff::depth() const { return node_->depth; }

bool operator==(const Wff& a, const Wff& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::atom:
      return a.name() == b.name();
    case Op::negation:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

enum class Tok { atom, neg, conj, disj, impl, open, close, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t pos = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::atom, std::string(s.substr(i, j - i)), pos});
      i = j;
    } else if (c == '~') {
      out.push_back({Tok::neg, "~", pos}), ++i;
    } else if (c == '&') {
      out.push_back({Tok::conj, "&", pos}), ++i;
    } else if (c == '|') {
      out.push_back({Tok::disj, "|", pos}), ++i;
    } else if (c == '(') {
      out.push_back({Tok::open, "(", pos}), ++i;
    } else if (c == ')') {
      out.push_back({Tok::close, ")", pos}), ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::impl, "->", pos}), i += 2;
    } else {
      throw SyntaxError(std::string("unexpected character `") + c + "`", pos);
    }
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Wff parse() {
    Wff w = implication();
    if (peek().kind != Tok::end) fail();
    return w;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  [[noreturn]] void fail() const {
    const Token& t = peek();
    if (t.kind == Tok::end) throw SyntaxError("unexpected end of input", t.pos);
    throw SyntaxError("unexpected token `" + t.text + "`", t.pos);
  }

  Wff implication() {
    Wff w = disjunction();
    while (peek().kind == Tok::impl) {
      ++at_;
      w = Wff::binary(Op::implication, w, disjunction());
    }
    return w;
  }

  Wff disjunction() {
    Wff w = conjunction();
    while (peek().kind == Tok::disj) {
      ++at_;
      w = Wff::binary(Op::disjunction, w, conjunction());
    }
    return w;
  }

  Wff conjunction() {
    Wff w = unary();
    while (peek().kind == Tok::conj) {
      ++at_;
      w = Wff::binary(Op::conjunction, w, unary());
    }
    return w;
  }

  Wff unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::neg:
        ++at_;
        return Wff::negation(unary());
      case Tok::atom:
        ++at_;
        return Wff::atom(t.text);
      case Tok::open: {
        ++at_;
        Wff w = implication();
        if (peek().kind != Tok::close) fail();
        ++at_;
        return w;
      }
      default:
        fail();
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::implication:
      return 1;
    case Op::disjunction:
      return 2;
    case Op::conjunction:
      return 3;
    case Op::negation:
      return 4;
    case Op::atom:
      break;
  }
  return 5;
}

const char* symbol(Op op) {
  switch (op) {
    case Op::conjunction:
      return " & ";
    case Op::disjunction:
      return " | ";
    default:
      return " -> ";
  }
}

std::string wrap(const Wff& w, bool parens) { return parens ? "(" + to_string(w) + ")" : to_string(w); }

auto order_key(const Wff& w) {
  std::string s = to_string(w);
  return std::make_tuple(w.depth(), s.size(), s);
}

}  // namespace

Wff parse_wff(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Wff& w) {
  switch (w.op()) {
    case Op::atom:
      return w.name();
    case Op::negation:
      return "~" + wrap(w.left(), precedence(w.left().op()) < precedence(Op::negation));
    default: {
      const int p = precedence(w.op());
      return wrap(w.left(), precedence(w.left().op()) < p) + symbol(w.op()) +
             wrap(w.right(), precedence(w.right().op()) <= p);
    }
  }
}

Wff canonical(const Wff& w) {
  switch (w.op()) {
    case Op::atom:
      return w;
    case Op::negation:
      return Wff::negation(canonical(w.left()));
    case Op::implication:
      return Wff::binary(w.op(), canonical(w.left()), canonical(w.right()));
    default: {
      Wff a = canonical(w.left());
      Wff b = canonical(w.right());
      if (order_key(b) < order_key(a)) std::swap(a, b);
      return Wff::binary(w.op(), a, b);
    }
  }
}

TruthTable all_valuations(std::size_t atom_count) {
  if (atom_count > kMaxAtoms) throw CapacityError("at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  const std::size_t rows = std::size_t{1} << atom_count;
  return rows == 64 ? ~TruthTable{0} : (TruthTable{1} << rows) - 1;
}

TruthTable truth_table(const Wff& w, const std::vector<std::string>& atoms) {
  const TruthTable all = all_valuations(atoms.size());
  switch (w.op()) {
    case Op::atom: {
      auto it = std::find(atoms.begin(), atoms.end(), w.name());
      if (it == atoms.end()) throw InputError("unknown atom '" + w.name() + "'");
      const std::size_t i = static_cast<std::size_t>(it - atoms.begin());
      TruthTable t = 0;
      for (std::size_t v = 0; v < (std::size_t{1} << atoms.size()); ++v)
        if ((v >> i) & 1u) t |= TruthTable{1} << v;
      return t;
    }
    case Op::negation:
      return all & ~truth_table(w.left(), atoms);
    case Op::conjunction:
      return truth_table(w.left(), atoms) & truth_table(w.right(), atoms);
    case Op::disjunction:
      return truth_table(w.left(), atoms) | truth_table(w.right(), atoms);
    case Op::implication:
      return (all & ~truth_table(w.left(), atoms)) | truth_table(w.right(), atoms);
  }
  return 0;
}

bool entails(const std::vector<std::string>& atoms, const std::vector<Wff>& premises, const Wff& conclusion) {
  TruthTable models = all_valuations(atoms.size());
  for (const auto& p : premises) models &= truth_table(p, atoms);
  return (models & ~truth_table(conclusion, atoms)) == 0;
}

Wff disjoin(std::vector<Wff> members) {
  if (members.empty()) throw InputError("the disjunction of no wffs is undefined");
  for (auto& m : members) m = canonical(m);
  std::sort(members.begin(), members.end(), [](const Wff& a, const Wff& b) { return order_key(a) < order_key(b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Wff out = members.back();
  for (std::size_t i = members.size() - 1; i-- > 0;) out = Wff::binary(Op::disjunction, members[i], out);
  return out;
}

std::vector<Wff> parse_wff_list(std::string_view text) {
  std::vector<Wff> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        out.push_back(parse_wff(piece));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.detail(), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace desire::logic
