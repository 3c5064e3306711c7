#include <algorithm>
#include <cctype>

#include "desire/errors.hpp"
#include "desire/gambles.hpp"
#include "desire/universe_io.hpp"

namespace desire::gambles {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string_view body;
};

// Non-blank lines split at the first ':'.
template <typename Visit>
void for_each_line(std::string_view text, Visit visit) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_words(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw InputError("missing ':'", line_no);
    std::string key;
    for (const auto& w : split_words(line.substr(0, colon))) key += (key.empty() ? "" : " ") + w;
    visit(Line{line_no, key, line.substr(colon + 1)});
  }
}

Gamble parse_values(std::string_view body, std::size_t line_no) {
  Gamble g;
  for (const auto& w : split_words(body)) {
    try {
      g.push_back(parse_rational(w));
    } catch (const InputError& e) {
      throw InputError(e.what(), line_no);
    }
  }
  if (g.empty()) throw InputError("no values", line_no);
  return g;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view body = text;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos ? digits(body)
                                                   : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw InputError("'" + std::string(text) + "' is not a rational");
  if (slash != std::string_view::npos && std::all_of(body.begin() + static_cast<std::ptrdiff_t>(slash) + 1, body.end(),
                                                     [](char c) { return c == '0'; }))
    throw InputError("'" + std::string(text) + "' has a zero denominator");
  Rational r(std::string(text[0] == '+' ? text.substr(1) : text));
  r.canonicalize();
  return r;
}

std::size_t GambleFile::index_of(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown gamble '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

GambleFile parse_gamble_file(std::string_view text) {
  GambleFile f;
  for_each_line(text, [&](const Line& l) {
    auto words = split_words(l.key);
    if (words.size() == 2 && words[0] == "gamble") {
      if (std::find(f.names.begin(), f.names.end(), words[1]) != f.names.end())
        throw InputError("duplicate gamble '" + words[1] + "'", l.number);
      Gamble g = parse_values(l.body, l.number);
      if (f.gambles.empty()) f.outcomes = g.size();
      if (g.size() != f.outcomes)
        throw InputError("expected " + std::to_string(f.outcomes) + " values, got " + std::to_string(g.size()),
                         l.number);
      f.names.push_back(words[1]);
      f.gambles.push_back(std::move(g));
    } else if (l.key == "set" || l.key == "assert-set") {
      std::vector<std::size_t> s;
      for (const auto& name : split_words(l.body)) {
        try {
          s.push_back(f.index_of(name));
        } catch (const InputError& e) {
          throw InputError(e.what(), l.number);
        }
      }
      (l.key == "set" ? f.sets : f.assertions).push_back(std::move(s));
    } else {
      throw InputError("unknown directive '" + l.key + "'", l.number);
    }
  });
  return f;
}

CredalSet parse_credal(std::string_view text, std::size_t outcomes) {
  CredalSet m = CredalSet::vacuous(outcomes);
  for_each_line(text, [&](const Line& l) {
    if (l.key != "constraint") throw InputError("unknown directive '" + l.key + "'", l.number);
    auto words = split_words(l.body);
    auto op = std::find_if(words.begin(), words.end(), [](const std::string& w) { return w == ">=" || w == "<=" || w == "="; });
    if (op == words.end() || op + 2 != words.end()) throw InputError("expected 'c0 c1 ... >= r'", l.number);
    LinearConstraint c;
    c.relation = *op == ">=" ? Relation::ge : *op == "<=" ? Relation::le : Relation::eq;
    try {
      for (auto it = words.begin(); it != op; ++it) c.coeffs.push_back(parse_rational(*it));
      c.rhs = parse_rational(*(op + 1));
    } catch (const InputError& e) {
      throw InputError(e.what(), l.number);
    }
    if (c.coeffs.size() != outcomes)
      throw InputError("expected " + std::to_string(outcomes) + " coefficients, got " + std::to_string(c.coeffs.size()),
                       l.number);
    m.constraints.push_back(std::move(c));
  });
  return m;
}

}  // namespace desire::gambles
