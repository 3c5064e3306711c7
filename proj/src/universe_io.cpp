#include "desire/universe_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "desire/errors.hpp"

namespace desire {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct PendingRule {
  std::vector<std::string> premises;
  std::string conclusion;
  std::size_t line;
};

bool valid_identifier(const std::string& s) {
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'')) return false;
  return !s.empty();
}

}  // namespace

Universe parse_universe(std::string_view text) {
  std::vector<std::string> things;
  bool have_things = false;
  std::size_t things_line = 0;
  std::vector<std::pair<std::string, std::size_t>> forbidden;
  std::vector<PendingRule> rules;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw InputError("expected 'key: value'", line_no);
    auto key_words = split_words(line.substr(0, colon));
    if (key_words.size() != 1) throw InputError("expected 'key: value'", line_no);
    const std::string& key = key_words[0];
    auto values = split_words(line.substr(colon + 1));
    for (const auto& v : values)
      if (v != "->" && !valid_identifier(v)) throw InputError("invalid identifier '" + v + "'", line_no);

    if (key == "things") {
      if (have_things) throw InputError("duplicate 'things:' line", line_no);
      have_things = true;
      things_line = line_no;
      for (auto& v : values)
        if (v == "->") throw InputError("'->' is not a thing", line_no);
      things = std::move(values);
      if (things.empty()) throw InputError("'things:' needs at least one thing", line_no);
    } else if (key == "forbidden") {
      for (auto& v : values) {
        if (v == "->") throw InputError("'->' is not a thing", line_no);
        forbidden.emplace_back(v, line_no);
      }
    } else if (key == "rule") {
      std::size_t arrows = 0, arrow_at = 0;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == "->") ++arrows, arrow_at = i;
      if (arrows != 1 || arrow_at + 2 != values.size())
        throw InputError("rule must read 'premises -> conclusion' with one conclusion", line_no);
      PendingRule r;
      r.premises.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(arrow_at));
      r.conclusion = values.back();
      r.line = line_no;
      rules.push_back(std::move(r));
    } else {
      throw InputError("unknown key '" + key + "'", line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_things) throw InputError("missing 'things:' line", line_no);

  const std::size_t n = things.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(things[i], i).second) throw InputError("duplicate thing '" + things[i] + "'", things_line);
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw InputError("unknown thing '" + name + "'", line);
    return it->second;
  };

  ThingSet forbidden_set(n);
  for (const auto& [name, line] : forbidden) forbidden_set.insert(lookup(name, line));
  RuleSet rule_set;
  for (const auto& r : rules) {
    Rule rule{ThingSet(n), lookup(r.conclusion, r.line)};
    for (const auto& p : r.premises) rule.premises.insert(lookup(p, r.line));
    rule_set.rules.push_back(std::move(rule));
  }
  return Universe(std::move(things), std::move(rule_set), std::move(forbidden_set));
}

Universe load_universe(const std::string& path) { return parse_universe(read_file(path)); }

std::string universe_to_text(const Universe& u) {
  std::string out = "things:";
  for (const auto& t : u.things()) out += " " + t;
  out += "\n";
  if (!u.forbidden().empty()) out += "forbidden: " + u.format_members(u.forbidden()) + "\n";
  if (auto* rules = std::get_if<RuleSet>(&u.closure_spec())) {
    for (const auto& r : rules->rules) {
      out += "rule:";
      if (!r.premises.empty()) out += " " + u.format_members(r.premises);
      out += " -> " + u.name(r.conclusion) + "\n";
    }
  } else {
    out += "# closure: non-rule operator, not serialisable\n";
  }
  return out;
}

}  // namespace desire
