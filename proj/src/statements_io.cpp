#include "desire/statements_io.hpp"

#include "desire/errors.hpp"
#include "desire/universe_io.hpp"

namespace desire {

std::vector<ThingSet> parse_statements(const Universe& u, std::string_view text) {
  std::vector<ThingSet> out;
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
    if (colon == std::string_view::npos) throw InputError("expected 'assert-set: ...'", line_no);
    auto key = split_words(line.substr(0, colon));
    if (key.size() != 1 || key[0] != "assert-set") throw InputError("expected 'assert-set: ...'", line_no);
    ThingSet s = u.empty_set();
    for (const auto& name : split_words(line.substr(colon + 1))) {
      auto t = u.find(name);
      if (!t) throw InputError("unknown thing '" + name + "'", line_no);
      s.insert(*t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ThingSet> load_statements(const Universe& u, const std::string& path) {
  return parse_statements(u, read_file(path));
}

std::string statements_to_text(const Universe& u, const std::vector<ThingSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    out += "assert-set:";
    if (!s.empty()) out += " " + u.format_members(s);
    out += "\n";
  }
  return out;
}

}  // namespace desire
