#include <algorithm>

#include "desire/errors.hpp"
#include "desire/lawcheck.hpp"

namespace desire::lawcheck {

Budget parse_budget(std::string_view text) {
  if (text == "tiny") return Budget::tiny;
  if (text == "default") return Budget::standard;
  if (text == "full") return Budget::full;
  throw InputError("unknown budget '" + std::string(text) + "' (tiny, default, full)");
}

bool Report::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(laws.begin(), laws.end(), [](const LawResult& l) { return !l.passed(); }));
}

Report run(std::string_view suite, const Options& options) {
  if (suite == "all") {
    Report all;
    for (const auto& s : kSuites) {
      Report r = run(s, options);
      all.laws.insert(all.laws.end(), r.laws.begin(), r.laws.end());
    }
    return all;
  }
  if (suite == "core") return run_core(options);
  if (suite == "sds") return run_sds(options);
  if (suite == "filters") return run_filters(options);
  if (suite == "logic") return run_logic(options);
  if (suite == "gambles") return run_gambles(options);
  throw InputError("unknown suite '" + std::string(suite) + "'");
}

namespace {

std::string summary(const Report& r) {
  std::size_t cases = 0;
  for (const auto& l : r.laws) cases += l.cases;
  return std::to_string(r.laws.size()) + " laws, " + std::to_string(r.laws.size() - r.failures()) + " passed, " +
         std::to_string(r.failures()) + " failed, " + std::to_string(cases) + " cases";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n')
      out += "\\n";
    else if (c == '\t')
      out += "\\t";
    else if (c == '\\')
      out += "\\\\";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string format_text(const Report& r) {
  std::string out;
  for (const auto& l : r.laws) {
    out += std::string(l.passed() ? "PASS " : "FAIL ") + l.suite + ": " + l.law + " [" + std::to_string(l.cases) +
           " cases]\n";
    if (l.counterexample) {
      std::string cx = *l.counterexample;
      if (!cx.empty() && cx.back() != '\n') cx += '\n';
      std::size_t pos = 0;
      while (pos < cx.size()) {
        auto end = cx.find('\n', pos);
        out += "    " + cx.substr(pos, end - pos) + "\n";
        pos = end + 1;
      }
    }
  }
  out += std::string(r.passed() ? "PASS " : "FAIL ") + summary(r) + "\n";
  return out;
}

std::string format_lines(const Report& r) {
  std::string out;
  for (const auto& l : r.laws)
    out += "law\t" + l.suite + "\t" + (l.passed() ? "PASS" : "FAIL") + "\t" + std::to_string(l.cases) + "\t" + l.law + "\n";
  for (const auto& l : r.laws)
    if (l.counterexample) out += "counterexample\t" + l.suite + "\t" + l.law + "\t" + escape(*l.counterexample) + "\n";
  out += std::string("summary\t") + (r.passed() ? "PASS" : "FAIL") + "\t" + std::to_string(r.laws.size()) + "\t" +
         std::to_string(r.failures()) + "\n";
  return out;
}

}  // namespace desire::lawcheck
