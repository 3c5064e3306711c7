#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "desire/core.hpp"
#include "desire/errors.hpp"
#include "desire/events.hpp"
#include "desire/gambles.hpp"
#include "desire/lawcheck.hpp"
#include "desire/logic.hpp"
#include "desire/sds.hpp"
#include "desire/statements_io.hpp"
#include "desire/universe_io.hpp"

using namespace desire;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;  // incoherent, inconsistent or a failed law
constexpr int kInputError = 2;

constexpr std::size_t kDefaultThings = 12;
constexpr std::size_t kDefaultCoherent = 12;

enum class Format { text, lines };

// Text mode prints the human line; lines mode prints tab-separated fields.
class Out {
 public:
  explicit Out(Format f) : format_(f) {}
  void emit(const std::string& text, const std::vector<std::string>& fields) {
    if (format_ == Format::text) {
      buf_ += text + "\n";
      return;
    }
    std::string line;
    for (const auto& f : fields) line += (line.empty() ? "" : "\t") + f;
    buf_ += line + "\n";
  }
  void raw(const std::string& s) { buf_ += s; }
  bool text() const { return format_ == Format::text; }
  const std::string& str() const { return buf_; }

 private:
  Format format_;
  std::string buf_;
};

struct Capacity {
  std::size_t things = kDefaultThings;
  std::size_t coherent = kDefaultCoherent;
};

std::size_t parse_count(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  return std::stoul(s);
}

// DESIRE_KERNEL_CAPACITY is "N" for both bounds or "things=N,coherent=M".
Capacity capacity_from_env() {
  Capacity c;
  const char* env = std::getenv("DESIRE_KERNEL_CAPACITY");
  if (!env || !*env) return c;
  std::string s = env;
  if (s.find('=') == std::string::npos) {
    c.things = c.coherent = parse_count(s, "DESIRE_KERNEL_CAPACITY");
    return c;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    auto eq = item.find('=');
    std::string key = item.substr(0, eq);
    if (eq == std::string::npos || (key != "things" && key != "coherent"))
      throw InputError("bad DESIRE_KERNEL_CAPACITY entry '" + item + "'");
    (key == "things" ? c.things : c.coherent) = parse_count(item.substr(eq + 1), "DESIRE_KERNEL_CAPACITY");
    pos = end + 1;
  }
  return c;
}

Capacity resolve_capacity(std::optional<std::size_t> things, std::optional<std::size_t> coherent, bool force) {
  Capacity c = capacity_from_env();
  if (things) c.things = *things;
  if (coherent) c.coherent = *coherent;
  if (!force && (c.things > kDefaultThings || c.coherent > kDefaultCoherent))
    throw InputError("capacity above the defaults (" + std::to_string(kDefaultThings) + " things, " +
                     std::to_string(kDefaultCoherent) + " coherent SDTs) needs --force");
  return c;
}

void require_things(const Universe& u, const Capacity& cap) {
  if (u.size() > cap.things)
    throw CapacityError("universe has " + std::to_string(u.size()) + " things, limit " + std::to_string(cap.things) +
                        " (raise with --max-things and --force)");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '\n' ? std::string("\\n") : c == '\t' ? std::string("\\t") : std::string(1, c);
  return out;
}

std::string strip_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void emit_family(Out& out, const Universe& u, const SetFamily& k) {
  if (k.is_top()) {
    out.emit("INCONSISTENT", {"inconsistent"});
    return;
  }
  if (out.text()) {
    out.raw(format_family(u, k));
    return;
  }
  for (Subset s : k.members()) out.emit("", {"member", format_subset(u, s)});
}

// core

int cmd_closure(Out& out, const std::string& path, const std::string& set) {
  Universe u = load_universe(path);
  ThingSet s = u.make_set(split_list(set));
  ThingSet c = u.closure(s);
  out.emit(u.format(c), {"closure", u.format_members(c)});
  if (is_consistent_sdt(u, s)) return kOk;
  out.emit("INCONSISTENT", {"inconsistent", u.format_members(c & u.forbidden())});
  return kNegative;
}

int cmd_coherent(Out& out, const std::string& path, const std::string& set) {
  Universe u = load_universe(path);
  ThingSet s = u.make_set(split_list(set));
  ThingSet c = u.closure(s);
  if (!is_consistent_sdt(u, s)) {
    ThingSet bad = c & u.forbidden();
    out.emit("INCOHERENT closure meets forbidden " + u.format(bad), {"verdict", "INCOHERENT", "forbidden", u.format_members(bad)});
    return kNegative;
  }
  if (c != s) {
    ThingSet missing = c - s;
    out.emit("INCOHERENT not closed, missing " + u.format(missing), {"verdict", "INCOHERENT", "missing", u.format_members(missing)});
    return kNegative;
  }
  out.emit("COHERENT", {"verdict", "COHERENT"});
  return kOk;
}

int cmd_enumerate(Out& out, const std::string& path, const Capacity& cap) {
  Universe u = load_universe(path);
  require_things(u, cap);
  for (const auto& d : enumerate_coherent_sdts(u, cap.things)) out.emit(u.format(d), {"sdt", u.format_members(d)});
  return kOk;
}

// sds

struct SdsInput {
  Universe u;
  Sds w;
};

SdsInput load_sds_input(const std::string& universe_path, const std::string& statements_path, const Capacity& cap) {
  Universe u = load_universe(universe_path);
  require_things(u, cap);
  auto sets = load_statements(u, statements_path);
  Sds w = make_sds(u, sets);
  return {u, w};
}

int cmd_sds_close(Out& out, const SdsInput& in, const std::string& method, const Capacity& cap) {
  Sds k = method == "fixpoint" ? sds_closure(in.u, in.w) : conjunctive_closure(EventSpace(in.u, cap.things), in.w);
  emit_family(out, in.u, k);
  return k.is_top() ? kNegative : kOk;
}

int cmd_sds_check(Out& out, const SdsInput& in, const std::string& mode) {
  Verdict v = check_sds_coherent(in.u, in.w, mode == "finite" ? CoherenceMode::finite : CoherenceMode::full);
  if (v.ok()) {
    out.emit("COHERENT", {"verdict", "COHERENT"});
    return kOk;
  }
  const std::string why = strip_newline(describe(in.u, v));
  out.emit("INCOHERENT\n" + why, {"verdict", "INCOHERENT", axiom_name(v.violation->axiom), escape(why)});
  return kNegative;
}

int cmd_conjrep(Out& out, const SdsInput& in, const Capacity& cap) {
  EventSpace space(in.u, cap.things);
  Event e = event_of(space, in.w);
  out.emit("E_W " + space.format(e), {"event", space.format(e)});
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!((e.bits >> i) & 1u)) continue;
    const ThingSet& d = space.coherent()[i];
    Sds factor(in.u.size());
    for (Subset s : minimal_members(sdsify(in.u, d))) factor.insert(s);
    out.emit("factor " + in.u.format(d) + ": " + format_family_inline(in.u, factor),
             {"factor", in.u.format_members(d), format_family_inline(in.u, factor)});
  }
  out.emit("closure", {"closure"});
  Sds k = conjunctive_closure(space, in.w);
  emit_family(out, in.u, k);
  return k.is_top() ? kNegative : kOk;
}

// lawcheck

Axiom parse_axiom(const std::string& s) {
  if (s.size() == 2 && (s[0] == 'K' || s[0] == 'F' || s[0] == 'k' || s[0] == 'f') && s[1] >= '1' && s[1] <= '5')
    return static_cast<Axiom>(s[1] - '1');
  throw InputError("unknown axiom '" + s + "' (K1..K5)");
}

int cmd_lawcheck(Out& out, const std::string& suite, std::uint64_t seed, const std::string& budget,
                 const std::string& disabled) {
  lawcheck::Options o;
  o.seed = seed;
  o.budget = lawcheck::parse_budget(budget);
  if (!disabled.empty()) o.engine = EngineConfig::without(parse_axiom(disabled));
  auto r = lawcheck::run(suite, o);
  out.raw(out.text() ? lawcheck::format_text(r) : lawcheck::format_lines(r));
  return r.passed() ? kOk : kNegative;
}

// logic

struct LogicArgs {
  std::string atoms;
  std::size_t depth = 2;
  std::vector<std::string> items;
  std::string file;
};

std::vector<std::string> file_lines(const std::string& path) {
  std::vector<std::string> out;
  std::string text = read_file(path);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!split_words(line).empty()) out.push_back(line);
  }
  return out;
}

std::vector<std::string> logic_items(const LogicArgs& a) {
  std::vector<std::string> items = a.items;
  if (!a.file.empty())
    for (auto& l : file_lines(a.file)) items.push_back(std::move(l));
  return items;
}

int cmd_logic_closure(Out& out, const LogicArgs& a) {
  logic::LogicUniverse lu(split_list(a.atoms), a.depth);
  std::vector<logic::Wff> premises;
  for (const auto& item : logic_items(a))
    for (auto& w : logic::parse_wff_list(item)) premises.push_back(std::move(w));
  ThingSet c = logic::logic_closure(lu, premises);
  if (!(c & lu.universe().forbidden()).empty()) {
    out.emit("INCONSISTENT", {"inconsistent"});
    return kNegative;
  }
  c.for_each([&](std::size_t i) {
    const std::string w = logic::to_string(lu.wffs()[i]);
    out.emit(w, {"wff", w});
  });
  return kOk;
}

std::string class_set_text(const logic::LogicUniverse& lu, Subset s) {
  std::string out;
  for (std::size_t c = 0; c < lu.classes().size(); ++c)
    if ((s >> c) & 1u) out += (out.empty() ? "" : ", ") + logic::to_string(lu.classes()[c].representative);
  return "{" + out + "}";
}

int cmd_logic_sdfs_close(Out& out, const LogicArgs& a) {
  logic::LogicUniverse lu(split_list(a.atoms), a.depth);
  logic::ClassSpace space(lu);
  Sds w(lu.classes().size());
  for (const auto& item : logic_items(a)) {
    Subset s = 0;
    for (const auto& wff : logic::parse_wff_list(item)) s |= Subset{1} << lu.class_index(wff);
    w.insert(s);
  }
  Sdfs f = logic::class_sdfs_closure(space, w);
  if (f.is_top()) {
    out.emit("INCONSISTENT", {"inconsistent"});
    return kNegative;
  }
  for (Subset s : minimal_members(f)) out.emit(class_set_text(lu, s), {"member", class_set_text(lu, s)});
  for (auto t : logic::disjunction_tables(space, f)) {
    auto c = lu.class_of(t);
    const std::string name = c ? logic::to_string(lu.classes()[*c].representative) : "(no wff within depth)";
    out.emit("disjunction " + name, {"disjunction", name});
  }
  return kOk;
}

int cmd_logic_lindenbaum(Out& out, const LogicArgs& a) {
  logic::LogicUniverse lu(split_list(a.atoms), a.depth);
  for (const auto& c : lu.classes()) {
    const std::string rep = logic::to_string(c.representative);
    std::string members;
    for (auto i : c.members) members += (members.empty() ? "" : "; ") + logic::to_string(lu.wffs()[i]);
    out.emit(rep + " [" + std::to_string(c.members.size()) + "]: " + members,
             {"class", rep, std::to_string(c.members.size()), members});
  }
  return kOk;
}

// gambles

gambles::GambleFile load_gambles(const std::string& path) { return gambles::parse_gamble_file(read_file(path)); }

std::string combination_text(const gambles::GambleFile& f, const std::vector<std::size_t>& generators,
                             const gambles::Combination& c) {
  std::string out;
  for (std::size_t i = 0; i < c.lambda.size(); ++i)
    if (c.lambda[i] != 0) out += (out.empty() ? "" : " + ") + c.lambda[i].get_str() + "*" + f.names[generators[i]];
  if (std::any_of(c.positive_part.begin(), c.positive_part.end(), [](const Rational& v) { return v != 0; }))
    out += (out.empty() ? "" : " + ") + gambles::format_gamble(c.positive_part);
  return out;
}

int cmd_gambles_natex(Out& out, const std::string& path, const std::vector<std::string>& queries) {
  auto f = load_gambles(path);
  gambles::GambleStatementSet d{f.outcomes, {}};
  std::vector<std::size_t> generators;
  for (const auto& a : f.assertions) {
    if (a.size() != 1) throw InputError("natex takes single-gamble assertions; use 'gambles consistent' for sets");
    generators.push_back(a[0]);
    d.desirable.push_back(f.gambles[a[0]]);
  }
  auto bad = gambles::inconsistency(d);
  if (bad.member) {
    const std::string why = combination_text(f, generators, *bad.certificate);
    out.emit("INCONSISTENT 0 = " + why, {"inconsistent", why});
    return kNegative;
  }
  std::vector<std::size_t> asked;
  for (const auto& q : queries)
    for (const auto& name : split_list(q)) asked.push_back(f.index_of(name));
  if (queries.empty())
    for (std::size_t i = 0; i < f.gambles.size(); ++i) asked.push_back(i);
  for (auto i : asked) {
    auto r = gambles::natural_extension(d, f.gambles[i]);
    if (r.member) {
      const std::string how = combination_text(f, generators, *r.certificate);
      out.emit("DESIRABLE " + f.names[i] + " = " + how, {"natex", f.names[i], "DESIRABLE", how});
    } else {
      out.emit("NOT-DESIRABLE " + f.names[i], {"natex", f.names[i], "NOT-DESIRABLE"});
    }
  }
  return kOk;
}

int cmd_gambles_consistent(Out& out, const std::string& path) {
  auto f = load_gambles(path);
  gambles::GambleSetStatementSet s{f.outcomes, {}};
  for (const auto& a : f.assertions) {
    std::vector<gambles::Gamble> member;
    for (auto i : a) member.push_back(f.gambles[i]);
    s.members.push_back(std::move(member));
  }
  auto v = gambles::check_gamble_sdfs(s);
  if (v.status == gambles::GambleVerdict::Status::no_violation_found) {
    out.emit("NO-VIOLATION-FOUND", {"verdict", "NO-VIOLATION-FOUND"});
    return kOk;
  }
  out.emit("VIOLATED " + v.axiom + ": " + v.description, {"verdict", "VIOLATED", v.axiom, escape(v.description)});
  for (const auto& g : v.produced) out.emit("produced " + gambles::format_gamble(g), {"produced", gambles::format_gamble(g)});
  return kNegative;
}

int cmd_gambles_choose(Out& out, const std::string& credal_path, const std::string& options_path) {
  auto f = load_gambles(options_path);
  if (f.gambles.empty()) throw InputError("no options in " + options_path);
  std::vector<std::size_t> chosen;
  if (!f.sets.empty())
    chosen = f.sets.front();
  else
    for (std::size_t i = 0; i < f.gambles.size(); ++i) chosen.push_back(i);
  std::vector<gambles::Gamble> options;
  for (auto i : chosen) options.push_back(f.gambles[i]);
  auto m = gambles::parse_credal(read_file(credal_path), f.outcomes);
  auto a = gambles::e_admissible(m, options);
  for (std::size_t u = 0; u < options.size(); ++u) {
    const std::string& name = f.names[chosen[u]];
    if (a.witness[u]) {
      const std::string p = gambles::format_gamble(*a.witness[u]);
      out.emit("ADMISSIBLE " + name + " p=" + p, {"option", name, "ADMISSIBLE", p});
    } else {
      out.emit("REJECTED " + name, {"option", name, "REJECTED"});
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desire-kernel: coherent sets of desirable things on finite universes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<std::size_t> max_things, max_coherent;
  bool force = false;
  app.add_option("--format", format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
  app.add_option("--max-things", max_things, "bound on |T| for enumeration");
  app.add_option("--max-coherent", max_coherent, "bound on coherent SDTs for lattice work");
  app.add_flag("--force", force, "allow bounds above the defaults");

  std::string universe_path, statements_path, set, method = "fixpoint", mode = "full";

  auto* closure = app.add_subcommand("closure", "closure of a set of things");
  closure->add_option("universe", universe_path)->required();
  closure->add_option("--set", set, "things, comma separated");

  auto* coherent = app.add_subcommand("coherent", "is a set of things a coherent SDT");
  coherent->add_option("universe", universe_path)->required();
  coherent->add_option("--set", set, "things, comma separated");

  auto* enumerate = app.add_subcommand("enumerate", "every coherent SDT");
  enumerate->add_option("universe", universe_path)->required();

  auto* sds_close = app.add_subcommand("sds-close", "least coherent SDS containing the statements");
  sds_close->add_option("universe", universe_path)->required();
  sds_close->add_option("statements", statements_path)->required();
  sds_close->add_option("--method", method)->check(CLI::IsMember({"fixpoint", "conjunctive"}));

  auto* sds_check = app.add_subcommand("sds-check", "is the family of asserted sets coherent");
  sds_check->add_option("universe", universe_path)->required();
  sds_check->add_option("statements", statements_path)->required();
  sds_check->add_option("--mode", mode)->check(CLI::IsMember({"finite", "full"}));

  auto* conjrep = app.add_subcommand("conjrep", "E_W, its conjunctive factors and the closure");
  conjrep->add_option("universe", universe_path)->required();
  conjrep->add_option("statements", statements_path)->required();

  std::string suite = "all", budget = "default", disabled;
  std::uint64_t seed = 7;
  auto* law = app.add_subcommand("lawcheck", "run the property suites");
  law->add_option("suite", suite)->check(CLI::IsMember({"core", "sds", "filters", "logic", "gambles", "all"}));
  law->add_option("--seed", seed);
  law->add_option("--budget", budget)->check(CLI::IsMember({"tiny", "default", "full"}));
  law->add_option("--disable-axiom", disabled, "K1..K5, for the mutation self-test");

  LogicArgs logic_args;
  auto* logic = app.add_subcommand("logic", "propositional backend");
  logic->require_subcommand(1);
  auto add_logic = [&](const char* name, const char* help, const char* item_flag, const char* item_help) {
    auto* sub = logic->add_subcommand(name, help);
    sub->add_option("--atoms", logic_args.atoms, "comma separated")->required();
    sub->add_option("--depth", logic_args.depth);
    if (item_flag) {
      sub->add_option(item_flag, logic_args.items, item_help);
      sub->add_option("--file", logic_args.file, "one entry per line");
    }
    return sub;
  };
  auto* logic_closure = add_logic("closure", "every wff within the depth entailed by the premises", "--premise",
                                  "wffs separated by ';'");
  auto* logic_sdfs = add_logic("sdfs-close", "least finitely coherent SDFS of wff sets", "--set",
                               "one desirable set, wffs separated by ';'");
  auto* logic_lindenbaum = add_logic("lindenbaum", "equivalence classes of the wffs", nullptr, nullptr);

  std::string gamble_path, credal_path;
  std::vector<std::string> queries;
  auto* gam = app.add_subcommand("gambles", "desirable gambles backend");
  gam->require_subcommand(1);
  auto* natex = gam->add_subcommand("natex", "membership in the natural extension of the asserted gambles");
  natex->add_option("file", gamble_path)->required();
  natex->add_option("--query", queries, "gamble names");
  auto* consistent = gam->add_subcommand("consistent", "look for a violation among the asserted gamble sets");
  consistent->add_option("file", gamble_path)->required();
  auto* choose = gam->add_subcommand("choose", "E-admissible options under a credal set");
  choose->add_option("--credal", credal_path)->required();
  choose->add_option("--options", gamble_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Out out(format == "lines" ? Format::lines : Format::text);
  int code = kOk;
  try {
    const Capacity cap = resolve_capacity(max_things, max_coherent, force);
    if (closure->parsed())
      code = cmd_closure(out, universe_path, set);
    else if (coherent->parsed())
      code = cmd_coherent(out, universe_path, set);
    else if (enumerate->parsed())
      code = cmd_enumerate(out, universe_path, cap);
    else if (sds_close->parsed())
      code = cmd_sds_close(out, load_sds_input(universe_path, statements_path, cap), method, cap);
    else if (sds_check->parsed())
      code = cmd_sds_check(out, load_sds_input(universe_path, statements_path, cap), mode);
    else if (conjrep->parsed())
      code = cmd_conjrep(out, load_sds_input(universe_path, statements_path, cap), cap);
    else if (law->parsed())
      code = cmd_lawcheck(out, suite, seed, budget, disabled);
    else if (logic_closure->parsed())
      code = cmd_logic_closure(out, logic_args);
    else if (logic_sdfs->parsed())
      code = cmd_logic_sdfs_close(out, logic_args);
    else if (logic_lindenbaum->parsed())
      code = cmd_logic_lindenbaum(out, logic_args);
    else if (natex->parsed())
      code = cmd_gambles_natex(out, gamble_path, queries);
    else if (consistent->parsed())
      code = cmd_gambles_consistent(out, gamble_path);
    else if (choose->parsed())
      code = cmd_gambles_choose(out, credal_path, gamble_path);
  } catch (const InconsistencyError& e) {
    std::cout << out.str();
    std::cerr << "inconsistent: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cout << out.str();
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << out.str();
  return code;
}
