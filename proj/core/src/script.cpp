#include "brim/script.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

namespace brim {
namespace {

struct Cursor {
  const std::string& text;
  int line;
  size_t pos = 0;
};

[[noreturn]] void fail(const Cursor& cur, const std::string& message) {
  throw ParseError(message, cur.line, static_cast<int>(cur.pos) + 1);
}

void skip_ws(Cursor& cur) {
  while (cur.pos < cur.text.size() && (cur.text[cur.pos] == ' ' || cur.text[cur.pos] == '\t'))
    ++cur.pos;
}

bool at_end(Cursor& cur) {
  skip_ws(cur);
  return cur.pos >= cur.text.size();
}

char peek(const Cursor& cur) { return cur.pos < cur.text.size() ? cur.text[cur.pos] : '\0'; }

void expect(Cursor& cur, char c, const char* what) {
  skip_ws(cur);
  if (peek(cur) != c) fail(cur, std::string("expected ") + what);
  ++cur.pos;
}

bool try_consume(Cursor& cur, char c) {
  skip_ws(cur);
  if (peek(cur) != c) return false;
  ++cur.pos;
  return true;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string ident(Cursor& cur, const char* what) {
  skip_ws(cur);
  if (!is_ident_start(peek(cur))) fail(cur, std::string("expected ") + what);
  size_t start = cur.pos;
  while (cur.pos < cur.text.size() && is_ident_char(cur.text[cur.pos])) ++cur.pos;
  return cur.text.substr(start, cur.pos - start);
}

long long integer(Cursor& cur, const char* what) {
  skip_ws(cur);
  if (!std::isdigit(static_cast<unsigned char>(peek(cur)))) fail(cur, std::string("expected ") + what);
  size_t start = cur.pos;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  const std::string digits = cur.text.substr(start, cur.pos - start);
  if (digits.size() > 12) {
    cur.pos = start;
    fail(cur, "integer literal too large");
  }
  return std::stoll(digits);
}

// Consumes the given keyword if the next identifier matches it.
bool try_word(Cursor& cur, const char* word) {
  skip_ws(cur);
  Cursor probe = cur;
  if (!is_ident_start(peek(probe))) return false;
  size_t start = probe.pos;
  while (probe.pos < probe.text.size() && is_ident_char(probe.text[probe.pos])) ++probe.pos;
  if (probe.text.compare(start, probe.pos - start, word) != 0) return false;
  cur.pos = probe.pos;
  return true;
}

void expect_word(Cursor& cur, const char* word) {
  if (!try_word(cur, word)) fail(cur, std::string("expected '") + word + "'");
}

void expect_line_end(Cursor& cur) {
  if (!at_end(cur)) fail(cur, "unexpected trailing characters");
}

// x^2*y^3 with implicit exponent 1; exponents of repeated variables add.
Exponents parse_monomial(Cursor& cur, const std::vector<std::string>& variables) {
  Exponents exps(variables.size(), 0);
  while (true) {
    skip_ws(cur);
    const Cursor at = cur;
    const std::string var = ident(cur, "a variable name");
    auto it = std::find(variables.begin(), variables.end(), var);
    if (it == variables.end()) fail(at, "unknown variable '" + var + "'");
    long long e = 1;
    if (try_consume(cur, '^')) e = integer(cur, "an exponent");
    exps[static_cast<size_t>(it - variables.begin())] += e;
    if (!try_consume(cur, '*')) break;
  }
  return exps;
}

long long parse_semigroup_generator(Cursor& cur) {
  skip_ws(cur);
  const Cursor at = cur;
  const std::string var = ident(cur, "a generator of the form t^e");
  if (var != "t") fail(at, "semigroup ideal generators are powers of t");
  long long e = 1;
  if (try_consume(cur, '^')) e = integer(cur, "an exponent");
  return e;
}

struct Names {
  std::string ring;
  std::map<std::string, size_t> ideals;
  std::map<std::string, size_t> modules;

  bool taken(const std::string& name) const {
    return name == ring || ideals.count(name) != 0 || modules.count(name) != 0;
  }
};

const Ideal& resolve_ideal(Cursor& cur, const SessionScript& script, const Names& names,
                           const char* what) {
  skip_ws(cur);
  Cursor at = cur;
  const std::string name = ident(cur, what);
  auto it = names.ideals.find(name);
  if (it == names.ideals.end()) {
    if (names.modules.count(name) != 0) fail(at, "'" + name + "' names a module, not an ideal");
    fail(at, "undeclared ideal '" + name + "'");
  }
  return script.ideals[it->second].second;
}

const DirectSumModule& resolve_module(Cursor& cur, const SessionScript& script, const Names& names,
                                      const char* what) {
  skip_ws(cur);
  Cursor at = cur;
  const std::string name = ident(cur, what);
  auto it = names.modules.find(name);
  if (it == names.modules.end()) {
    if (names.ideals.count(name) != 0) fail(at, "'" + name + "' names an ideal, not a module");
    fail(at, "undeclared module '" + name + "'");
  }
  return script.modules[it->second].second;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

constexpr int kMaxRank = 8;

}  // namespace

SessionScript parse_script(const std::string& text) {
  SessionScript script;
  Names names;

  std::istringstream lines(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string source = trim(raw);
    if (source.empty()) continue;

    Cursor cur{raw, line_no, 0};
    if (try_word(cur, "ring")) {
      Cursor at = cur;
      const std::string name = ident(cur, "a ring name");
      if (script.ring) fail(at, "a script declares exactly one ring");
      if (names.taken(name)) fail(at, "name '" + name + "' already declared");
      expect(cur, '=', "'='");
      Cursor kind_at = cur;
      if (try_word(cur, "power_series")) {
        expect(cur, '(', "'('");
        std::vector<std::string> variables;
        do {
          variables.push_back(ident(cur, "a variable name"));
        } while (try_consume(cur, ','));
        expect(cur, ')', "')'");
        expect_line_end(cur);
        try {
          script.ring = Ring::power_series(std::move(variables));
        } catch (const Error& e) {
          fail(kind_at, e.what());
        }
      } else if (try_word(cur, "semigroup")) {
        expect(cur, '(', "'('");
        std::vector<long long> generators;
        do {
          generators.push_back(integer(cur, "a semigroup generator"));
        } while (try_consume(cur, ','));
        expect(cur, ')', "')'");
        expect_line_end(cur);
        try {
          script.ring = Ring::semigroup(std::move(generators));
        } catch (const Error& e) {
          fail(kind_at, e.what());
        }
      } else {
        fail(cur, "expected power_series(...) or semigroup(...)");
      }
      names.ring = name;
      continue;
    }

    if (try_word(cur, "ideal")) {
      Cursor at = cur;
      const std::string name = ident(cur, "an ideal name");
      if (names.taken(name)) fail(at, "name '" + name + "' already declared");
      if (!script.ring) fail(at, "declare a ring before ideals");
      expect(cur, '=', "'='");
      Cursor gens_at = cur;
      expect(cur, '(', "'('");
      try {
        if (script.ring->is_semigroup()) {
          std::vector<long long> exponents;
          do {
            exponents.push_back(parse_semigroup_generator(cur));
          } while (try_consume(cur, ','));
          expect(cur, ')', "')'");
          expect_line_end(cur);
          names.ideals[name] = script.ideals.size();
          script.ideals.emplace_back(
              name, Ideal(SemigroupIdeal::make(script.ring->semigroup_ring(), exponents)));
        } else {
          const auto& variables = script.ring->monomial()->variables();
          std::vector<Exponents> generators;
          do {
            generators.push_back(parse_monomial(cur, variables));
          } while (try_consume(cur, ','));
          expect(cur, ')', "')'");
          expect_line_end(cur);
          names.ideals[name] = script.ideals.size();
          script.ideals.emplace_back(
              name, Ideal(MonomialIdeal::make(script.ring->monomial(), generators)));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(gens_at, e.what());
      }
      continue;
    }

    if (try_word(cur, "module")) {
      Cursor at = cur;
      const std::string name = ident(cur, "a module name");
      if (names.taken(name)) fail(at, "name '" + name + "' already declared");
      expect(cur, '=', "'='");
      std::vector<Ideal> summands;
      Cursor list_at = cur;
      summands.push_back(resolve_ideal(cur, script, names, "an ideal name"));
      while (!at_end(cur)) {
        expect(cur, '(', "'(+)'");
        expect(cur, '+', "'(+)'");
        expect(cur, ')', "'(+)'");
        summands.push_back(resolve_ideal(cur, script, names, "an ideal name"));
      }
      if (summands.size() > kMaxRank) fail(list_at, "module rank is capped at 8");
      try {
        names.modules[name] = script.modules.size();
        script.modules.emplace_back(name, DirectSumModule::make(std::move(summands)));
      } catch (const Error& e) {
        names.modules.erase(name);
        fail(list_at, e.what());
      }
      continue;
    }

    if (try_word(cur, "compute")) {
      expect_word(cur, "invariants");
      skip_ws(cur);
      Cursor at = cur;
      const std::string name = ident(cur, "an ideal or module name");
      ScriptCommand cmd;
      cmd.text = source;
      cmd.line = line_no;
      if (auto it = names.ideals.find(name); it != names.ideals.end()) {
        cmd.kind = ScriptCommand::Kind::invariants_ideal;
        cmd.ideal = script.ideals[it->second].second;
      } else if (auto jt = names.modules.find(name); jt != names.modules.end()) {
        cmd.kind = ScriptCommand::Kind::invariants_module;
        cmd.module = script.modules[jt->second].second;
      } else {
        fail(at, "undeclared name '" + name + "'");
      }
      expect_line_end(cur);
      script.commands.push_back(std::move(cmd));
      continue;
    }

    if (try_word(cur, "check")) {
      ScriptCommand cmd;
      cmd.text = source;
      cmd.line = line_no;
      if (try_word(cur, "vasconcelos")) {
        cmd.kind = ScriptCommand::Kind::vasconcelos;
        cmd.module = resolve_module(cur, script, names, "a module name");
      } else if (try_word(cur, "northcott")) {
        cmd.kind = ScriptCommand::Kind::northcott;
        cmd.module = resolve_module(cur, script, names, "a module name");
      } else if (try_word(cur, "cm_fiber")) {
        cmd.kind = ScriptCommand::Kind::cm_fiber;
        cmd.ideal = resolve_ideal(cur, script, names, "an ideal name");
        expect_word(cur, "reduction");
        cmd.reduction = resolve_ideal(cur, script, names, "an ideal name");
      } else if (try_word(cur, "reduction_bound")) {
        cmd.kind = ScriptCommand::Kind::reduction_bound;
        cmd.ideal = resolve_ideal(cur, script, names, "an ideal name");
        expect_word(cur, "reduction");
        cmd.reduction = resolve_ideal(cur, script, names, "an ideal name");
      } else if (try_word(cur, "sum_formulas")) {
        cmd.kind = ScriptCommand::Kind::sum_formulas;
        cmd.ideal = resolve_ideal(cur, script, names, "an ideal name");
        expect_word(cur, "rank");
        Cursor rank_at = cur;
        const long long rank = integer(cur, "a rank");
        if (rank < 1 || rank > kMaxRank) fail(rank_at, "rank must be between 1 and 8");
        cmd.rank = static_cast<int>(rank);
      } else if (try_word(cur, "mixed_sum")) {
        cmd.kind = ScriptCommand::Kind::mixed_sum;
        cmd.ideal = resolve_ideal(cur, script, names, "an ideal name");
        cmd.reduction = resolve_ideal(cur, script, names, "an ideal name");
        expect_word(cur, "copies");
        Cursor copies_at = cur;
        const long long u = integer(cur, "a copy count");
        const long long v = integer(cur, "a copy count");
        if (u < 1 || v < 1 || u + v > kMaxRank)
          fail(copies_at, "copy counts must be positive with total at most 8");
        cmd.copies_first = static_cast<int>(u);
        cmd.copies_second = static_cast<int>(v);
      } else if (try_word(cur, "prop_decomposition")) {
        cmd.kind = ScriptCommand::Kind::prop_decomposition;
        cmd.ideal = resolve_ideal(cur, script, names, "an ideal name");
        cmd.reduction = resolve_ideal(cur, script, names, "an ideal name");
      } else {
        fail(cur, "unknown check name");
      }
      expect_line_end(cur);
      script.commands.push_back(std::move(cmd));
      continue;
    }

    fail(cur, "expected ring, ideal, module, compute, or check");
  }
  return script;
}

int combine_exit_codes(int a, int b) {
  auto severity = [](int code) { return code == 2 ? 3 : code == 3 ? 2 : code; };
  return severity(a) >= severity(b) ? a : b;
}

CheckReport run_check_command(const ScriptCommand& cmd, const CheckOptions& options) {
  switch (cmd.kind) {
    case ScriptCommand::Kind::vasconcelos:
      return check_vasconcelos(*cmd.module, options);
    case ScriptCommand::Kind::northcott:
      return check_northcott_equality(*cmd.module, options);
    case ScriptCommand::Kind::cm_fiber:
      return check_cm_fiber_ideal(*cmd.ideal, *cmd.reduction, options);
    case ScriptCommand::Kind::reduction_bound:
      return check_reduction_bound(*cmd.ideal, *cmd.reduction, options);
    case ScriptCommand::Kind::sum_formulas:
      return check_sum_formulas(*cmd.ideal, cmd.rank, options);
    case ScriptCommand::Kind::mixed_sum:
      return check_mixed_sum(*cmd.ideal, *cmd.reduction, cmd.copies_first, cmd.copies_second,
                             options);
    case ScriptCommand::Kind::prop_decomposition:
      return check_prop_decomposition(*cmd.ideal, *cmd.reduction, options);
    default:
      throw Error(errc::unsupported, "not a check command");
  }
}

namespace {

Json result_json(const CommandResult& res) {
  Json out = Json::object();
  out["command"] = res.command;
  out["status"] = res.status;
  if (res.report) out["report"] = to_json(*res.report);
  if (!res.invariants.is_null()) out["invariants"] = res.invariants;
  if (!res.error.empty()) {
    out["error"] = res.error;
    out["error_kind"] = res.error_kind;
  }
  return out;
}

}  // namespace

RunResult run_script(const SessionScript& script, const CheckOptions& options) {
  RunResult run;
  for (const ScriptCommand& cmd : script.commands) {
    CommandResult res;
    res.command = cmd.text;
    res.status = "ok";
    try {
      if (cmd.kind == ScriptCommand::Kind::invariants_ideal) {
        res.invariants = invariants_json(ideal_invariants(*cmd.ideal, options.fit));
      } else if (cmd.kind == ScriptCommand::Kind::invariants_module) {
        res.invariants = invariants_json(module_invariants(*cmd.module, options.fit));
      } else {
        CheckReport report = run_check_command(cmd, options);
        if (report.verdict == Verdict::violated)
          report.witness["replay"] = replay_for_command(cmd);
        res.report = std::move(report);
      }
    } catch (const Error& e) {
      res.status = "error";
      res.error = e.what();
      res.error_kind = errc_name(e.code());
      run.exit_code = combine_exit_codes(run.exit_code,
                                         e.code() == errc::not_stabilized ? 3 : 2);
    }
    if (res.report) {
      if (res.report->fit_failed) run.exit_code = combine_exit_codes(run.exit_code, 3);
      if (res.report->verdict == Verdict::violated)
        run.exit_code = combine_exit_codes(run.exit_code, 1);
    }
    run.results.push_back(std::move(res));
  }

  Json doc = Json::object();
  doc["version"] = kVersionBanner;
  doc["ring"] = script.ring ? Json(script.ring->to_string()) : Json(nullptr);
  Json ideals = Json::object();
  for (const auto& [name, ideal] : script.ideals) ideals[name] = ideal.to_string();
  doc["ideals"] = ideals;
  Json modules = Json::object();
  for (const auto& [name, module] : script.modules) modules[name] = module.to_string();
  doc["modules"] = modules;
  Json results = Json::array();
  for (const CommandResult& res : run.results) results.push_back(result_json(res));
  doc["results"] = results;
  doc["exit_code"] = run.exit_code;
  run.document = std::move(doc);
  return run;
}

std::string render_table(const RunResult& run) {
  const char* headers[6] = {"#", "command", "status", "lhs", "rhs", "slack"};
  std::vector<std::array<std::string, 6>> rows;
  for (size_t i = 0; i < run.results.size(); ++i) {
    const CommandResult& res = run.results[i];
    std::array<std::string, 6> row;
    row[0] = std::to_string(i + 1);
    row[1] = res.command;
    if (res.report) {
      row[2] = verdict_name(res.report->verdict);
      row[3] = res.report->lhs.str();
      row[4] = res.report->rhs.str();
      row[5] = res.report->slack.str();
    } else {
      row[2] = res.status;
      row[3] = row[4] = row[5] = "-";
    }
    rows.push_back(std::move(row));
  }

  size_t width[6];
  for (int c = 0; c < 6; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (int c = 0; c < 6; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      out << (c + 1 < 6 ? "  " : "");
    }
    out << '\n';
  };
  std::array<std::string, 6> header_row;
  for (int c = 0; c < 6; ++c) header_row[c] = headers[c];
  emit(header_row);
  for (const auto& row : rows) emit(row);

  for (size_t i = 0; i < run.results.size(); ++i) {
    const CommandResult& res = run.results[i];
    if (!res.invariants.is_null()) {
      out << '\n' << res.command << ":\n";
      for (auto it = res.invariants.begin(); it != res.invariants.end(); ++it)
        out << "  " << it.key() << " = " << it.value().dump() << '\n';
    }
    if (!res.error.empty())
      out << '\n' << res.command << ": error (" << res.error_kind << "): " << res.error << '\n';
  }
  return out.str();
}

std::string render_replay(const ReplaySpec& spec) {
  std::ostringstream out;
  out << "ring R = " << spec.ring.to_string() << '\n';
  for (const auto& [name, ideal] : spec.ideals)
    out << "ideal " << name << " = " << ideal.to_string() << '\n';
  for (const auto& [name, summands] : spec.modules) {
    out << "module " << name << " = ";
    for (size_t i = 0; i < summands.size(); ++i)
      out << (i == 0 ? "" : " (+) ") << summands[i];
    out << '\n';
  }
  out << spec.check_line << '\n';
  return out.str();
}

namespace {

// Names the distinct ideals I1, I2, ... in first-appearance order.
std::string ideal_name(std::vector<std::pair<std::string, Ideal>>& decls, const Ideal& ideal) {
  for (const auto& [name, declared] : decls)
    if (declared.equals(ideal)) return name;
  std::string name = "I" + std::to_string(decls.size() + 1);
  decls.emplace_back(name, ideal);
  return name;
}

}  // namespace

std::string replay_for_command(const ScriptCommand& cmd) {
  ReplaySpec spec{cmd.module ? cmd.module->ring() : cmd.ideal->ring(), {}, {}, ""};
  std::ostringstream line;
  switch (cmd.kind) {
    case ScriptCommand::Kind::vasconcelos:
    case ScriptCommand::Kind::northcott: {
      std::vector<std::string> summands;
      for (const Ideal& summand : cmd.module->summands())
        summands.push_back(ideal_name(spec.ideals, summand));
      spec.modules.emplace_back("M", std::move(summands));
      line << "check " << (cmd.kind == ScriptCommand::Kind::vasconcelos ? "vasconcelos" : "northcott")
           << " M";
      break;
    }
    case ScriptCommand::Kind::cm_fiber:
    case ScriptCommand::Kind::reduction_bound: {
      const std::string a = ideal_name(spec.ideals, *cmd.ideal);
      const std::string b = ideal_name(spec.ideals, *cmd.reduction);
      line << "check "
           << (cmd.kind == ScriptCommand::Kind::cm_fiber ? "cm_fiber" : "reduction_bound") << ' '
           << a << " reduction " << b;
      break;
    }
    case ScriptCommand::Kind::sum_formulas: {
      const std::string a = ideal_name(spec.ideals, *cmd.ideal);
      line << "check sum_formulas " << a << " rank " << cmd.rank;
      break;
    }
    case ScriptCommand::Kind::mixed_sum: {
      const std::string a = ideal_name(spec.ideals, *cmd.ideal);
      const std::string b = ideal_name(spec.ideals, *cmd.reduction);
      line << "check mixed_sum " << a << ' ' << b << " copies " << cmd.copies_first << ' '
           << cmd.copies_second;
      break;
    }
    case ScriptCommand::Kind::prop_decomposition: {
      const std::string a = ideal_name(spec.ideals, *cmd.ideal);
      const std::string b = ideal_name(spec.ideals, *cmd.reduction);
      line << "check prop_decomposition " << a << ' ' << b;
      break;
    }
    default:
      throw Error(errc::unsupported, "replay applies to check commands only");
  }
  spec.check_line = line.str();
  return render_replay(spec);
}

}  // namespace brim
