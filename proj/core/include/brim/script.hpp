#pragma once

#include "brim/checks.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brim {

inline constexpr const char* kVersionBanner = "brimcalc 0.1.0";

// One executable line of a session script with operands resolved at parse
// time, so running a script can no longer hit name or shape errors.
struct ScriptCommand {
  enum class Kind {
    invariants_ideal,
    invariants_module,
    vasconcelos,
    northcott,
    cm_fiber,
    reduction_bound,
    sum_formulas,
    mixed_sum,
    prop_decomposition,
  };

  Kind kind;
  std::string text;  // source line, trimmed
  int line = 0;
  std::optional<DirectSumModule> module;
  std::optional<Ideal> ideal;
  std::optional<Ideal> reduction;
  int rank = 0;
  int copies_first = 0;
  int copies_second = 0;
};

struct SessionScript {
  std::optional<Ring> ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, DirectSumModule>> modules;
  std::vector<ScriptCommand> commands;
};

// Line-oriented grammar:
//   ring R = power_series(x, y) | semigroup(7, 15, 17, 33)
//   ideal I = (x^2, x*y, y^2) | (t^7, t^17, t^33)
//   module M = I (+) I (+) J
//   compute invariants I | M
//   check vasconcelos M | northcott M | cm_fiber I reduction J
//       | reduction_bound I reduction J | sum_formulas I rank 2
//       | mixed_sum I J copies 1 1 | prop_decomposition I J
// '#' starts a comment. Throws ParseError with a 1-based position.
SessionScript parse_script(const std::string& text);

struct CommandResult {
  std::string command;
  std::string status;  // "ok" or "error"
  std::optional<CheckReport> report;
  Json invariants;  // null unless a compute command
  std::string error;
  std::string error_kind;
};

// 0 all checks passed, 1 a check is VIOLATED, 2 input error, 3 a fit did
// not stabilize; higher-numbered causes win except that 2 beats everything.
int combine_exit_codes(int a, int b);

// Executes a resolved check command; compute commands are not accepted.
CheckReport run_check_command(const ScriptCommand& command, const CheckOptions& options);

struct RunResult {
  std::vector<CommandResult> results;
  int exit_code = 0;
  Json document;  // the complete --json payload
};

RunResult run_script(const SessionScript& script, const CheckOptions& options);

std::string render_table(const RunResult& run);

// Declarations plus a single check line; running the rendered script
// reproduces the originating CheckReport.
struct ReplaySpec {
  Ring ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  // module name -> summand ideal names, in order
  std::vector<std::pair<std::string, std::vector<std::string>>> modules;
  std::string check_line;
};

std::string render_replay(const ReplaySpec& spec);

// Replay spec for a finished check command (used for VIOLATED witnesses).
std::string replay_for_command(const ScriptCommand& command);

}  // namespace brim
