// Copyright 2026 The dholk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dholk/oracle.hpp"
#include "dholk/translate.hpp"

// Command drivers wiring parser, type checker, translator, and oracles.
// Each command is a pure function from a configuration to an exit status
// plus report, so the whole surface is testable without spawning the binary.
//
// Exit-status contract (stable): 0 accepted/proved, 1 rejected/ill-typed/
// refuted, 2 inconclusive or operational error (I/O, parse, missing input).

namespace dholk::cli {

enum class Command { Check, Translate, Prove, Obligations };

struct CliConfig {
  Command command = Command::Check;
  std::string input_path;  // "-" reads standard input
  std::string output_path; // translate: TH0 file; obligations: directory
  oracle::OracleConfig oracle = oracle::default_config();
  translate::AxiomSet axiom_set = translate::AxiomSet::Appendix;
  // translate only: skip oracle discharge of proof obligations before
  // emitting. Elaboration still runs — structurally ill-typed input has no
  // translation — but undischarged or refuted obligations no longer block.
  bool skip_check = false;
  bool json = false; // machine-readable report on stdout
};

inline constexpr int kExitAccepted = 0;     // accepted / proved
inline constexpr int kExitRejected = 1;     // rejected / ill-typed / refuted
inline constexpr int kExitInconclusive = 2; // unknown or operational error

struct ObligationReport {
  std::size_t seq = 0;
  std::string kind;
  std::string type_name;
  int arg_index = -1;
  std::string note;
  std::string context;
  std::string formula;
  std::string result; // proved / refuted / unknown
  std::string by;
  double seconds = 0.0;

  bool operator==(const ObligationReport&) const = default;
};

struct Report {
  std::string command;
  int exit_code = 0;
  std::string verdict; // accepted/rejected/inconclusive, proved/refuted/unknown
  std::string reason;
  std::string location;
  std::vector<ObligationReport> obligations;
  std::string oracle_status; // prove: verdict on the translated conjecture
  std::string oracle_reason;
  std::string oracle_by;
  double oracle_seconds = 0.0;
  std::string output_file; // translate: where the TH0 text went

  bool operator==(const Report&) const = default;
};

// The report serializes to JSON and parses back to an equal value.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text); // throws std::runtime_error

struct CommandResult {
  int exit_code = kExitInconclusive;
  std::string output; // stdout payload (human text, or JSON when requested)
  std::string error;  // stderr payload (diagnostics)
  Report report;
};

CommandResult cmd_check(const CliConfig& cfg);
CommandResult cmd_translate(const CliConfig& cfg);
CommandResult cmd_prove(const CliConfig& cfg);
CommandResult cmd_obligations(const CliConfig& cfg);

// Dispatches on cfg.command.
CommandResult run(const CliConfig& cfg);

} // namespace dholk::cli
