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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dholk/cli.hpp"

namespace {

// Exit codes: 0 accepted/proved, 1 rejected/ill-typed/refuted,
// 2 inconclusive or operational error.
int dispatch(dholk::cli::Command command, const std::string& input,
             const std::string& output, const std::string& oracle_template,
             double timeout, const std::string& axiom_set, bool skip_check,
             bool keep_temp, bool json) {
  dholk::cli::CliConfig cfg;
  cfg.command = command;
  cfg.input_path = input;
  cfg.output_path = output;
  cfg.axiom_set = axiom_set == "minimal" ? dholk::translate::AxiomSet::Minimal
                                         : dholk::translate::AxiomSet::Appendix;
  cfg.skip_check = skip_check;
  cfg.json = json;
  cfg.oracle = dholk::oracle::default_config();
  cfg.oracle.timeout_seconds = timeout;
  cfg.oracle.keep_temp = keep_temp;
  if (!oracle_template.empty()) {
    bool replaced = false;
    for (auto& spec : cfg.oracle.chain) {
      if (spec.kind == dholk::oracle::OracleSpec::Kind::External) {
        spec.command_template = oracle_template;
        spec.name = "external";
        replaced = true;
      }
    }
    if (!replaced) {
      dholk::oracle::OracleSpec ext;
      ext.kind = dholk::oracle::OracleSpec::Kind::External;
      ext.name = "external";
      ext.command_template = oracle_template;
      cfg.oracle.chain.push_back(ext);
    }
  }
  dholk::cli::CommandResult res = dholk::cli::run(cfg);
  if (!res.output.empty()) std::cout << res.output;
  if (!res.error.empty()) std::cerr << res.error;
  return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dholk: type checker, HOL translator, and prover driver for a\n"
      "dependently typed higher-order logic written in a TPTP-like dialect"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string oracle_template;
  double timeout = 10.0;
  std::string axiom_set = "appendix";
  bool skip_check = false;
  bool keep_temp = false;
  bool json = false;

  auto add_common = [&](CLI::App* cmd, bool with_output, const char* output_desc) {
    cmd->add_option("input", input, "input file ('-' for standard input)")->required();
    if (with_output) cmd->add_option("-o,--output", output, output_desc);
    cmd->add_option("--oracle", oracle_template,
                    "external prover command template; {file} and {timeout} are "
                    "substituted (overrides $" +
                        std::string(dholk::oracle::kExternalCommandEnv) + ")");
    cmd->add_option("--timeout", timeout, "per-oracle-call timeout in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--axiom-set", axiom_set,
                    "relation axioms emitted per type constructor")
        ->check(CLI::IsMember({"appendix", "minimal"}));
    cmd->add_flag("--keep-temp", keep_temp, "keep temporary prover problem files");
    cmd->add_flag("--json", json, "machine-readable JSON report on stdout");
  };

  CLI::App* check = app.add_subcommand(
      "check", "type-check a theory (and conjecture), discharging obligations");
  add_common(check, false, "");

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "translate to simply typed TH0 text");
  add_common(translate_cmd, true, "write the TH0 text to this file");
  translate_cmd->add_flag(
      "--skip-check", skip_check,
      "emit even when proof obligations cannot be discharged (elaboration still runs)");

  CLI::App* prove = app.add_subcommand(
      "prove", "type-check, translate, and prove the conjecture via the oracle chain");
  add_common(prove, false, "");

  CLI::App* obligations = app.add_subcommand(
      "obligations", "list every proof obligation the type checker emits");
  add_common(obligations, true, "write one TH0 problem per obligation into this directory");

  CLI11_PARSE(app, argc, argv);

  dholk::cli::Command command = dholk::cli::Command::Check;
  if (translate_cmd->parsed()) command = dholk::cli::Command::Translate;
  if (prove->parsed()) command = dholk::cli::Command::Prove;
  if (obligations->parsed()) command = dholk::cli::Command::Obligations;

  try {
    return dispatch(command, input, output, oracle_template, timeout, axiom_set,
                    skip_check, keep_temp, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dholk::cli::kExitInconclusive;
  }
}
