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

#include "dholk/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dholk/kernel.hpp"
#include "dholk/tptp.hpp"

#include "json.hpp"

namespace dholk::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path.empty()) throw std::runtime_error("no input path given");
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// Discharges kernel obligations by translating each one into a HOL problem
// and asking the configured oracle chain.
class TranslatingOracle final : public kernel::ObligationOracle {
 public:
  TranslatingOracle(oracle::OracleConfig cfg, translate::AxiomSet axioms)
      : cfg_(std::move(cfg)), axioms_(axioms) {}

  kernel::DischargeOutcome discharge(const kernel::Obligation& o) override {
    try {
      hol::Problem p = translate::translate_obligation(o, axioms_);
      oracle::OracleVerdict v = oracle::prove(p, cfg_);
      kernel::DischargeOutcome out;
      switch (v.status) {
        case oracle::Status::Proved: out.result = kernel::DischargeResult::Proved; break;
        case oracle::Status::Refuted: out.result = kernel::DischargeResult::Refuted; break;
        case oracle::Status::Unknown: out.result = kernel::DischargeResult::Unknown; break;
      }
      out.by = v.by;
      out.seconds = v.seconds;
      return out;
    } catch (const std::exception& e) {
      return {kernel::DischargeResult::Unknown,
              std::string("translation failed: ") + e.what(), 0.0};
    }
  }

 private:
  oracle::OracleConfig cfg_;
  translate::AxiomSet axioms_;
};

// Typing obligations for `prove` go only to trusted builtin provers: a
// theorem claim must rest on established well-typedness, never on an
// external tool vouching for its own goal's type.
oracle::OracleConfig builtin_only(const oracle::OracleConfig& cfg) {
  oracle::OracleConfig out;
  out.timeout_seconds = cfg.timeout_seconds;
  for (const auto& spec : cfg.chain)
    if (spec.kind == oracle::OracleSpec::Kind::Builtin) out.chain.push_back(spec);
  if (out.chain.empty()) out.chain.push_back(oracle::OracleSpec{});
  return out;
}

bool has_external(const oracle::OracleConfig& cfg) {
  for (const auto& spec : cfg.chain)
    if (spec.kind == oracle::OracleSpec::Kind::External) return true;
  return false;
}

std::vector<ObligationReport> obligation_reports(const kernel::CheckReport& r) {
  std::vector<ObligationReport> out;
  for (std::size_t i = 0; i < r.obligations.size(); ++i) {
    const kernel::Obligation& o = r.obligations[i];
    ObligationReport rep;
    rep.seq = o.seq;
    rep.kind = kernel::to_string(o.provenance.kind);
    rep.type_name = o.provenance.type_name;
    rep.arg_index = o.provenance.arg_index;
    rep.note = o.provenance.note;
    rep.context = dhol::pretty(o.context);
    rep.formula = dhol::pretty(o.formula);
    if (i < r.outcomes.size()) {
      rep.result = kernel::to_string(r.outcomes[i].result);
      rep.by = r.outcomes[i].by;
      rep.seconds = r.outcomes[i].seconds;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string human_obligation_line(const ObligationReport& o, bool with_outcome) {
  std::ostringstream os;
  os << "obligation #" << o.seq << " [" << o.kind;
  if (!o.type_name.empty()) {
    os << " " << o.type_name;
    if (o.arg_index >= 0) os << " arg " << o.arg_index;
  }
  os << "]";
  if (!o.note.empty()) os << " at " << o.note;
  os << "\n";
  if (!o.context.empty()) os << "  context: " << o.context << "\n";
  os << "  formula: " << o.formula << "\n";
  if (with_outcome && !o.result.empty()) {
    os << "  result: " << o.result;
    if (!o.by.empty()) os << " (by " << o.by << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_human(const Report& r, bool with_outcomes, const std::string& th0) {
  std::ostringstream os;
  for (const auto& o : r.obligations) os << human_obligation_line(o, with_outcomes);
  if (!th0.empty()) os << th0;
  if (!r.oracle_status.empty()) {
    os << "conjecture: " << r.oracle_status;
    if (!r.oracle_by.empty()) os << " (by " << r.oracle_by << ")";
    if (!r.oracle_reason.empty()) os << ": " << r.oracle_reason;
    os << "\n";
  }
  if (!r.verdict.empty()) {
    os << r.verdict;
    if (!r.reason.empty()) os << ": " << r.reason;
    if (!r.location.empty()) os << " [at " << r.location << "]";
    os << "\n";
  }
  return os.str();
}

CommandResult finish(const CliConfig& cfg, Report r, bool with_outcomes,
                     const std::string& th0 = {}, std::string warn = {}) {
  CommandResult res;
  res.exit_code = r.exit_code;
  res.error = std::move(warn);
  res.output = cfg.json ? report_to_json(r) + "\n" : render_human(r, with_outcomes, th0);
  res.report = std::move(r);
  return res;
}

CommandResult operational_error(const CliConfig& cfg, const std::string& command,
                                const std::string& message) {
  Report r;
  r.command = command;
  r.exit_code = kExitInconclusive;
  r.verdict = "error";
  r.reason = message;
  CommandResult res;
  res.exit_code = kExitInconclusive;
  res.error = "error: " + message + "\n";
  if (cfg.json) res.output = report_to_json(r) + "\n";
  res.report = std::move(r);
  return res;
}

struct ParsedInput {
  tptp::ParseResult parsed;
};

// Parse failures surface as exit 2 via operational_error at the call site.
ParsedInput load(const CliConfig& cfg) { return {tptp::parse_dhol(read_input(cfg.input_path))}; }

int verdict_exit(kernel::Verdict v) {
  switch (v) {
    case kernel::Verdict::Accepted: return kExitAccepted;
    case kernel::Verdict::Rejected: return kExitRejected;
    case kernel::Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

Report check_report(const std::string& command, const kernel::CheckReport& kr) {
  Report r;
  r.command = command;
  r.exit_code = verdict_exit(kr.verdict);
  r.verdict = kernel::to_string(kr.verdict);
  r.reason = kr.reason;
  r.location = kr.location;
  r.obligations = obligation_reports(kr);
  return r;
}

} // namespace

CommandResult cmd_check(const CliConfig& cfg) {
  ParsedInput in;
  try {
    in = load(cfg);
  } catch (const std::exception& e) {
    return operational_error(cfg, "check", e.what());
  }
  TranslatingOracle oracle(cfg.oracle, cfg.axiom_set);
  kernel::CheckReport kr =
      kernel::check_problem(in.parsed.theory, in.parsed.context, in.parsed.conjecture, oracle);
  return finish(cfg, check_report("check", kr), /*with_outcomes=*/true);
}

CommandResult cmd_translate(const CliConfig& cfg) {
  ParsedInput in;
  try {
    in = load(cfg);
  } catch (const std::exception& e) {
    return operational_error(cfg, "translate", e.what());
  }
  kernel::CheckReport kr;
  if (cfg.skip_check) {
    // Obligations are accepted unchecked; elaboration still runs because the
    // translation needs annotated equalities and freshened binders.
    kernel::AcceptAllOracle accept;
    kr = kernel::check_problem(in.parsed.theory, in.parsed.context, in.parsed.conjecture, accept);
  } else {
    TranslatingOracle oracle(cfg.oracle, cfg.axiom_set);
    kr = kernel::check_problem(in.parsed.theory, in.parsed.context, in.parsed.conjecture, oracle);
  }
  Report r = check_report("translate", kr);
  if (kr.verdict != kernel::Verdict::Accepted) {
    if (kr.verdict == kernel::Verdict::Rejected)
      r.reason = r.reason.empty() ? "input is ill-typed" : r.reason;
    return finish(cfg, std::move(r), /*with_outcomes=*/!cfg.skip_check);
  }
  std::string th0;
  try {
    translate::TranslationOutput t = translate::translate_theory(kr.theory, cfg.axiom_set);
    hol::Context hctx = translate::translate_context(kr.context);
    std::optional<hol::Term> conj;
    if (kr.conjecture) conj = translate::translate_term(*kr.conjecture);
    th0 = tptp::emit_th0(t.theory, hctx, conj);
  } catch (const std::exception& e) {
    return operational_error(cfg, "translate", std::string("translation failed: ") + e.what());
  }
  if (!cfg.output_path.empty() && cfg.output_path != "-") {
    try {
      write_file(cfg.output_path, th0);
    } catch (const std::exception& e) {
      return operational_error(cfg, "translate", e.what());
    }
    r.output_file = cfg.output_path;
    return finish(cfg, std::move(r), /*with_outcomes=*/false);
  }
  // No output file: the TH0 text itself is the stdout payload (human mode);
  // JSON mode reports obligations and verdict, with the text on stdout too.
  Report rep = std::move(r);
  if (cfg.json) {
    CommandResult res = finish(cfg, std::move(rep), false);
    res.output += th0;
    return res;
  }
  CommandResult res;
  res.exit_code = rep.exit_code;
  res.output = th0;
  res.report = std::move(rep);
  return res;
}

CommandResult cmd_prove(const CliConfig& cfg) {
  ParsedInput in;
  try {
    in = load(cfg);
  } catch (const std::exception& e) {
    return operational_error(cfg, "prove", e.what());
  }
  if (!in.parsed.conjecture)
    return operational_error(cfg, "prove", "input has no conjecture to prove");

  // Stage 1: establish well-typedness with trusted provers only. Every
  // typing obligation must be proved; otherwise the conjecture cannot be
  // reported as a theorem no matter what an external tool says about the
  // translation.
  TranslatingOracle typing_oracle(builtin_only(cfg.oracle), cfg.axiom_set);
  kernel::CheckReport kr = kernel::check_problem(in.parsed.theory, in.parsed.context,
                                                 in.parsed.conjecture, typing_oracle);
  Report r = check_report("prove", kr);
  if (kr.verdict != kernel::Verdict::Accepted) {
    r.exit_code = kExitRejected;
    r.verdict = "ill-typed";
    if (kr.verdict == kernel::Verdict::Inconclusive || r.reason.empty()) {
      std::string failing;
      for (std::size_t i = 0; i < kr.outcomes.size(); ++i) {
        if (kr.outcomes[i].result != kernel::DischargeResult::Proved) {
          failing = "typing obligation not discharged: " + dhol::pretty(kr.obligations[i].formula);
          break;
        }
      }
      if (!failing.empty())
        r.reason = failing;
      else if (r.reason.empty())
        r.reason = "well-typedness could not be established";
    }
    return finish(cfg, std::move(r), /*with_outcomes=*/true);
  }

  // Stage 2: hand the translated conjecture to the configured oracle chain.
  hol::Problem problem;
  try {
    problem.theory = translate::translate_theory(kr.theory, cfg.axiom_set).theory;
    problem.context = translate::translate_context(kr.context);
    problem.conjecture = translate::translate_term(*kr.conjecture);
  } catch (const std::exception& e) {
    return operational_error(cfg, "prove", std::string("translation failed: ") + e.what());
  }
  oracle::OracleVerdict v = oracle::prove(problem, cfg.oracle);
  r.oracle_status = oracle::to_string(v.status);
  r.oracle_by = v.by;
  r.oracle_seconds = v.seconds;
  std::string warn;
  switch (v.status) {
    case oracle::Status::Proved:
      r.exit_code = kExitAccepted;
      r.verdict = "proved";
      break;
    case oracle::Status::Refuted:
      r.exit_code = kExitRejected;
      r.verdict = "refuted";
      break;
    case oracle::Status::Unknown:
      r.exit_code = kExitInconclusive;
      r.verdict = "unknown";
      r.oracle_reason = oracle::to_string(v.reason);
      if (!v.diagnostics.empty())
        r.reason = v.diagnostics;
      if (!has_external(cfg.oracle))
        warn = "hint: only the builtin bounded prover was configured; pass --oracle "
               "or set " + std::string(oracle::kExternalCommandEnv) +
               " to try an external prover\n";
      break;
  }
  return finish(cfg, std::move(r), /*with_outcomes=*/true, {}, std::move(warn));
}

CommandResult cmd_obligations(const CliConfig& cfg) {
  ParsedInput in;
  try {
    in = load(cfg);
  } catch (const std::exception& e) {
    return operational_error(cfg, "obligations", e.what());
  }
  // Collection only: the obligation stream does not depend on discharge
  // outcomes, so no oracle time is spent here.
  kernel::CollectOnlyOracle collect;
  kernel::CheckReport kr =
      kernel::check_problem(in.parsed.theory, in.parsed.context, in.parsed.conjecture, collect);
  Report r = check_report("obligations", kr);
  if (kr.verdict == kernel::Verdict::Rejected) {
    r.exit_code = kExitRejected;
    r.verdict = "rejected";
  } else {
    r.exit_code = kExitAccepted;
    r.verdict = "listed";
    r.reason.clear();
  }
  for (auto& o : r.obligations) { // discharge was not attempted
    o.result.clear();
    o.by.clear();
    o.seconds = 0.0;
  }
  if (!cfg.output_path.empty() && r.exit_code == kExitAccepted) {
    try {
      std::filesystem::create_directories(cfg.output_path);
      for (const auto& o : kr.obligations) {
        hol::Problem p = translate::translate_obligation(o, cfg.axiom_set);
        write_file(cfg.output_path + "/obligation_" + std::to_string(o.seq) + ".p",
                   tptp::emit_th0(p));
      }
    } catch (const std::exception& e) {
      return operational_error(cfg, "obligations", e.what());
    }
  }
  return finish(cfg, std::move(r), /*with_outcomes=*/false);
}

CommandResult run(const CliConfig& cfg) {
  switch (cfg.command) {
    case Command::Check: return cmd_check(cfg);
    case Command::Translate: return cmd_translate(cfg);
    case Command::Prove: return cmd_prove(cfg);
    case Command::Obligations: return cmd_obligations(cfg);
  }
  return operational_error(cfg, "run", "unknown command");
}

// ---------------------------------------------------------------------------
// JSON report serialization.
// ---------------------------------------------------------------------------

std::string report_to_json(const Report& r) {
  json obs = json::array();
  for (const auto& o : r.obligations) {
    obs.push_back(json{{"seq", o.seq},
                       {"kind", o.kind},
                       {"type_name", o.type_name},
                       {"arg_index", o.arg_index},
                       {"note", o.note},
                       {"context", o.context},
                       {"formula", o.formula},
                       {"result", o.result},
                       {"by", o.by},
                       {"seconds", o.seconds}});
  }
  json j{{"command", r.command},
         {"exit_code", r.exit_code},
         {"verdict", r.verdict},
         {"reason", r.reason},
         {"location", r.location},
         {"obligations", obs},
         {"oracle",
          json{{"status", r.oracle_status},
               {"reason", r.oracle_reason},
               {"by", r.oracle_by},
               {"seconds", r.oracle_seconds}}},
         {"output_file", r.output_file}};
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.exit_code = j.at("exit_code").get<int>();
    r.verdict = j.at("verdict").get<std::string>();
    r.reason = j.at("reason").get<std::string>();
    r.location = j.at("location").get<std::string>();
    for (const auto& jo : j.at("obligations")) {
      ObligationReport o;
      o.seq = jo.at("seq").get<std::size_t>();
      o.kind = jo.at("kind").get<std::string>();
      o.type_name = jo.at("type_name").get<std::string>();
      o.arg_index = jo.at("arg_index").get<int>();
      o.note = jo.at("note").get<std::string>();
      o.context = jo.at("context").get<std::string>();
      o.formula = jo.at("formula").get<std::string>();
      o.result = jo.at("result").get<std::string>();
      o.by = jo.at("by").get<std::string>();
      o.seconds = jo.at("seconds").get<double>();
      r.obligations.push_back(std::move(o));
    }
    const json& jo = j.at("oracle");
    r.oracle_status = jo.at("status").get<std::string>();
    r.oracle_reason = jo.at("reason").get<std::string>();
    r.oracle_by = jo.at("by").get<std::string>();
    r.oracle_seconds = jo.at("seconds").get<double>();
    r.output_file = j.at("output_file").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

} // namespace dholk::cli
