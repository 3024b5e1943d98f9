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
#include <optional>
#include <string>
#include <vector>

#include "dholk/hol.hpp"

// Validity oracles for simply typed problems: a bounded built-in decision
// attempt (sound, deliberately incomplete, never refutes) and a driver for
// external automated provers speaking the SZS status convention. Oracles are
// chained; the first decisive answer wins.

namespace dholk::oracle {

// ---------------- Verdicts ----------------

enum class Status { Proved, Refuted, Unknown };
enum class UnknownReason { Timeout, GaveUp, ParseFailure, NotAttempted };

const char* to_string(Status s);
const char* to_string(UnknownReason r);

struct OracleVerdict {
  Status status = Status::Unknown;
  UnknownReason reason = UnknownReason::NotAttempted; // meaningful when Unknown
  std::string by;     // name of the oracle that produced the verdict
  double seconds = 0; // wall-clock time spent
  std::string diagnostics;
};

// ---------------- Configuration ----------------

struct BuiltinBounds {
  int depth = 3;                // saturation rounds / implication chaining depth
  int max_instantiations = 64;  // per universal fact per round
};

struct OracleSpec {
  enum class Kind { Builtin, External };
  Kind kind = Kind::Builtin;
  std::string name = "builtin";
  BuiltinBounds bounds;         // Builtin only
  std::string command_template; // External only; {file} and {timeout} expand
};

struct OracleConfig {
  std::vector<OracleSpec> chain; // nonempty; builtin allowed anywhere
  double timeout_seconds = 10.0; // per obligation, external oracles
  bool keep_temp = false;        // retain problem files for diagnostics
  std::string temp_dir;          // where to put them (default: system temp)
};

// Environment variable consulted for a default external prover command
// template (e.g. "eprover-ho --auto {file}" or "vampire -t {timeout} {file}").
inline constexpr const char* kExternalCommandEnv = "DHOLK_ATP";

// Builtin first, then the external prover from the environment if present.
OracleConfig default_config();

// ---------------- Proof traces ----------------

// Every Proved verdict from the builtin is backed by a trace that a small
// independent replay checker validates. Step rules are the trusted base:
//   axiom <name>            conclusion is that axiom's formula
//   assume <name>           conclusion is that context assumption's formula
//   hyp <k>                 conclusion is hypothesis #k introduced on the path
//   normalize p             conclusion = beta-eta normal form of premise p
//   and_left/and_right p    conjunct of premise p
//   mp p q                  p: F ⟹ G, q: F, conclusion G
//   inst p (witness t)      p: ∀x:A. B, t: A, conclusion = nf(B[x:=t])
//   refl                    conclusion s =_A s
//   sym p                   p: s =_A t, conclusion t =_A s
//   trans p q               p: s =_A t, q: t =_A u, conclusion s =_A u
//   cong p q                p: f =_{A→B} g, q: a =_A b, conclusion f a =_B g b
//   eq_true_intro p         p: F, conclusion F =_bool true
//   eq_true_elim p          p: F =_bool true, conclusion F
//   neg_eq_false p          p: ¬F, conclusion F =_bool false
//   true_intro              conclusion true
//   absurd p q              p: F, q: F =_bool false, conclusion arbitrary
struct Step {
  std::string rule;
  std::vector<std::size_t> premises; // indices into the same step list
  hol::Term conclusion;
  std::string name;                  // axiom/assume: source name; hyp: index
  std::optional<hol::Term> witness;  // inst only
};

// Goal-directed skeleton: which introduction rules were applied, and the
// equational derivation at each leaf.
struct ProofNode {
  enum class Tag {
    Leaf,        // steps close the residual goal
    TrueIntro,   // goal is the truth constant
    ImplIntro,   // hypothesize lhs, prove rhs          (1 child)
    NotIntro,    // hypothesize body, prove falsehood   (1 child)
    ForallIntro, // fresh eigenvariable                 (1 child)
    ExistsIntro, // provide a witness                   (1 child)
    AndIntro,    // prove both conjuncts                (2 children)
    OrLeft,      // prove left disjunct                 (1 child)
    OrRight,     // prove right disjunct                (1 child)
    PropExt,     // boolean equality via both implications (2 children)
  };
  Tag tag = Tag::Leaf;
  std::string eigen;                // ForallIntro
  std::optional<hol::Term> witness; // ExistsIntro
  std::vector<ProofNode> children;
  std::vector<Step> steps;          // Leaf
};

struct Proof {
  ProofNode root;
};

// Validates a trace against the problem using only the step rules above.
// Returns true iff the trace proves the problem's conjecture; on failure,
// `why` (if non-null) receives a description of the offending step.
bool replay(const hol::Problem& problem, const Proof& proof, std::string* why = nullptr);

// ---------------- Oracles ----------------

// Bounded decision attempt: beta-eta normalization, assumption/axiom lookup
// modulo alpha, congruence closure over ground equalities (with every known
// fact equated to true), guarded universal instantiation with well-typed
// ground subterms of the goal, and implication chaining, for `depth` rounds.
// Sound; never returns Refuted; Unknown on resource exhaustion. A Proved
// verdict has passed `replay` (the trace is exported via `out` if non-null).
OracleVerdict builtin_decide(const hol::Problem& problem, const BuiltinBounds& bounds,
                             Proof* out = nullptr);

// Serializes the problem, substitutes {file}/{timeout} into the command
// template, runs it under a wall-clock deadline, and maps the SZS status:
// Theorem/Unsatisfiable → Proved; CounterSatisfiable/Satisfiable → Refuted;
// Timeout → Unknown(timeout); other status → Unknown(gave-up); no status
// line → Unknown(parse-failure). Spawn failures are Unknown, never Proved.
OracleVerdict run_external(const hol::Problem& problem, const std::string& name,
                           const std::string& command_template, double timeout_seconds,
                           bool keep_temp = false, const std::string& temp_dir = {});

// Runs the chain in order; first Proved/Refuted wins; otherwise the last
// Unknown (its reason) is returned.
OracleVerdict prove(const hol::Problem& problem, const OracleConfig& cfg);

} // namespace dholk::oracle
