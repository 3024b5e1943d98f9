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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dholk/syntax.hpp"

// Type checker for the dependently typed logic. Typing here is undecidable,
// so instead of deciding term equality the checker emits proof obligations
// (boolean statements that must be valid for the input to be well-typed) and
// hands each one to a pluggable oracle the moment it is produced.

namespace dholk::kernel {

// ---------------- Obligations ----------------

enum class ObligationKind {
  BaseArgEq,    // arguments of the same base-type constructor must be equal
  PsubIntro,    // term checked against a predicate subtype must satisfy it
  PsubVariance, // predicate of the smaller type must imply the larger one's
  TypeEqPred,   // predicates of two equated subtypes must agree pointwise
  Conjecture,   // the stated conjecture itself
  Other,
};
const char* to_string(ObligationKind k);

struct Provenance {
  ObligationKind kind = ObligationKind::Other;
  std::string type_name; // BaseArgEq: the base-type constructor involved
  int arg_index = -1;    // BaseArgEq: 0-based argument position
  std::string note;      // where in the input the obligation arose
};

// A self-contained validity question: `formula` is a boolean statement over
// `context`, with `theory` the declaration prefix visible at emission time.
struct Obligation {
  std::size_t seq = 0;
  dhol::Theory theory;
  dhol::Context context;
  dhol::Term formula;
  Provenance provenance;
};

enum class DischargeResult { Proved, Refuted, Unknown };
const char* to_string(DischargeResult r);

struct DischargeOutcome {
  DischargeResult result = DischargeResult::Unknown;
  std::string by;        // which decision procedure settled it
  double seconds = 0.0;
};

// Receives each obligation as soon as it is emitted, in emission order.
class ObligationOracle {
 public:
  virtual ~ObligationOracle() = default;
  virtual DischargeOutcome discharge(const Obligation& o) = 0;
};

// Accepts every obligation. Useful for pure elaboration and for tests.
class AcceptAllOracle final : public ObligationOracle {
 public:
  DischargeOutcome discharge(const Obligation&) override {
    return {DischargeResult::Proved, "accept-all", 0.0};
  }
};

// Never decides anything: every obligation comes back Unknown, so checking
// degrades to pure obligation collection.
class CollectOnlyOracle final : public ObligationOracle {
 public:
  DischargeOutcome discharge(const Obligation&) override {
    return {DischargeResult::Unknown, "collect-only", 0.0};
  }
};

// ---------------- Results ----------------

struct CheckError : std::runtime_error {
  CheckError(std::string reason_, std::string location_)
      : std::runtime_error(location_.empty() ? reason_
                                             : reason_ + " [at " + location_ + "]"),
        reason(std::move(reason_)),
        location(std::move(location_)) {}
  std::string reason;
  std::string location;
};

enum class Verdict { Accepted, Rejected, Inconclusive };
const char* to_string(Verdict v);

struct CheckReport {
  Verdict verdict = Verdict::Accepted;
  std::string reason;   // populated when Rejected
  std::string location; // populated when Rejected
  std::vector<Obligation> obligations;
  std::vector<DischargeOutcome> outcomes; // parallel to `obligations`
  dhol::Theory theory;                    // elaborated declarations
  dhol::Context context;                  // elaborated context
  std::optional<dhol::Term> conjecture;   // elaborated conjecture
};

// ---------------- Predicate-subtype normalization ----------------

// Normal form of a type: a core that is neither a predicate subtype nor a
// function type with a subtype codomain, plus the list of hoisted predicates
// (each a lambda over the core). The empty list encodes the bare core.
struct NormParts {
  dhol::Type core;
  std::vector<dhol::Term> preds;
};

NormParts norm_parts(const dhol::Type& a);

// Rebuilds the normal form as a single type: subtype predicates are hoisted
// out of function codomains, nested subtypes are flattened, and the collected
// predicates are merged into one conjunction. Idempotent.
dhol::Type normalize_psub(const dhol::Type& a);

// Drops outer predicate-subtype wrappers only (no hoisting). This is how a
// function position sheds its subtype before application.
dhol::Type psub_strip(const dhol::Type& a);

// ---------------- The checker ----------------

struct InferResult {
  dhol::Term elaborated; // equality annotations filled in, binders freshened
  dhol::Type type;
};

class Checker {
 public:
  explicit Checker(ObligationOracle& oracle) : oracle_(oracle) {}

  // Checks and installs declarations in order; throws CheckError on the
  // first ill-formed declaration. Obligations are discharged as emitted.
  void load_theory(const dhol::Theory& raw);
  void load_context(const dhol::Context& raw);

  // Checks a boolean statement under the loaded theory and context.
  // `where` labels error locations. Returns the elaborated formula.
  dhol::Term check_formula(const dhol::Term& raw, const std::string& where);

  // Core operations over the currently loaded theory/context. `expected`
  // types passed to check/type_equal/subtype must already be elaborated
  // (i.e. produced by wf_type or taken from elaborated declarations).
  InferResult infer(const dhol::Term& t);
  dhol::Term check(const dhol::Term& t, const dhol::Type& expected);
  dhol::Type wf_type(const dhol::Type& a);
  void type_equal(const dhol::Type& a, const dhol::Type& b);
  void subtype(const dhol::Type& a, const dhol::Type& b);

  const dhol::Theory& theory() const { return thy_; }
  const dhol::Context& context() const { return ctx_; }
  const std::vector<Obligation>& obligations() const { return obligations_; }
  const std::vector<DischargeOutcome>& outcomes() const { return outcomes_; }
  bool saw_unknown() const { return unknown_; }

 private:
  // Location breadcrumbs for error messages and provenance notes.
  std::string loc_string() const;

  std::set<std::string> names_in_scope() const;
  std::string freshen(const std::string& base, const std::set<std::string>& extra);

  void emit(dhol::Term formula, Provenance prov);

  InferResult infer_app(const dhol::Term& spine, const dhol::Type* expected);
  InferResult infer_app_plain(const dhol::Term& fn_elab, const dhol::Type& fn_ty,
                              const std::vector<dhol::Term>& args);
  void core_equal(const dhol::Type& a, const dhol::Type& b);

  ObligationOracle& oracle_;
  dhol::Theory thy_;
  dhol::Context ctx_;
  std::vector<std::string> loc_;
  std::vector<Obligation> obligations_;
  std::vector<DischargeOutcome> outcomes_;
  std::size_t seq_ = 0;
  int silent_ = 0; // >0 while running exploratory passes that must not emit
  bool unknown_ = false;
  std::set<std::string> axiom_names_; // theory axioms + context assumptions
};

// ---------------- Whole-input checking ----------------

CheckReport check_theory(const dhol::Theory& thy, ObligationOracle& oracle);
CheckReport check_problem(const dhol::Theory& thy, const dhol::Context& ctx,
                          const std::optional<dhol::Term>& conjecture,
                          ObligationOracle& oracle);

} // namespace dholk::kernel
