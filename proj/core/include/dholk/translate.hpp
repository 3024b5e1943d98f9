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

#include <map>
#include <stdexcept>
#include <string>

#include "dholk/hol.hpp"
#include "dholk/kernel.hpp"
#include "dholk/syntax.hpp"

// The erasure translation into simple type theory. Dependent types lose
// their term arguments; what they meant is recovered relationally: every
// base-type family gets a partial equivalence relation (PER) constant, and
// equality at a type becomes that type's PER. Quantifiers are relativized
// to the PER's domain (per_of(A, x, x) says "x is a well-behaved A").

namespace dholk::translate {

// Which PER axioms accompany a base-type declaration `a` with telescope x⃗:
//  - Appendix: a_sym, a_trans, and a_per
//      (a_per x⃗ v v ⟹ (a_per x⃗ u v ⇔ u =_a v)), the set completeness needs;
//  - Minimal: the single implication a_PER (a_per x⃗ u v ⟹ u =_a v).
enum class AxiomSet { Appendix, Minimal };

class TranslateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TranslationOutput {
  hol::Theory theory;
  // source type constructor → name of its PER constant (injective)
  std::map<std::string, std::string> per_names;
  // generated symbol / axiom name → the source declaration it came from
  std::map<std::string, std::string> symbol_source;
  std::map<std::string, std::string> axiom_source;
};

// Deterministic generated-name scheme. Collisions with user-chosen names
// are reported as errors, never silently renamed.
std::string per_constant_name(const std::string& type_ctor);    // a → a_per
std::string typing_axiom_name(const std::string& const_name);   // c → c_tp
std::string var_typing_assumption_name(const std::string& var); // x → x_tp

// Type erasure: base applications drop their arguments, function types
// become simple arrows, predicate subtypes collapse to their base.
hol::Type translate_type(const dhol::Type& a);

// The relation A* applied to s and t. For function types this is the usual
// relational lifting with two fresh variables derived from the binder name.
hol::Term per_of(const dhol::Type& a, const hol::Term& s, const hol::Term& t);

// Term translation. Equality must carry its type annotation (elaborated
// input); it becomes the annotation's PER. Quantifiers are relativized.
hol::Term translate_term(const dhol::Term& t);

TranslationOutput translate_theory(const dhol::Theory& thy,
                                   AxiomSet axioms = AxiomSet::Appendix);

// Variables become variables plus a typing assumption x_tp: A* x x;
// assumptions translate to assumptions.
hol::Context translate_context(const dhol::Context& ctx);

// Packages one kernel obligation as a self-contained HOL problem.
hol::Problem translate_obligation(const kernel::Obligation& o,
                                  AxiomSet axioms = AxiomSet::Appendix);

} // namespace dholk::translate
