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

#include <optional>
#include <stdexcept>
#include <string>

#include "dholk/hol.hpp"
#include "dholk/syntax.hpp"
#include "dholk/translate.hpp"

// Concrete syntax. Input: a TPTP-like dialect extended with dependent types
// (`!>[X:A]:B` for Pi, `a @ t` for applied base types, `A ?| p` for predicate
// subtypes, `_` for arguments to infer). Output: standards-conforming TH0 for
// external higher-order provers; `?|` never appears in TH0 output.

namespace dholk::tptp {

// ---------------- Errors ----------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// ---------------- Dependent dialect (input) ----------------

// `thf(name, role, ...)` statements with roles type/axiom/definition/conjecture.
// A type-role statement whose symbol starts with an uppercase letter declares a
// context variable; a formula mentioning context variables becomes a context
// assumption rather than a theory axiom. At most one conjecture.
struct ParseResult {
  dhol::Theory theory;
  dhol::Context context;
  std::optional<dhol::Term> conjecture;
};

// Total on arbitrary bytes: either returns a result or throws ParseError.
ParseResult parse_dhol(const std::string& text);

// ---------------- Name mangling ----------------

// TH0 requires lower-word identifiers. Names already in that lexical class
// pass through verbatim, except names of the form `esc_<hex>` (reserved by the
// scheme itself); everything else becomes "esc_" + lowercase hex of its UTF-8
// bytes. The scheme is injective and self-inverse via demangle_name.
std::string mangle_name(const std::string& name);
std::optional<std::string> demangle_name(const std::string& name);

// ---------------- TH0 emission (output) ----------------

// Deterministic, byte-stable TH0: a comment header documenting the mangling,
// one type statement per type constructor and constant (statement names carry
// a "_decl" suffix so a constant c and an axiom c can coexist), one axiom
// statement per axiom in declaration order, context variables as constants,
// context assumptions as axioms, conjecture last.
std::string emit_th0(const hol::Theory& thy, const hol::Context& ctx,
                     const std::optional<hol::Term>& conjecture);
std::string emit_th0(const translate::TranslationOutput& out,
                     const std::optional<hol::Term>& conjecture = std::nullopt);
std::string emit_th0(const hol::Problem& problem);

// ---------------- TH0 reparsing (tests) ----------------

// Inverse of emit_th0 up to the mangling scheme, for round-trip validation.
// Equality annotations are reconstructed by inference against the accumulated
// theory.
struct ReparseResult {
  hol::Theory theory;
  std::optional<hol::Term> conjecture;
};

ReparseResult reparse_th0(const std::string& text);

} // namespace dholk::tptp
