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

#include <functional>
#include <string>

#include "doctest.h"
#include "dholk/kernel.hpp"
#include "dholk/translate.hpp"
#include "dholk/tptp.hpp"
#include "gen.hpp"
#include "helpers.hpp"

using namespace dholk;
using namespace dholk::tptp;
using dholk::testsupport::corpus_path;
using dholk::testsupport::slurp;

TEST_CASE("declarations parse into the right kinds") {
  ParseResult r = parse_dhol(R"(
    thf(obj_decl, type, obj: $tType).
    thf(mor_decl, type, mor: !>[S: obj, T: obj]: $tType).
    thf(id_decl, type, id: !>[A: obj]: (mor @ A @ A)).
    thf(u_decl, type, U: obj).
    thf(ax1, axiom, ! [A: obj]: ((id @ A) = (id @ A))).
    thf(h1, axiom, (U = U)).
    thf(goal, conjecture, ((id @ U) = (id @ U))).
  )");

  const auto* obj = r.theory.find_type("obj");
  REQUIRE(obj != nullptr);
  CHECK(obj->telescope.empty());

  const auto* mor = r.theory.find_type("mor");
  REQUIRE(mor != nullptr);
  REQUIRE(mor->telescope.size() == 2);
  CHECK(mor->telescope[0].first == "S");
  CHECK(dhol::alpha_eq(mor->telescope[1].second, dhol::mk_base("obj", {})));

  const auto* id = r.theory.find_const("id");
  REQUIRE(id != nullptr);
  CHECK(dhol::kind(id->ty) == dhol::TypeKind::Pi);

  // uppercase type statement declares a context variable
  CHECK(r.context.find_var("U") != nullptr);
  CHECK(r.theory.find_const("U") == nullptr);

  // ax1 has no context variables: a theory axiom
  CHECK(r.theory.find_axiom("ax1") != nullptr);
  // h1 mentions U: a context assumption
  CHECK(r.theory.find_axiom("h1") == nullptr);
  bool found = false;
  for (const auto& e : r.context.entries)
    if (const auto* a = std::get_if<dhol::Assumption>(&e))
      if (a->name == "h1") found = true;
  CHECK(found);

  REQUIRE(r.conjecture.has_value());
  CHECK(dhol::kind(*r.conjecture) == dhol::TermKind::Eq);
}

TEST_CASE("connective precedence and associativity") {
  ParseResult r = parse_dhol(
      "thf(a_decl, type, a: $o).\n"
      "thf(b_decl, type, b: $o).\n"
      "thf(c_decl, type, c: $o).\n"
      "thf(x, axiom, a => b => c).\n"       // right-associative
      "thf(y, axiom, a & b | c).\n"          // and binds tighter, or left-assoc
      "thf(z, axiom, ~ a & b).\n"            // unary over and
      "thf(w, axiom, (a <=> b)).\n"          // iff is boolean equality
      "thf(v, axiom, a = b => c).\n");       // = over =>

  const auto* x = r.theory.find_axiom("x");
  REQUIRE(x != nullptr);
  const auto* xi = dhol::get_if<dhol::ImplT>(x->formula);
  REQUIRE(xi != nullptr);
  CHECK(dhol::kind(xi->lhs) == dhol::TermKind::Const);
  CHECK(dhol::kind(xi->rhs) == dhol::TermKind::Impl);

  const auto* y = r.theory.find_axiom("y");
  const auto* yo = dhol::get_if<dhol::OrT>(y->formula);
  REQUIRE(yo != nullptr);
  CHECK(dhol::kind(yo->lhs) == dhol::TermKind::And);

  const auto* z = r.theory.find_axiom("z");
  const auto* za = dhol::get_if<dhol::AndT>(z->formula);
  REQUIRE(za != nullptr);
  CHECK(dhol::kind(za->lhs) == dhol::TermKind::Not);

  const auto* w = r.theory.find_axiom("w");
  const auto* we = dhol::get_if<dhol::EqT>(w->formula);
  REQUIRE(we != nullptr);
  REQUIRE(we->at.has_value());
  CHECK(dhol::kind(*we->at) == dhol::TypeKind::Bool);

  const auto* v = r.theory.find_axiom("v");
  const auto* vi = dhol::get_if<dhol::ImplT>(v->formula);
  REQUIRE(vi != nullptr);
  CHECK(dhol::kind(vi->lhs) == dhol::TermKind::Eq);
}

TEST_CASE("dependent type syntax") {
  ParseResult r = parse_dhol(
      "thf(obj_decl, type, obj: $tType).\n"
      "thf(p_decl, type, p: (obj > $o)).\n"
      "thf(small_decl, type, small: (obj ?| p)).\n"
      "thf(pick_decl, type, pick: ((obj > obj) ?| (^[F: obj > obj]: $true))).\n");

  const auto* small = r.theory.find_const("small");
  REQUIRE(small != nullptr);
  REQUIRE(dhol::kind(small->ty) == dhol::TypeKind::Psub);
  // ?| binds loosest: the base of pick is the whole arrow
  const auto* pick = r.theory.find_const("pick");
  REQUIRE(pick != nullptr);
  const auto* ps = dhol::get_if<dhol::PsubTy>(pick->ty);
  REQUIRE(ps != nullptr);
  CHECK(dhol::kind(ps->base) == dhol::TypeKind::Pi);
  CHECK(dhol::kind(ps->pred) == dhol::TermKind::Lam);
}

TEST_CASE("holes parse as placeholders and elaborate away") {
  std::string text =
      "thf(obj_decl, type, obj: $tType).\n"
      "thf(mor_decl, type, mor: !>[S: obj, T: obj]: $tType).\n"
      "thf(id_decl, type, id: !>[A: obj]: (mor @ A @ A)).\n"
      "thf(comp_decl, type, comp: !>[A: obj, B: obj, C: obj]: "
      "((mor @ A @ B) > ((mor @ B @ C) > (mor @ A @ C)))).\n"
      "thf(u_decl, type, U: obj).\n"
      "thf(goal, conjecture, ((comp @ _ @ _ @ _ @ (id @ U) @ (id @ U)) = (id @ U))).\n";
  ParseResult h = parse_dhol(text);
  REQUIRE(h.conjecture.has_value());
  kernel::AcceptAllOracle accept;
  kernel::CheckReport rep = kernel::check_problem(h.theory, h.context, h.conjecture, accept);
  CHECK(rep.verdict == kernel::Verdict::Accepted);
  // no placeholder survives elaboration
  std::function<bool(const dhol::Term&)> has_hole = [&](const dhol::Term& t) -> bool {
    if (dhol::kind(t) == dhol::TermKind::Hole) return true;
    if (const auto* l = dhol::get_if<dhol::LamT>(t)) return has_hole(l->body);
    if (const auto* a = dhol::get_if<dhol::AppT>(t)) return has_hole(a->fn) || has_hole(a->arg);
    if (const auto* e = dhol::get_if<dhol::EqT>(t)) return has_hole(e->lhs) || has_hole(e->rhs);
    if (const auto* i = dhol::get_if<dhol::ImplT>(t)) return has_hole(i->lhs) || has_hole(i->rhs);
    if (const auto* f = dhol::get_if<dhol::ForallT>(t)) return has_hole(f->body);
    if (const auto* x = dhol::get_if<dhol::ExistsT>(t)) return has_hole(x->body);
    if (const auto* c = dhol::get_if<dhol::AndT>(t)) return has_hole(c->lhs) || has_hole(c->rhs);
    if (const auto* o = dhol::get_if<dhol::OrT>(t)) return has_hole(o->lhs) || has_hole(o->rhs);
    if (const auto* n = dhol::get_if<dhol::NotT>(t)) return has_hole(n->arg);
    return false;
  };
  CHECK(!has_hole(*rep.conjecture));
  // the filled arguments are the ones equality forces
  std::string pretty = dhol::pretty(*rep.conjecture);
  CHECK(pretty.find("comp U U U") != std::string::npos);
}

TEST_CASE("comments and quoted names") {
  ParseResult r = parse_dhol(
      "% a line comment\n"
      "/* a block\n   comment */\n"
      "thf('strange name', type, obj: $tType).\n"
      "thf(c_decl, type, 'odd const': obj).\n");
  CHECK(r.theory.find_type("obj") != nullptr);
  CHECK(r.theory.find_const("odd const") != nullptr);
}

TEST_CASE("parse errors carry positions and never crash") {
  auto expect_error = [](const std::string& text) {
    try {
      parse_dhol(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.col >= 1);
      CHECK(!std::string(e.what()).empty());
    }
  };
  expect_error("thf(");
  expect_error("thf(a, type, obj: $tType). garbage");
  expect_error("thf(a, axiom, (p & )).");
  expect_error("thf(_bad, type, obj: $tType).");
  expect_error("thf(a, type, obj: $tType). thf(a2, conjecture, $true). "
               "thf(a3, conjecture, $true).");
  expect_error("/* never closed");
  expect_error("thf(a, axiom, x = ).");
  // deep nesting trips the depth guard instead of overflowing the stack
  std::string deep = "thf(a, axiom, ";
  for (int i = 0; i < 2000; ++i) deep += "(";
  deep += "$true";
  for (int i = 0; i < 2000; ++i) deep += ")";
  deep += ").";
  expect_error(deep);
}

TEST_CASE("unknown names are parse-time or check-time errors, not crashes") {
  // parsing is name-agnostic; the checker rejects the unknown symbol
  ParseResult r = parse_dhol("thf(a, axiom, ghost).");
  kernel::CollectOnlyOracle collect;
  kernel::CheckReport rep = kernel::check_problem(r.theory, r.context, r.conjecture, collect);
  CHECK(rep.verdict == kernel::Verdict::Rejected);
}

TEST_CASE("name mangling is injective and self-inverse") {
  CHECK(mangle_name("obj") == "obj");
  CHECK(mangle_name("mor_per") == "mor_per");
  // uppercase, punctuation, unicode: escaped to hex
  CHECK(mangle_name("U") == "esc_55");
  CHECK(mangle_name("odd name") != "odd name");
  CHECK(demangle_name("esc_55") == std::string("U"));
  CHECK(demangle_name("obj") == std::string("obj"));

  // names that look like escapes are themselves escaped
  std::string tricky = "esc_55";
  std::string mangled = mangle_name(tricky);
  CHECK(mangled != tricky);
  CHECK(demangle_name(mangled) == tricky);

  for (const std::string& name :
       {std::string("X"), std::string("esc_ff"), std::string("a b"),
        std::string("Zürich"), std::string("'quoted'"), std::string("__x")}) {
    auto back = demangle_name(mangle_name(name));
    REQUIRE(back.has_value());
    CHECK(*back == name);
  }
}

TEST_CASE("emission is deterministic and free of dialect extensions") {
  tptp::ParseResult pr = parse_dhol(slurp(corpus_path("isomorphisms.p")));
  kernel::AcceptAllOracle accept;
  kernel::CheckReport rep = kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
  REQUIRE(rep.verdict == kernel::Verdict::Accepted);
  translate::TranslationOutput out = translate::translate_theory(rep.theory);
  hol::Context hctx = translate::translate_context(rep.context);
  std::optional<hol::Term> conj;
  if (rep.conjecture) conj = translate::translate_term(*rep.conjecture);

  std::string once = emit_th0(out.theory, hctx, conj);
  std::string twice = emit_th0(out.theory, hctx, conj);
  CHECK(once == twice);
  CHECK(once.find("?|") == std::string::npos);
  CHECK(once.find("!>") == std::string::npos);
  CHECK(once.find("conjecture") != std::string::npos);
}

TEST_CASE("emitted text reparses to the same theory, byte-stably") {
  for (const std::string& name : dholk::testsupport::corpus_files()) {
    tptp::ParseResult pr = parse_dhol(slurp(corpus_path(name)));
    kernel::AcceptAllOracle accept;
    kernel::CheckReport rep =
        kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
    REQUIRE(rep.verdict == kernel::Verdict::Accepted);
    translate::TranslationOutput out = translate::translate_theory(rep.theory);
    hol::Context hctx = translate::translate_context(rep.context);
    std::optional<hol::Term> conj;
    if (rep.conjecture) conj = translate::translate_term(*rep.conjecture);

    std::string text1 = emit_th0(out.theory, hctx, conj);
    ReparseResult r = reparse_th0(text1);
    std::string text2 = emit_th0(r.theory, hol::Context{}, r.conjecture);
    CHECK(text1 == text2);
  }
}

TEST_CASE("context variables appear in the output under their mangled names") {
  tptp::ParseResult pr = parse_dhol(slurp(corpus_path("dependent_implication.p")));
  kernel::AcceptAllOracle accept;
  kernel::CheckReport rep = kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
  translate::TranslationOutput out = translate::translate_theory(rep.theory);
  hol::Context hctx = translate::translate_context(rep.context);
  std::string text = emit_th0(out.theory, hctx, translate::translate_term(*rep.conjecture));
  CHECK(text.find("esc_58") != std::string::npos); // X
  CHECK(text.find("esc_59") != std::string::npos); // Y
}

TEST_CASE("random byte strings never crash the parser") {
  testgen::Rng rng(555888);
  std::string seed = slurp(corpus_path("category_theory.p"));
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 500; ++i) {
    std::string input = testgen::gen_fuzz_string(rng, seed);
    try {
      parse_dhol(input);
      ++parsed;
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 500);
}
