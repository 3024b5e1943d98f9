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

#include <string>

#include "doctest.h"
#include "dholk/hol.hpp"

using namespace dholk;
using namespace dholk::hol;

namespace {

Theory base_theory() {
  Theory thy;
  thy.decls.push_back(TypeDecl{"i"});
  thy.decls.push_back(ConstDecl{"c", mk_base("i")});
  thy.decls.push_back(ConstDecl{"f", mk_arrow(mk_base("i"), mk_base("i"))});
  thy.decls.push_back(ConstDecl{"p", mk_arrow(mk_base("i"), mk_bool())});
  return thy;
}

} // namespace

TEST_CASE("inference of the simply typed fragment") {
  Theory thy = base_theory();
  Context ctx;
  ctx.entries.push_back(VarDecl{"x", mk_base("i")});

  CHECK(type_eq(infer(thy, ctx, mk_const("c")), mk_base("i")));
  CHECK(type_eq(infer(thy, ctx, mk_var("x")), mk_base("i")));
  CHECK(type_eq(infer(thy, ctx, mk_app(mk_const("f"), mk_var("x"))), mk_base("i")));
  CHECK(type_eq(infer(thy, ctx, mk_lam("yb", mk_base("i"), mk_var("yb"))),
                mk_arrow(mk_base("i"), mk_base("i"))));
  CHECK(type_eq(infer(thy, ctx, mk_eq(std::nullopt, mk_var("x"), mk_const("c"))), mk_bool()));
  CHECK(type_eq(infer(thy, ctx, mk_true()), mk_bool()));
  CHECK(type_eq(infer(thy, ctx,
                      mk_forall("zb", mk_base("i"),
                                mk_app(mk_const("p"), mk_var("zb")))),
                mk_bool()));
  CHECK(type_eq(infer(thy, ctx,
                      mk_and(mk_true(), mk_not(mk_app(mk_const("p"), mk_var("x"))))),
                mk_bool()));
}

TEST_CASE("inference failures throw TypeError") {
  Theory thy = base_theory();
  Context ctx;
  CHECK_THROWS_AS(infer(thy, ctx, mk_var("nope")), TypeError);
  CHECK_THROWS_AS(infer(thy, ctx, mk_const("nope")), TypeError);
  // argument type mismatch
  CHECK_THROWS_AS(infer(thy, ctx, mk_app(mk_const("f"), mk_true())), TypeError);
  // applying a non-function
  CHECK_THROWS_AS(infer(thy, ctx, mk_app(mk_const("c"), mk_const("c"))), TypeError);
  // equality across distinct types
  CHECK_THROWS_AS(infer(thy, ctx, mk_eq(std::nullopt, mk_const("c"), mk_true())), TypeError);
  // boolean connective over a non-boolean
  CHECK_THROWS_AS(infer(thy, ctx, mk_not(mk_const("c"))), TypeError);
}

TEST_CASE("inference elaborates equality annotations") {
  Theory thy = base_theory();
  Context ctx;
  Term raw = mk_eq(std::nullopt, mk_const("c"), mk_const("c"));
  Term elab;
  infer(thy, ctx, raw, &elab);
  const auto* e = get_if<EqT>(elab);
  REQUIRE(e != nullptr);
  REQUIRE(e->at.has_value());
  CHECK(type_eq(*e->at, mk_base("i")));

  // nested occurrences are annotated too
  Term nested = mk_impl(mk_eq(std::nullopt, mk_true(), mk_false()), mk_true());
  infer(thy, ctx, nested, &elab);
  const auto* i = get_if<ImplT>(elab);
  REQUIRE(i != nullptr);
  CHECK(get_if<EqT>(i->lhs)->at.has_value());
}

TEST_CASE("well-formedness rejects undeclared base types") {
  Theory thy = base_theory();
  CHECK_NOTHROW(wf_type(thy, mk_arrow(mk_base("i"), mk_bool())));
  CHECK_THROWS_AS(wf_type(thy, mk_base("ghost")), TypeError);
  CHECK_THROWS_AS(wf_type(thy, mk_arrow(mk_base("ghost"), mk_bool())), TypeError);
}

TEST_CASE("theory checking validates declarations in order") {
  Theory ok = base_theory();
  ok.decls.push_back(AxiomDecl{"ax", mk_app(mk_const("p"), mk_const("c"))});
  CHECK_NOTHROW(check_theory(ok));

  // axiom formulas must be boolean
  Theory bad = base_theory();
  bad.decls.push_back(AxiomDecl{"ax", mk_const("c")});
  CHECK_THROWS_AS(check_theory(bad), TypeError);

  // constants may not use types declared later
  Theory forward;
  forward.decls.push_back(ConstDecl{"c", mk_base("i")});
  forward.decls.push_back(TypeDecl{"i"});
  CHECK_THROWS_AS(check_theory(forward), TypeError);

  // duplicate names are rejected
  Theory dup = base_theory();
  dup.decls.push_back(ConstDecl{"c", mk_bool()});
  CHECK_THROWS_AS(check_theory(dup), TypeError);
}

TEST_CASE("problem checking requires a boolean conjecture") {
  Problem p;
  p.theory = base_theory();
  p.context.entries.push_back(VarDecl{"x", mk_base("i")});
  p.conjecture = mk_eq(std::nullopt, mk_var("x"), mk_var("x"));
  CHECK_NOTHROW(check_problem(p));
  p.conjecture = mk_var("x");
  CHECK_THROWS_AS(check_problem(p), TypeError);
}

TEST_CASE("substitution and alpha equivalence") {
  Term t = mk_lam("yb", mk_bool(), mk_var("x"));
  Term r = subst(t, "x", mk_var("yb"));
  const auto* l = get_if<LamT>(r);
  REQUIRE(l != nullptr);
  CHECK(l->var != "yb"); // capture avoided
  CHECK(alpha_eq(mk_lam("a", mk_bool(), mk_var("a")), mk_lam("b", mk_bool(), mk_var("b"))));
  CHECK(!alpha_eq(mk_var("x"), mk_var("y")));
  CHECK(canon_key(mk_lam("a", mk_bool(), mk_var("a"))) ==
        canon_key(mk_lam("b", mk_bool(), mk_var("b"))));
}

TEST_CASE("type equality is structural") {
  CHECK(type_eq(mk_arrow(mk_bool(), mk_base("i")), mk_arrow(mk_bool(), mk_base("i"))));
  CHECK(!type_eq(mk_arrow(mk_bool(), mk_base("i")), mk_arrow(mk_base("i"), mk_bool())));
  CHECK(!type_eq(mk_bool(), mk_base("bool")));
  CHECK(canon_key(mk_arrow(mk_bool(), mk_bool())) == canon_key(mk_arrow(mk_bool(), mk_bool())));
}

TEST_CASE("beta-eta normalization") {
  Theory thy = base_theory();
  Context ctx;

  // beta: (\x. f x) c -> f c
  Term t = mk_app(mk_lam("xb", mk_base("i"), mk_app(mk_const("f"), mk_var("xb"))),
                  mk_const("c"));
  CHECK(alpha_eq(beta_eta_normalize(t), mk_app(mk_const("f"), mk_const("c"))));

  // eta: \x. f x -> f
  Term e = mk_lam("xb", mk_base("i"), mk_app(mk_const("f"), mk_var("xb")));
  CHECK(alpha_eq(beta_eta_normalize(e), mk_const("f")));

  // no eta when the binder occurs in the function part
  Term no = mk_lam("xb", mk_arrow(mk_base("i"), mk_base("i")),
                   mk_app(mk_var("xb"), mk_app(mk_var("xb"), mk_const("c"))));
  CHECK(kind(beta_eta_normalize(no)) == TermKind::Lam);

  // idempotent
  Term n = beta_eta_normalize(t);
  CHECK(alpha_eq(beta_eta_normalize(n), n));

  // sugar preserved and normalized underneath
  Term s = mk_and(mk_app(mk_lam("xb", mk_bool(), mk_var("xb")), mk_true()), mk_false());
  Term sn = beta_eta_normalize(s);
  REQUIRE(kind(sn) == TermKind::And);
  CHECK(kind(get_if<AndT>(sn)->lhs) == TermKind::True);
}

TEST_CASE("desugar stays within the core fragment") {
  Term t = mk_or(mk_not(mk_var("a")), mk_exists("xb", mk_bool(), mk_var("xb")));
  CHECK(is_sugar(t));
  Term core = desugar(t);
  switch (kind(core)) {
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Not:
    case TermKind::Forall:
    case TermKind::Exists:
    case TermKind::True:
    case TermKind::False:
      FAIL("desugar left a sugar head");
      break;
    default: break;
  }
}

TEST_CASE("theory and context lookups") {
  Theory thy = base_theory();
  CHECK(thy.has_type("i"));
  CHECK(!thy.has_type("c"));
  REQUIRE(thy.find_const("f") != nullptr);
  CHECK(type_eq(thy.find_const("f")->ty, mk_arrow(mk_base("i"), mk_base("i"))));
  CHECK(thy.has_name("p"));

  Context ctx;
  ctx.entries.push_back(VarDecl{"x", mk_base("i")});
  ctx.entries.push_back(Assumption{"h", mk_true()});
  CHECK(ctx.find_var("x") != nullptr);
  CHECK(ctx.has_name("h"));
  CHECK(!ctx.has_name("zz"));
}

TEST_CASE("pretty printing produces text") {
  CHECK(!pretty(mk_arrow(mk_bool(), mk_base("i"))).empty());
  CHECK(!pretty(mk_forall("xb", mk_bool(), mk_var("xb"))).empty());
}
