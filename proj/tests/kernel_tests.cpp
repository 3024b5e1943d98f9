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

#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"
#include "dholk/kernel.hpp"
#include "dholk/syntax.hpp"
#include "dholk/tptp.hpp"
#include "gen.hpp"
#include "helpers.hpp"

using namespace dholk;
using namespace dholk::dhol;
using namespace dholk::kernel;
using dholk::testsupport::corpus_path;
using dholk::testsupport::slurp;

namespace {

// obj, mor with two obj indices, and a morphism-valued constant family.
Theory category_theory() {
  Theory thy;
  thy.decls.push_back(TypeDecl{"obj", {}});
  thy.decls.push_back(
      TypeDecl{"mor", {{"s", mk_base("obj", {})}, {"t", mk_base("obj", {})}}});
  thy.decls.push_back(
      ConstDecl{"id", mk_pi("a", mk_base("obj", {}),
                            mk_base("mor", {mk_var("a"), mk_var("a")}))});
  return thy;
}

// Every obligation refuted: checking must stop with a rejection.
class RefuteAllOracle final : public ObligationOracle {
 public:
  DischargeOutcome discharge(const Obligation&) override {
    return {DischargeResult::Refuted, "refute-all", 0.0};
  }
};

// Records sequence numbers to observe emission order.
class RecordingOracle final : public ObligationOracle {
 public:
  DischargeOutcome discharge(const Obligation& o) override {
    seqs.push_back(o.seq);
    return {DischargeResult::Proved, "recording", 0.0};
  }
  std::vector<std::size_t> seqs;
};

} // namespace

TEST_CASE("normalize_psub flattens nested subtypes") {
  Type a0 = mk_base("a0", {});
  Term p = mk_lam("m", a0, mk_app(mk_const("p0"), mk_var("m")));
  Term q = mk_lam("m", a0, mk_app(mk_const("q0"), mk_var("m")));
  Type nested = mk_psub(mk_psub(a0, p), q);
  Type flat = normalize_psub(nested);
  REQUIRE(kind(flat) == TypeKind::Psub);
  const auto* ps = get_if<PsubTy>(flat);
  CHECK(kind(ps->base) == TypeKind::Base); // single wrapper left
  // idempotent
  CHECK(alpha_eq(normalize_psub(flat), flat));
}

TEST_CASE("normalize_psub returns the bare core when no predicates exist") {
  Type a = mk_pi("x", mk_base("a0", {}), mk_bool());
  CHECK(alpha_eq(normalize_psub(a), a));
}

TEST_CASE("normalize_psub hoists codomain predicates out of functions") {
  Type a0 = mk_base("a0", {});
  Term p = mk_lam("m", a0, mk_app(mk_const("p0"), mk_var("m")));
  Type lhs = mk_pi("v", a0, mk_psub(a0, p));
  Type rhs = mk_psub(mk_pi("v", a0, a0),
                     mk_lam("g", mk_pi("v", a0, a0),
                            mk_forall("v", a0,
                                      mk_app(p, mk_app(mk_var("g"), mk_var("v"))))));
  CHECK(alpha_eq(normalize_psub(lhs), normalize_psub(rhs)));
}

TEST_CASE("normalize_psub merges stacked predicates into one conjunction") {
  Type a0 = mk_base("a0", {});
  Term p = mk_lam("m", a0, mk_app(mk_const("p0"), mk_var("m")));
  Term q = mk_lam("m", a0, mk_app(mk_const("q0"), mk_var("m")));
  Type lhs = mk_psub(mk_psub(a0, p), q);
  Type rhs = mk_psub(a0, mk_lam("v", a0,
                                mk_and(mk_app(p, mk_var("v")), mk_app(q, mk_var("v")))));
  CHECK(alpha_eq(normalize_psub(lhs), normalize_psub(rhs)));
}

TEST_CASE("normalization equations hold on random types") {
  testgen::Rng rng(424242);
  for (int i = 0; i < 60; ++i) {
    Type a = testgen::gen_norm_type(rng, 2);
    Type b = testgen::gen_norm_type(rng, 2);
    Term p = testgen::gen_norm_pred(rng, b);
    Term q = testgen::gen_norm_pred(rng, a);

    // function type with a subtype codomain == subtype of the function type
    Type lhs1 = mk_pi("nb0", a, mk_psub(b, p));
    Type rhs1 = mk_psub(mk_pi("nb0", a, b),
                        mk_lam("g", mk_pi("nb0", a, b),
                               mk_forall("nb0", a,
                                         mk_app(p, mk_app(mk_var("g"), mk_var("nb0"))))));
    CHECK(alpha_eq(normalize_psub(lhs1), normalize_psub(rhs1)));

    // stacked subtypes == conjunction of predicates
    Term p2 = testgen::gen_norm_pred(rng, a);
    Type lhs2 = mk_psub(mk_psub(a, p2), q);
    Type rhs2 = mk_psub(a, mk_lam("v", a,
                                  mk_and(mk_app(p2, mk_var("v")), mk_app(q, mk_var("v")))));
    CHECK(alpha_eq(normalize_psub(lhs2), normalize_psub(rhs2)));
  }
}

TEST_CASE("psub_strip drops outer wrappers only") {
  Type a0 = mk_base("a0", {});
  Term p = mk_lam("m", a0, mk_true());
  Type stacked = mk_psub(mk_psub(a0, p), p);
  CHECK(alpha_eq(psub_strip(stacked), a0));
  // a subtype buried in a codomain is not touched
  Type fn = mk_pi("x", a0, mk_psub(a0, p));
  CHECK(alpha_eq(psub_strip(fn), fn));
}

TEST_CASE("exactly typed applications produce no obligations") {
  Theory thy = category_theory();
  Context ctx;
  ctx.entries.push_back(VarDecl{"U", mk_base("obj", {})});
  // id U : mor U U; checking (id U) = (id U) compares alpha-equal indices
  Term conj = mk_eq(std::nullopt, mk_app(mk_const("id"), mk_var("U")),
                    mk_app(mk_const("id"), mk_var("U")));
  CollectOnlyOracle collect;
  CheckReport r = check_problem(thy, ctx, conj, collect);
  CHECK(r.verdict == Verdict::Accepted);
  CHECK(r.obligations.empty());
}

TEST_CASE("mismatched base arguments become BaseArgEq obligations") {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("undecidable.p")));
  CollectOnlyOracle collect;
  CheckReport r = check_problem(pr.theory, pr.context, pr.conjecture, collect);
  CHECK(r.verdict == Verdict::Inconclusive); // collect-only cannot discharge
  REQUIRE(r.obligations.size() == 1);
  const Obligation& o = r.obligations[0];
  CHECK(o.provenance.kind == ObligationKind::BaseArgEq);
  CHECK(o.provenance.type_name == "mor");
  CHECK(o.provenance.arg_index == 1);
  // the formula equates the two middle objects at type obj
  CHECK(alpha_eq(o.formula,
                 mk_eq(mk_base("obj", {}), mk_var("V"), mk_var("V1"))));
}

TEST_CASE("obligations carry the emission-time context and are numbered in order") {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("dependent_implication.p")));
  RecordingOracle rec;
  CheckReport r = check_problem(pr.theory, pr.context, pr.conjecture, rec);
  CHECK(r.verdict == Verdict::Accepted);
  REQUIRE(!r.obligations.empty());
  for (std::size_t i = 0; i < rec.seqs.size(); ++i) CHECK(rec.seqs[i] == i);
  // checking the consequent of F => G happens with F assumed
  bool saw_assumption = false;
  for (const Obligation& o : r.obligations)
    for (const auto& e : o.context.entries)
      if (std::holds_alternative<Assumption>(e)) saw_assumption = true;
  CHECK(saw_assumption);
}

TEST_CASE("a refuted obligation rejects the input") {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("undecidable.p")));
  RefuteAllOracle refuter;
  CheckReport r = check_problem(pr.theory, pr.context, pr.conjecture, refuter);
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(!r.reason.empty());
}

TEST_CASE("membership in a predicate subtype emits PsubIntro") {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("isomorphisms.p")));
  CollectOnlyOracle collect;
  CheckReport r = check_problem(pr.theory, pr.context, pr.conjecture, collect);
  std::size_t intro = 0;
  for (const Obligation& o : r.obligations)
    if (o.provenance.kind == ObligationKind::PsubIntro) ++intro;
  CHECK(intro == 1);
}

TEST_CASE("type_equal on two subtypes demands pointwise predicate agreement") {
  Theory thy;
  thy.decls.push_back(TypeDecl{"a0", {}});
  thy.decls.push_back(ConstDecl{"p", mk_pi("x", mk_base("a0", {}), mk_bool())});
  thy.decls.push_back(ConstDecl{"q", mk_pi("x", mk_base("a0", {}), mk_bool())});
  CollectOnlyOracle collect;
  Checker ck(collect);
  ck.load_theory(thy);
  Type a0 = mk_base("a0", {});
  Type pa = ck.wf_type(mk_psub(a0, mk_const("p")));
  Type pb = ck.wf_type(mk_psub(a0, mk_const("q")));
  ck.type_equal(pa, pb);
  REQUIRE(ck.obligations().size() == 1);
  CHECK(ck.obligations()[0].provenance.kind == ObligationKind::TypeEqPred);
  CHECK(kind(ck.obligations()[0].formula) == TermKind::Forall);
}

TEST_CASE("subtype emits variance obligations, contravariant in domains") {
  Theory thy;
  thy.decls.push_back(TypeDecl{"a0", {}});
  thy.decls.push_back(ConstDecl{"p", mk_pi("x", mk_base("a0", {}), mk_bool())});
  CollectOnlyOracle collect;
  Checker ck(collect);
  ck.load_theory(thy);
  Type a0 = mk_base("a0", {});
  Type sub = ck.wf_type(mk_psub(a0, mk_const("p")));

  // A|p <= A costs nothing
  ck.subtype(sub, a0);
  CHECK(ck.obligations().empty());

  // A <= A|p demands p
  ck.subtype(a0, sub);
  REQUIRE(ck.obligations().size() == 1);
  CHECK(ck.obligations()[0].provenance.kind == ObligationKind::PsubVariance);

  // (A|p -> A) <= (A -> A): domain direction flips, so A <= A|p fires again
  Type f1 = ck.wf_type(mk_pi("x", mk_psub(a0, mk_const("p")), a0));
  Type f2 = ck.wf_type(mk_pi("x", a0, a0));
  ck.subtype(f1, f2);
  REQUIRE(ck.obligations().size() == 2);
  CHECK(ck.obligations()[1].provenance.kind == ObligationKind::PsubVariance);
}

TEST_CASE("structural errors reject without consulting the oracle") {
  CollectOnlyOracle collect;

  // unknown type constructor
  Theory bad1;
  bad1.decls.push_back(ConstDecl{"c", mk_base("ghost", {})});
  CheckReport r1 = check_theory(bad1, collect);
  CHECK(r1.verdict == Verdict::Rejected);
  CHECK(!r1.reason.empty());

  // wrong constructor arity
  Theory bad2;
  bad2.decls.push_back(TypeDecl{"a0", {}});
  bad2.decls.push_back(
      TypeDecl{"t1", {{"i", mk_base("a0", {})}}});
  bad2.decls.push_back(ConstDecl{"c", mk_base("t1", {})});
  CheckReport r2 = check_theory(bad2, collect);
  CHECK(r2.verdict == Verdict::Rejected);

  // conjectures must be boolean
  Theory thy;
  thy.decls.push_back(TypeDecl{"a0", {}});
  thy.decls.push_back(ConstDecl{"c", mk_base("a0", {})});
  CheckReport r3 = check_problem(thy, {}, mk_const("c"), collect);
  CHECK(r3.verdict == Verdict::Rejected);
  CHECK(r1.obligations.empty());
  CHECK(r2.obligations.empty());
  CHECK(r3.obligations.empty());
}

TEST_CASE("checking elaborates equality annotations in the conjecture") {
  Theory thy = category_theory();
  Context ctx;
  ctx.entries.push_back(VarDecl{"U", mk_base("obj", {})});
  Term conj = mk_eq(std::nullopt, mk_var("U"), mk_var("U"));
  kernel::AcceptAllOracle accept;
  CheckReport r = check_problem(thy, ctx, conj, accept);
  REQUIRE(r.conjecture.has_value());
  const auto* e = get_if<EqT>(*r.conjecture);
  REQUIRE(e != nullptr);
  REQUIRE(e->at.has_value());
  CHECK(alpha_eq(*e->at, mk_base("obj", {})));
}

TEST_CASE("each emitted obligation re-checks to a boolean statement") {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("isomorphisms.p")));
  kernel::AcceptAllOracle accept;
  CheckReport r = check_problem(pr.theory, pr.context, pr.conjecture, accept);
  REQUIRE(r.verdict == Verdict::Accepted);
  for (const Obligation& o : r.obligations) {
    kernel::AcceptAllOracle inner;
    Checker ck(inner);
    ck.load_theory(o.theory);
    ck.load_context(o.context);
    CHECK_NOTHROW(ck.check_formula(o.formula, "obligation"));
  }
}

TEST_CASE("dependent implication is order-sensitive") {
  // X = Y => id X = id Y checks (the equation licenses the index swap), but
  // the reversed implication must not be accepted outright: its obligations
  // need the antecedent that is no longer available.
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path("dependent_implication.p")));
  REQUIRE(pr.conjecture.has_value());
  const auto* impl = get_if<ImplT>(*pr.conjecture);
  REQUIRE(impl != nullptr);
  Term reversed = mk_impl(impl->rhs, impl->lhs);
  CollectOnlyOracle collect;
  CheckReport r = check_problem(pr.theory, pr.context, reversed, collect);
  CHECK(r.verdict != Verdict::Accepted);
  bool all_trivial = true;
  for (const Obligation& o : r.obligations) {
    bool has_assumption = false;
    for (const auto& e : o.context.entries)
      if (std::holds_alternative<Assumption>(e)) has_assumption = true;
    if (!has_assumption) all_trivial = false;
  }
  CHECK(!all_trivial); // some obligation lost its licensing assumption
}

TEST_CASE("generated construction-correct problems are accepted without obligations") {
  testgen::Rng rng(77001);
  for (int i = 0; i < 40; ++i) {
    testgen::DepProblem p = testgen::gen_dep_problem(rng);
    CollectOnlyOracle collect;
    Checker ck(collect);
    ck.load_theory(p.theory);
    ck.load_context(p.context);
    InferResult res = ck.infer(p.term);
    CHECK(res.type.valid());
    CHECK(ck.obligations().empty());
  }
}
