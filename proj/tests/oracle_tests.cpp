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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "dholk/oracle.hpp"

using namespace dholk;
using namespace dholk::oracle;

namespace {

// i with constants c,d,e, a function f, a predicate p, and two propositions.
hol::Theory small_theory() {
  hol::Theory thy;
  thy.decls.push_back(hol::TypeDecl{"i"});
  thy.decls.push_back(hol::ConstDecl{"c", hol::mk_base("i")});
  thy.decls.push_back(hol::ConstDecl{"d", hol::mk_base("i")});
  thy.decls.push_back(hol::ConstDecl{"e", hol::mk_base("i")});
  thy.decls.push_back(hol::ConstDecl{"f", hol::mk_arrow(hol::mk_base("i"), hol::mk_base("i"))});
  thy.decls.push_back(hol::ConstDecl{"p", hol::mk_arrow(hol::mk_base("i"), hol::mk_bool())});
  thy.decls.push_back(hol::ConstDecl{"qa", hol::mk_bool()});
  thy.decls.push_back(hol::ConstDecl{"qb", hol::mk_bool()});
  return thy;
}

hol::Problem problem_with(std::vector<hol::Term> axioms, hol::Term conjecture) {
  hol::Problem p;
  p.theory = small_theory();
  int n = 0;
  for (hol::Term& ax : axioms)
    p.theory.decls.push_back(hol::AxiomDecl{"ax" + std::to_string(n++), std::move(ax)});
  p.conjecture = std::move(conjecture);
  return p;
}

hol::Term pc() { return hol::mk_app(hol::mk_const("p"), hol::mk_const("c")); }

} // namespace

TEST_CASE("builtin proves direct fact lookups") {
  BuiltinBounds bounds;

  // axiom lookup modulo alpha
  Proof proof;
  OracleVerdict v = builtin_decide(problem_with({pc()}, pc()), bounds, &proof);
  CHECK(v.status == Status::Proved);
  CHECK(v.by == "builtin");

  // context assumption lookup
  hol::Problem p2 = problem_with({}, pc());
  p2.context.entries.push_back(hol::Assumption{"h", pc()});
  CHECK(builtin_decide(p2, bounds).status == Status::Proved);

  // reflexivity
  hol::Term refl = hol::mk_eq(hol::mk_base("i"), hol::mk_const("c"), hol::mk_const("c"));
  CHECK(builtin_decide(problem_with({}, refl), bounds).status == Status::Proved);
}

TEST_CASE("builtin normalizes before matching") {
  BuiltinBounds bounds;
  // (\x. p x) c reduces to the axiom p c
  hol::Term goal = hol::mk_app(
      hol::mk_lam("x", hol::mk_base("i"),
                  hol::mk_app(hol::mk_const("p"), hol::mk_var("x"))),
      hol::mk_const("c"));
  CHECK(builtin_decide(problem_with({pc()}, goal), bounds).status == Status::Proved);
}

TEST_CASE("builtin chains implications and splits conjunctions") {
  BuiltinBounds bounds;
  hol::Term qa = hol::mk_const("qa");
  hol::Term qb = hol::mk_const("qb");

  CHECK(builtin_decide(problem_with({hol::mk_impl(qa, qb), qa}, qb), bounds).status ==
        Status::Proved);
  CHECK(builtin_decide(problem_with({hol::mk_and(qa, qb)}, qb), bounds).status ==
        Status::Proved);
  // two-step chain
  hol::Term pd = hol::mk_app(hol::mk_const("p"), hol::mk_const("d"));
  CHECK(builtin_decide(problem_with({hol::mk_impl(qa, qb), hol::mk_impl(qb, pd), qa}, pd),
                       bounds).status == Status::Proved);
}

TEST_CASE("builtin instantiates universal facts with ground terms") {
  BuiltinBounds bounds;
  hol::Term all = hol::mk_forall("x", hol::mk_base("i"),
                                 hol::mk_app(hol::mk_const("p"), hol::mk_var("x")));
  CHECK(builtin_decide(problem_with({all}, pc()), bounds).status == Status::Proved);

  // instantiation digs the witness out of the goal
  hol::Term goal = hol::mk_app(hol::mk_const("p"),
                               hol::mk_app(hol::mk_const("f"), hol::mk_const("d")));
  CHECK(builtin_decide(problem_with({all}, goal), bounds).status == Status::Proved);
}

TEST_CASE("builtin applies introduction rules") {
  BuiltinBounds bounds;
  hol::Term qa = hol::mk_const("qa");
  hol::Term qb = hol::mk_const("qb");

  // implication introduction
  CHECK(builtin_decide(problem_with({}, hol::mk_impl(pc(), pc())), bounds).status ==
        Status::Proved);
  // conjunction introduction
  CHECK(builtin_decide(problem_with({qa, qb}, hol::mk_and(qa, qb)), bounds).status ==
        Status::Proved);
  // disjunction, both sides
  CHECK(builtin_decide(problem_with({qa}, hol::mk_or(qa, qb)), bounds).status ==
        Status::Proved);
  CHECK(builtin_decide(problem_with({qa}, hol::mk_or(qb, qa)), bounds).status ==
        Status::Proved);
  // universal introduction over an eigenvariable
  hol::Term all = hol::mk_forall("x", hol::mk_base("i"),
                                 hol::mk_app(hol::mk_const("p"), hol::mk_var("x")));
  CHECK(builtin_decide(problem_with({all},
                                    hol::mk_forall("y", hol::mk_base("i"),
                                                   hol::mk_app(hol::mk_const("p"),
                                                               hol::mk_var("y")))),
                       bounds).status == Status::Proved);
  // existential introduction with a ground witness
  CHECK(builtin_decide(problem_with({pc()},
                                    hol::mk_exists("x", hol::mk_base("i"),
                                                   hol::mk_app(hol::mk_const("p"),
                                                               hol::mk_var("x")))),
                       bounds).status == Status::Proved);
  // truth
  CHECK(builtin_decide(problem_with({}, hol::mk_true()), bounds).status == Status::Proved);
}

TEST_CASE("builtin reasons about ground equalities") {
  BuiltinBounds bounds;
  auto eq = [](const char* l, const char* r) {
    return hol::mk_eq(hol::mk_base("i"), hol::mk_const(l), hol::mk_const(r));
  };
  // symmetry and transitivity through congruence closure
  CHECK(builtin_decide(problem_with({eq("c", "d")}, eq("d", "c")), bounds).status ==
        Status::Proved);
  CHECK(builtin_decide(problem_with({eq("c", "d"), eq("d", "e")}, eq("c", "e")),
                       bounds).status == Status::Proved);
  // congruence under a function symbol
  hol::Term fc = hol::mk_app(hol::mk_const("f"), hol::mk_const("c"));
  hol::Term fd = hol::mk_app(hol::mk_const("f"), hol::mk_const("d"));
  CHECK(builtin_decide(problem_with({eq("c", "d")},
                                    hol::mk_eq(hol::mk_base("i"), fc, fd)),
                       bounds).status == Status::Proved);
  // equal terms satisfy the same predicates
  hol::Term pd = hol::mk_app(hol::mk_const("p"), hol::mk_const("d"));
  CHECK(builtin_decide(problem_with({pc(), eq("c", "d")}, pd), bounds).status ==
        Status::Proved);
}

TEST_CASE("builtin is sound: unprovable goals come back Unknown, never Refuted") {
  BuiltinBounds bounds;
  CHECK(builtin_decide(problem_with({}, pc()), bounds).status == Status::Unknown);
  CHECK(builtin_decide(problem_with({}, hol::mk_false()), bounds).status == Status::Unknown);
  hol::Term qa = hol::mk_const("qa");
  CHECK(builtin_decide(problem_with({hol::mk_impl(qa, pc())}, pc()), bounds).status ==
        Status::Unknown);
}

TEST_CASE("a proved verdict ships a trace that replays independently") {
  BuiltinBounds bounds;
  hol::Term all = hol::mk_forall("x", hol::mk_base("i"),
                                 hol::mk_app(hol::mk_const("p"), hol::mk_var("x")));
  hol::Problem prob = problem_with({all}, pc());
  Proof proof;
  OracleVerdict v = builtin_decide(prob, bounds, &proof);
  REQUIRE(v.status == Status::Proved);
  std::string why;
  CHECK(replay(prob, proof, &why));
  CHECK(why.empty());
}

TEST_CASE("tampered traces fail replay") {
  BuiltinBounds bounds;
  hol::Problem prob = problem_with({pc()}, pc());
  Proof proof;
  REQUIRE(builtin_decide(prob, bounds, &proof).status == Status::Proved);

  // find a leaf and corrupt its last conclusion
  ProofNode* leaf = &proof.root;
  while (leaf->tag != ProofNode::Tag::Leaf && !leaf->children.empty())
    leaf = &leaf->children.front();
  REQUIRE(!leaf->steps.empty());
  leaf->steps.back().conclusion = hol::mk_false();
  std::string why;
  CHECK(!replay(prob, proof, &why));
  CHECK(!why.empty());
}

TEST_CASE("hand-written traces replay by the step rules") {
  hol::Problem prob = problem_with({pc()}, pc());
  Proof proof;
  proof.root.tag = ProofNode::Tag::Leaf;
  Step s;
  s.rule = "axiom";
  s.name = "ax0";
  s.conclusion = pc();
  proof.root.steps.push_back(s);
  CHECK(replay(prob, proof));

  // claiming a different conclusion for the axiom must fail
  proof.root.steps[0].conclusion = hol::mk_const("qa");
  std::string why;
  CHECK(!replay(prob, proof, &why));
  CHECK(!why.empty());
}

TEST_CASE("adding irrelevant facts never loses a proof") {
  BuiltinBounds bounds;
  hol::Term qa = hol::mk_const("qa");
  hol::Term qb = hol::mk_const("qb");
  std::vector<hol::Term> axioms{hol::mk_impl(qa, qb), qa};
  hol::Problem base = problem_with(axioms, qb);
  REQUIRE(builtin_decide(base, bounds).status == Status::Proved);

  // pile on unrelated universally quantified noise
  for (int i = 0; i < 20; ++i) {
    hol::Term noise = hol::mk_forall(
        "x", hol::mk_base("i"),
        hol::mk_impl(hol::mk_app(hol::mk_const("p"), hol::mk_var("x")),
                     hol::mk_app(hol::mk_const("p"),
                                 hol::mk_app(hol::mk_const("f"), hol::mk_var("x")))));
    axioms.push_back(noise);
  }
  hol::Problem noisy = problem_with(axioms, qb);
  CHECK(builtin_decide(noisy, bounds).status == Status::Proved);
}

TEST_CASE("external oracle maps SZS statuses") {
  hol::Problem prob = problem_with({}, pc());
  double t = 5.0;

  OracleVerdict thm = run_external(prob, "fake", "echo 'SZS status Theorem'", t);
  CHECK(thm.status == Status::Proved);
  CHECK(thm.by == "fake");

  CHECK(run_external(prob, "fake", "echo 'SZS status Unsatisfiable'", t).status ==
        Status::Proved);
  CHECK(run_external(prob, "fake", "echo 'SZS status CounterSatisfiable'", t).status ==
        Status::Refuted);
  CHECK(run_external(prob, "fake", "echo 'SZS status Satisfiable'", t).status ==
        Status::Refuted);

  OracleVerdict to = run_external(prob, "fake", "echo 'SZS status Timeout'", t);
  CHECK(to.status == Status::Unknown);
  CHECK(to.reason == UnknownReason::Timeout);

  OracleVerdict gu = run_external(prob, "fake", "echo 'SZS status GaveUp'", t);
  CHECK(gu.status == Status::Unknown);
  CHECK(gu.reason == UnknownReason::GaveUp);

  OracleVerdict np = run_external(prob, "fake", "echo 'no status here'", t);
  CHECK(np.status == Status::Unknown);
  CHECK(np.reason == UnknownReason::ParseFailure);
}

TEST_CASE("external oracle substitutes the problem file and timeout") {
  hol::Problem prob = problem_with({}, pc());
  // proved only if the serialized problem file exists and is non-empty
  OracleVerdict v =
      run_external(prob, "fake", "test -s {file} && echo 'SZS status Theorem'", 5.0);
  CHECK(v.status == Status::Proved);
  // proved only if a timeout value was substituted
  OracleVerdict w = run_external(
      prob, "fake", "test -n '{timeout}' && echo 'SZS status Theorem'", 5.0);
  CHECK(w.status == Status::Proved);
}

TEST_CASE("external oracle failures are contained") {
  hol::Problem prob = problem_with({}, pc());
  OracleVerdict missing =
      run_external(prob, "fake", "definitely_not_an_installed_prover_xyz {file}", 5.0);
  CHECK(missing.status == Status::Unknown);

  // non-zero exit without output
  OracleVerdict failed = run_external(prob, "fake", "false", 5.0);
  CHECK(failed.status == Status::Unknown);
}

TEST_CASE("external oracle enforces the wall-clock deadline") {
  hol::Problem prob = problem_with({}, pc());
  auto start = std::chrono::steady_clock::now();
  OracleVerdict v = run_external(prob, "fake", "sleep 30", 0.2);
  double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(v.status == Status::Unknown);
  CHECK(took < 10.0); // killed long before the sleep would finish
}

TEST_CASE("keep_temp retains the serialized problem for diagnostics") {
  namespace fs = std::filesystem;
  hol::Problem prob = problem_with({}, pc());
  fs::path dir = fs::temp_directory_path() / "dholk_keep_temp_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  run_external(prob, "fake", "echo 'SZS status Theorem'", 5.0, /*keep_temp=*/true,
               dir.string());
  bool found = false;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    found = true;
  }
  CHECK(found);

  fs::remove_all(dir);
  fs::create_directories(dir);
  run_external(prob, "fake", "echo 'SZS status Theorem'", 5.0, /*keep_temp=*/false,
               dir.string());
  bool empty = true;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    empty = false;
  }
  CHECK(empty);
  fs::remove_all(dir);
}

TEST_CASE("the chain stops at the first decisive verdict") {
  hol::Problem unprovable = problem_with({}, pc());
  hol::Problem provable = problem_with({pc()}, pc());

  OracleConfig cfg;
  cfg.chain.push_back(OracleSpec{OracleSpec::Kind::Builtin, "builtin", {}, ""});
  cfg.chain.push_back(OracleSpec{OracleSpec::Kind::External, "fake",
                                 {}, "echo 'SZS status Theorem'"});
  cfg.timeout_seconds = 5.0;

  // builtin settles it first; the fake never runs
  OracleVerdict v1 = prove(provable, cfg);
  CHECK(v1.status == Status::Proved);
  CHECK(v1.by == "builtin");

  // builtin gives up, fake answers
  OracleVerdict v2 = prove(unprovable, cfg);
  CHECK(v2.status == Status::Proved);
  CHECK(v2.by == "fake");

  // a refutation first in the chain wins even for provable goals
  OracleConfig refuting;
  refuting.chain.push_back(OracleSpec{OracleSpec::Kind::External, "saturator",
                                      {}, "echo 'SZS status CounterSatisfiable'"});
  refuting.chain.push_back(OracleSpec{OracleSpec::Kind::Builtin, "builtin", {}, ""});
  refuting.timeout_seconds = 5.0;
  OracleVerdict v3 = prove(provable, refuting);
  CHECK(v3.status == Status::Refuted);
  CHECK(v3.by == "saturator");

  // everyone unknown: the verdict is the last oracle's Unknown
  OracleConfig hopeless;
  hopeless.chain.push_back(OracleSpec{OracleSpec::Kind::Builtin, "builtin", {}, ""});
  hopeless.chain.push_back(OracleSpec{OracleSpec::Kind::External, "mute", {}, "true"});
  hopeless.timeout_seconds = 5.0;
  OracleVerdict v4 = prove(unprovable, hopeless);
  CHECK(v4.status == Status::Unknown);
}

TEST_CASE("default configuration honors the external-command environment variable") {
  const char* saved = std::getenv(kExternalCommandEnv);
  std::string saved_value = saved ? saved : "";

  unsetenv(kExternalCommandEnv);
  OracleConfig plain = default_config();
  REQUIRE(plain.chain.size() == 1);
  CHECK(plain.chain[0].kind == OracleSpec::Kind::Builtin);

  setenv(kExternalCommandEnv, "fake_prover {file}", 1);
  OracleConfig with_env = default_config();
  REQUIRE(with_env.chain.size() == 2);
  CHECK(with_env.chain[0].kind == OracleSpec::Kind::Builtin);
  CHECK(with_env.chain[1].kind == OracleSpec::Kind::External);
  CHECK(with_env.chain[1].command_template == "fake_prover {file}");

  if (saved)
    setenv(kExternalCommandEnv, saved_value.c_str(), 1);
  else
    unsetenv(kExternalCommandEnv);
}

TEST_CASE("verdict strings") {
  CHECK(std::string(to_string(Status::Proved)) == "proved");
  CHECK(std::string(to_string(Status::Refuted)) == "refuted");
  CHECK(std::string(to_string(Status::Unknown)) == "unknown");
  CHECK(!std::string(to_string(UnknownReason::Timeout)).empty());
  CHECK(!std::string(to_string(UnknownReason::GaveUp)).empty());
}
