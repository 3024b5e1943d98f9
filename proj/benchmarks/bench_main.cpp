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

// Microbenchmarks for the hot paths: parsing, checking, translation,
// emission, builtin discharge, and the two normalization procedures.

#include <benchmark/benchmark.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "dholk/hol.hpp"
#include "dholk/kernel.hpp"
#include "dholk/oracle.hpp"
#include "dholk/syntax.hpp"
#include "dholk/translate.hpp"
#include "dholk/tptp.hpp"

#ifndef DHOLK_CORPUS_DIR
#define DHOLK_CORPUS_DIR "tests/corpus"
#endif

namespace {

using namespace dholk;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string& category_text() {
  static const std::string text =
      slurp(std::string(DHOLK_CORPUS_DIR) + "/category_theory.p");
  return text;
}

const std::string& dependent_text() {
  static const std::string text =
      slurp(std::string(DHOLK_CORPUS_DIR) + "/dependent_implication.p");
  return text;
}

void bm_parse_category(benchmark::State& state) {
  const std::string& text = category_text();
  for (auto _ : state) {
    tptp::ParseResult r = tptp::parse_dhol(text);
    benchmark::DoNotOptimize(r.theory.decls.size());
  }
}
BENCHMARK(bm_parse_category);

void bm_check_category_builtin(benchmark::State& state) {
  tptp::ParseResult pr = tptp::parse_dhol(category_text());
  for (auto _ : state) {
    kernel::AcceptAllOracle accept;
    kernel::CheckReport rep =
        kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(bm_check_category_builtin);

void bm_translate_category(benchmark::State& state) {
  tptp::ParseResult pr = tptp::parse_dhol(category_text());
  kernel::AcceptAllOracle accept;
  kernel::CheckReport rep =
      kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
  for (auto _ : state) {
    translate::TranslationOutput out = translate::translate_theory(rep.theory);
    benchmark::DoNotOptimize(out.theory.decls.size());
  }
}
BENCHMARK(bm_translate_category);

void bm_emit_th0_category(benchmark::State& state) {
  tptp::ParseResult pr = tptp::parse_dhol(category_text());
  kernel::AcceptAllOracle accept;
  kernel::CheckReport rep =
      kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
  translate::TranslationOutput out = translate::translate_theory(rep.theory);
  for (auto _ : state) {
    std::string text = tptp::emit_th0(out, std::nullopt);
    benchmark::DoNotOptimize(text.size());
  }
}
BENCHMARK(bm_emit_th0_category);

void bm_builtin_discharge_dependent(benchmark::State& state) {
  tptp::ParseResult pr = tptp::parse_dhol(dependent_text());
  kernel::CollectOnlyOracle collect;
  kernel::CheckReport rep =
      kernel::check_problem(pr.theory, pr.context, pr.conjecture, collect);
  oracle::BuiltinBounds bounds;
  for (auto _ : state) {
    for (const kernel::Obligation& o : rep.obligations) {
      hol::Problem p = translate::translate_obligation(o);
      oracle::OracleVerdict v = oracle::builtin_decide(p, bounds, nullptr);
      benchmark::DoNotOptimize(v.status);
    }
  }
}
BENCHMARK(bm_builtin_discharge_dependent);

void bm_normalize_psub_deep(benchmark::State& state) {
  using namespace dhol;
  // Pi x1:a. ... (((a|p)|p)|p) ... nested under several function layers.
  Type a = mk_base("a", {});
  Term p = mk_lam("v", a, mk_true());
  Type leaf = mk_psub(mk_psub(mk_psub(a, p), p), p);
  Type ty = leaf;
  for (int i = 0; i < 6; ++i)
    ty = mk_pi("x" + std::to_string(i), a, ty);
  for (auto _ : state) {
    Type n = kernel::normalize_psub(ty);
    benchmark::DoNotOptimize(n.raw());
  }
}
BENCHMARK(bm_normalize_psub_deep);

void bm_beta_eta_normalize(benchmark::State& state) {
  using namespace hol;
  Type i = mk_base("i");
  Term id = mk_lam("x", i, mk_var("x"));
  Term t = mk_const("c");
  for (int k = 0; k < 10; ++k)
    t = mk_app(id, t);
  Term wrapped = mk_lam("y", i, mk_app(mk_const("f"), mk_var("y")));
  Term body = mk_app(wrapped, t);
  for (auto _ : state) {
    Term n = beta_eta_normalize(body);
    benchmark::DoNotOptimize(n.valid());
  }
}
BENCHMARK(bm_beta_eta_normalize);

} // namespace

BENCHMARK_MAIN();
