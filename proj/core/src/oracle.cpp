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

#include "dholk/oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <utility>

#include "dholk/tptp.hpp"

namespace dholk::oracle {

const char* to_string(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Refuted: return "refuted";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::Timeout: return "timeout";
    case UnknownReason::GaveUp: return "gave-up";
    case UnknownReason::ParseFailure: return "parse-failure";
    case UnknownReason::NotAttempted: return "not-attempted";
  }
  return "gave-up";
}

OracleConfig default_config() {
  OracleConfig cfg;
  OracleSpec builtin;
  cfg.chain.push_back(builtin);
  if (const char* cmd = std::getenv(kExternalCommandEnv); cmd && *cmd) {
    OracleSpec ext;
    ext.kind = OracleSpec::Kind::External;
    ext.name = "external";
    ext.command_template = cmd;
    cfg.chain.push_back(ext);
  }
  return cfg;
}

namespace {

using hol::Term;
using hol::Type;

constexpr std::size_t kNoStep = static_cast<std::size_t>(-1);

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Closed-subterm harvesting (pre-order, first occurrence wins).
// "Closed" means: mentions no locally bound variable; context variables and
// eigenvariables are fair game.
// ---------------------------------------------------------------------------

void harvest_rec(const Term& t, std::set<std::string>& bound, std::vector<Term>& out,
                 std::set<std::string>& seen) {
  bool closed = true;
  if (!bound.empty()) {
    auto fvs = hol::free_vars(t);
    for (const auto& b : bound) {
      if (fvs.count(b)) { closed = false; break; }
    }
  }
  if (closed && seen.insert(hol::canon_key(t)).second) out.push_back(t);

  auto under = [&](const std::string& v, const Term& body) {
    bool had = bound.count(v) > 0;
    bound.insert(v);
    harvest_rec(body, bound, out, seen);
    if (!had) bound.erase(v);
  };
  switch (hol::kind(t)) {
    case hol::TermKind::Lam: {
      const auto* n = hol::get_if<hol::LamT>(t);
      under(n->var, n->body);
      break;
    }
    case hol::TermKind::Forall: {
      const auto* n = hol::get_if<hol::ForallT>(t);
      under(n->var, n->body);
      break;
    }
    case hol::TermKind::Exists: {
      const auto* n = hol::get_if<hol::ExistsT>(t);
      under(n->var, n->body);
      break;
    }
    case hol::TermKind::App: {
      const auto* n = hol::get_if<hol::AppT>(t);
      harvest_rec(n->fn, bound, out, seen);
      harvest_rec(n->arg, bound, out, seen);
      break;
    }
    case hol::TermKind::Eq: {
      const auto* n = hol::get_if<hol::EqT>(t);
      harvest_rec(n->lhs, bound, out, seen);
      harvest_rec(n->rhs, bound, out, seen);
      break;
    }
    case hol::TermKind::Impl: {
      const auto* n = hol::get_if<hol::ImplT>(t);
      harvest_rec(n->lhs, bound, out, seen);
      harvest_rec(n->rhs, bound, out, seen);
      break;
    }
    case hol::TermKind::And: {
      const auto* n = hol::get_if<hol::AndT>(t);
      harvest_rec(n->lhs, bound, out, seen);
      harvest_rec(n->rhs, bound, out, seen);
      break;
    }
    case hol::TermKind::Or: {
      const auto* n = hol::get_if<hol::OrT>(t);
      harvest_rec(n->lhs, bound, out, seen);
      harvest_rec(n->rhs, bound, out, seen);
      break;
    }
    case hol::TermKind::Not: {
      const auto* n = hol::get_if<hol::NotT>(t);
      harvest_rec(n->arg, bound, out, seen);
      break;
    }
    default:
      break;
  }
}

std::vector<Term> harvest_closed(const Term& t, std::vector<Term>& out,
                                 std::set<std::string>& seen) {
  std::set<std::string> bound;
  harvest_rec(t, bound, out, seen);
  return out;
}

// Memoized simple-type lookup; subterms that fail to type are skipped.
class TypeCache {
 public:
  TypeCache(const hol::Theory& thy, const hol::Context& ctx) : thy_(thy), ctx_(ctx) {}

  const std::optional<Type>& get(const Term& t) {
    std::string k = hol::canon_key(t);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    std::optional<Type> ty;
    try {
      ty = hol::infer(thy_, ctx_, t);
    } catch (const hol::TypeError&) {
    }
    return memo_.emplace(std::move(k), std::move(ty)).first->second;
  }

 private:
  const hol::Theory& thy_;
  const hol::Context& ctx_;
  std::map<std::string, std::optional<Type>> memo_;
};

// ---------------------------------------------------------------------------
// Trace assembly helpers: one shared step list per leaf, with memoization so
// repeated congruence rebuilds do not duplicate bridge steps.
// ---------------------------------------------------------------------------

struct StepStore {
  std::vector<Step> steps;
  std::map<std::string, std::size_t> memo;

  std::size_t push(Step s) {
    steps.push_back(std::move(s));
    return steps.size() - 1;
  }
  std::size_t memoized(const std::string& key, Step s) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::size_t idx = push(std::move(s));
    memo.emplace(key, idx);
    return idx;
  }
  std::size_t eq_true_intro(std::size_t fact_step, const Term& f) {
    return memoized("ett:" + hol::canon_key(f),
                    Step{"eq_true_intro", {fact_step},
                         hol::mk_eq(hol::mk_bool(), f, hol::mk_true()), "", std::nullopt});
  }
  std::size_t neg_eq_false(std::size_t fact_step, const Term& f) {
    return memoized("nef:" + hol::canon_key(f),
                    Step{"neg_eq_false", {fact_step},
                         hol::mk_eq(hol::mk_bool(), f, hol::mk_false()), "", std::nullopt});
  }
};

const Term& step_lhs(const Step& s) { return hol::get_if<hol::EqT>(s.conclusion)->lhs; }
const Term& step_rhs(const Step& s) { return hol::get_if<hol::EqT>(s.conclusion)->rhs; }
const std::optional<Type>& step_at(const Step& s) {
  return hol::get_if<hol::EqT>(s.conclusion)->at;
}

// ---------------------------------------------------------------------------
// Ground congruence closure with explanation. Nodes are closed subterms of
// the facts and the goal; every fact is additionally equated to `true` so
// that atom-level reasoning and contradiction detection fall out of the same
// machinery. Explanations are emitted as replayable equational steps.
// ---------------------------------------------------------------------------

class Congruence {
 public:
  Congruence(TypeCache& types, StepStore& store) : types_(types), store_(store) {
    true_ = add_node(hol::mk_true());
    false_ = add_node(hol::mk_false());
  }

  void add_term(const Term& t) {
    std::vector<Term> subs;
    std::set<std::string> bound;
    harvest_rec(t, bound, subs, harvested_);
    for (const auto& s : subs) add_node(s);
  }

  void add_fact(const Term& f, std::size_t fact_step) {
    add_term(f);
    int nf = node_id(f);
    if (nf < 0) return;
    if (const auto* e = hol::get_if<hol::EqT>(f)) {
      int a = node_id(e->lhs), b = node_id(e->rhs);
      if (a >= 0 && b >= 0) link(a, b, fact_step, false);
    }
    if (const auto* n = hol::get_if<hol::NotT>(f)) {
      int a = node_id(n->arg);
      if (a >= 0) link(a, false_, store_.neg_eq_false(fact_step, n->arg), false);
    }
    link(nf, true_, store_.eq_true_intro(fact_step, f), false);
  }

  // Congruence fixpoint over application nodes.
  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<int, int>, int> sig;
      for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        if (nodes_[i].fn < 0) continue;
        std::pair<int, int> key{find(nodes_[i].fn), find(nodes_[i].arg)};
        auto [it, fresh] = sig.emplace(key, i);
        if (!fresh && find(i) != find(it->second)) {
          link(it->second, i, kNoStep, true);
          changed = true;
        }
      }
    }
  }

  int node_id(const Term& t) const {
    auto it = ids_.find(hol::canon_key(t));
    return it == ids_.end() ? -1 : it->second;
  }
  int true_node() const { return true_; }
  int false_node() const { return false_; }

  bool same(int a, int b) { return a >= 0 && b >= 0 && find(a) == find(b); }

  // Appends steps concluding term(a) = term(b); returns the final step index.
  std::size_t explain(int a, int b) { return explain_limited(a, b, edges_.size()); }

 private:
  struct Node {
    Term term;
    int fn = -1, arg = -1; // application structure, when both parts are nodes
  };
  struct Edge {
    int a, b;
    std::size_t step; // kNoStep for congruence edges
    bool cong;
  };

  int add_node(const Term& t) {
    std::string k = hol::canon_key(t);
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{t});
    ids_.emplace(std::move(k), id);
    uf_.push_back(id);
    rank_.push_back(1);
    adj_.emplace_back();
    if (const auto* a = hol::get_if<hol::AppT>(t)) {
      // A closed application has closed parts.
      int fn = add_node(a->fn);
      int arg = add_node(a->arg);
      nodes_[id].fn = fn;
      nodes_[id].arg = arg;
    }
    return id;
  }

  int find(int a) {
    while (uf_[a] != a) {
      uf_[a] = uf_[uf_[a]];
      a = uf_[a];
    }
    return a;
  }

  void link(int a, int b, std::size_t step, bool cong) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    uf_[rb] = ra;
    rank_[ra] += rank_[rb];
    int eid = static_cast<int>(edges_.size());
    edges_.push_back(Edge{a, b, step, cong});
    adj_[a].push_back(eid);
    adj_[b].push_back(eid);
  }

  Type type_of(int n) {
    const auto& ty = types_.get(nodes_[n].term);
    if (!ty) throw hol::TypeError("untyped node in congruence closure");
    return *ty;
  }

  // One step for one edge, oriented from `from` to the other endpoint.
  std::size_t edge_step(const Edge& e, int from, std::size_t ts_limit) {
    std::size_t base;
    if (e.cong) {
      int af = nodes_[e.a].fn, aa = nodes_[e.a].arg;
      int bf = nodes_[e.b].fn, ba = nodes_[e.b].arg;
      std::size_t pf = explain_limited(af, bf, ts_limit);
      std::size_t pa = explain_limited(aa, ba, ts_limit);
      const auto* arrow = hol::get_if<hol::ArrowTy>(*step_at(store_.steps[pf]));
      if (!arrow) throw hol::TypeError("congruence over a non-function node");
      Term l = hol::mk_app(step_lhs(store_.steps[pf]), step_lhs(store_.steps[pa]));
      Term r = hol::mk_app(step_rhs(store_.steps[pf]), step_rhs(store_.steps[pa]));
      base = store_.push(Step{"cong", {pf, pa}, hol::mk_eq(arrow->to, l, r), "", std::nullopt});
    } else {
      base = e.step;
    }
    if (from == e.a) return base;
    const Step& s = store_.steps[base];
    return store_.push(
        Step{"sym", {base}, hol::mk_eq(step_at(s), step_rhs(s), step_lhs(s)), "", std::nullopt});
  }

  std::size_t explain_limited(int a, int b, std::size_t ts_limit) {
    if (a == b || hol::alpha_eq(nodes_[a].term, nodes_[b].term)) {
      Term t = nodes_[a].term;
      return store_.push(Step{"refl", {}, hol::mk_eq(type_of(a), t, t), "", std::nullopt});
    }
    // Shortest path over edges older than the edge being explained.
    std::vector<int> prev_edge(nodes_.size(), -1);
    std::vector<int> prev_node(nodes_.size(), -1);
    std::vector<char> seen(nodes_.size(), 0);
    std::queue<int> q;
    q.push(a);
    seen[a] = 1;
    while (!q.empty() && !seen[b]) {
      int u = q.front();
      q.pop();
      for (int eid : adj_[u]) {
        if (static_cast<std::size_t>(eid) >= ts_limit) continue;
        const Edge& e = edges_[eid];
        int v = (e.a == u) ? e.b : e.a;
        if (seen[v]) continue;
        seen[v] = 1;
        prev_edge[v] = eid;
        prev_node[v] = u;
        q.push(v);
      }
    }
    if (!seen[b]) throw hol::TypeError("no explanation path in congruence closure");
    std::vector<std::pair<int, int>> path; // (edge, from-node)
    for (int v = b; v != a; v = prev_node[v]) path.push_back({prev_edge[v], prev_node[v]});
    std::reverse(path.begin(), path.end());
    std::size_t acc = kNoStep;
    for (auto [eid, from] : path) {
      std::size_t s = edge_step(edges_[eid], from, static_cast<std::size_t>(eid));
      if (acc == kNoStep) {
        acc = s;
      } else {
        const Step& s0 = store_.steps[acc];
        const Step& s1 = store_.steps[s];
        acc = store_.push(Step{"trans",
                               {acc, s},
                               hol::mk_eq(step_at(s0), step_lhs(s0), step_rhs(s1)),
                               "",
                               std::nullopt});
      }
    }
    return acc;
  }

  TypeCache& types_;
  StepStore& store_;
  std::vector<Node> nodes_;
  std::map<std::string, int> ids_;
  std::vector<int> uf_, rank_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::set<std::string> harvested_;
  int true_, false_;
};

// ---------------------------------------------------------------------------
// Goal-directed bounded search.
// ---------------------------------------------------------------------------

struct SearchCtx {
  const hol::Theory& thy;
  hol::Context ctx; // problem context, extended with eigenvariables
  std::vector<std::pair<std::string, Term>> axioms;      // elaborated
  std::vector<std::pair<std::string, Term>> assumptions; // elaborated
  std::vector<Term> hyps;
  BuiltinBounds bounds;
  int ext_depth = 0;
  std::set<std::string> taken; // names unavailable for eigenvariables
};

// Hard caps that keep pathological saturations from running away; generous
// enough that the configured bounds, not these, decide ordinary problems.
constexpr std::size_t kMaxFacts = 20000;
constexpr int kMaxExistsWitnesses = 8;
constexpr int kMaxPropExtDepth = 2;

class LeafProver {
 public:
  LeafProver(SearchCtx& sc, Term goal)
      : sc_(sc), goal_(std::move(goal)), types_(sc.thy, sc.ctx) {}

  std::optional<std::vector<Step>> run() {
    seed_facts();
    build_pool();
    for (int round = 0;; ++round) {
      Congruence cc(types_, store_);
      for (const auto& f : facts_) cc.add_fact(f.formula, f.step);
      cc.add_term(goal_);
      cc.close();
      if (attempt(cc)) return std::move(store_.steps);
      if (round >= sc_.bounds.depth) break;
      if (!derive(cc)) break; // fixpoint reached: nothing new can appear
    }
    return std::nullopt;
  }

 private:
  struct Fact {
    Term formula;
    std::size_t step;
  };

  void seed_raw(const Term& formula, Step origin) {
    std::size_t s = store_.push(std::move(origin));
    Term nf = hol::beta_eta_normalize(formula);
    if (!hol::alpha_eq(nf, formula))
      s = store_.push(Step{"normalize", {s}, nf, "", std::nullopt});
    add_fact(nf, s);
  }

  void seed_facts() {
    for (const auto& [name, f] : sc_.axioms)
      seed_raw(f, Step{"axiom", {}, f, name, std::nullopt});
    for (const auto& [name, f] : sc_.assumptions)
      seed_raw(f, Step{"assume", {}, f, name, std::nullopt});
    for (std::size_t i = 0; i < sc_.hyps.size(); ++i)
      seed_raw(sc_.hyps[i],
               Step{"hyp", {}, sc_.hyps[i], std::to_string(i), std::nullopt});
  }

  void build_pool() {
    std::vector<Term> subs;
    std::set<std::string> seen;
    harvest_closed(goal_, subs, seen);
    for (const auto& h : sc_.hyps) harvest_closed(h, subs, seen);
    for (const auto& t : subs) {
      const auto& ty = types_.get(t);
      if (ty) pool_.push_back({t, *ty});
    }
  }

  bool add_fact(const Term& f, std::size_t step) {
    if (facts_.size() >= kMaxFacts) return false;
    std::string k = hol::canon_key(f);
    if (!fact_by_key_.emplace(k, step).second) return false;
    facts_.push_back(Fact{f, step});
    return true;
  }

  // Proves F outright when it is a known fact or congruence-equal to true.
  std::optional<std::size_t> derive_formula(Congruence& cc, const Term& f) {
    auto it = fact_by_key_.find(hol::canon_key(f));
    if (it != fact_by_key_.end()) return it->second;
    int n = cc.node_id(f);
    if (n >= 0 && cc.same(n, cc.true_node())) {
      std::size_t e = cc.explain(n, cc.true_node());
      return store_.push(
          Step{"eq_true_elim", {e}, step_lhs(store_.steps[e]), "", std::nullopt});
    }
    return std::nullopt;
  }

  bool attempt(Congruence& cc) {
    // Direct membership.
    if (derive_formula(cc, goal_)) return true;
    if (hol::kind(goal_) == hol::TermKind::True) {
      store_.push(Step{"true_intro", {}, hol::mk_true(), "", std::nullopt});
      return true;
    }
    if (const auto* e = hol::get_if<hol::EqT>(goal_)) {
      if (hol::alpha_eq(e->lhs, e->rhs)) {
        store_.push(Step{"refl", {}, goal_, "", std::nullopt});
        return true;
      }
      int a = cc.node_id(e->lhs), b = cc.node_id(e->rhs);
      if (cc.same(a, b)) {
        cc.explain(a, b);
        return true;
      }
    }
    // Everything is provable from contradictory facts.
    if (cc.same(cc.true_node(), cc.false_node())) {
      std::size_t e = cc.explain(cc.true_node(), cc.false_node());
      std::size_t t = store_.push(Step{"true_intro", {}, hol::mk_true(), "", std::nullopt});
      store_.push(Step{"absurd", {t, e}, goal_, "", std::nullopt});
      return true;
    }
    return false;
  }

  bool instantiate(const Fact& fact) {
    // Maximal leading universal prefix.
    std::vector<std::pair<std::string, Type>> binders;
    Term body = fact.formula;
    while (const auto* fa = hol::get_if<hol::ForallT>(body)) {
      binders.push_back({fa->var, fa->ty});
      body = fa->body;
    }
    if (binders.empty()) return false;
    std::vector<std::vector<int>> cands(binders.size());
    for (std::size_t i = 0; i < binders.size(); ++i) {
      for (std::size_t p = 0; p < pool_.size(); ++p)
        if (hol::type_eq(pool_[p].second, binders[i].second))
          cands[i].push_back(static_cast<int>(p));
      if (cands[i].empty()) return false;
    }
    bool progress = false;
    std::vector<std::size_t> pos(binders.size(), 0);
    for (int used = 0; used < sc_.bounds.max_instantiations; ++used) {
      // Instantiate one prefix tuple.
      Term cur = fact.formula;
      std::size_t step = fact.step;
      bool fresh_somewhere = false;
      for (std::size_t i = 0; i < binders.size(); ++i) {
        const auto* fa = hol::get_if<hol::ForallT>(cur);
        const Term& w = pool_[cands[i][pos[i]]].first;
        Term next = hol::beta_eta_normalize(hol::subst(fa->body, fa->var, w));
        step = store_.push(Step{"inst", {step}, next, "", w});
        cur = next;
      }
      fresh_somewhere = add_fact(cur, step);
      progress = progress || fresh_somewhere;
      // Advance the odometer (last position fastest).
      std::size_t i = binders.size();
      while (i > 0) {
        --i;
        if (++pos[i] < cands[i].size()) break;
        pos[i] = 0;
        if (i == 0) return progress; // wrapped around: all tuples done
      }
    }
    return progress;
  }

  bool derive(Congruence& cc) {
    bool progress = false;
    std::size_t snapshot = facts_.size();
    // Universal instantiation over the pre-round facts. Copy each fact out:
    // instantiation appends to facts_, which can reallocate the vector.
    for (std::size_t i = 0; i < snapshot; ++i) {
      Fact f = facts_[i];
      progress = instantiate(f) || progress;
    }
    // Splitting and implication chaining run to a within-round fixpoint;
    // the list only grows, so the index loop is exhaustive.
    for (std::size_t i = 0; i < facts_.size(); ++i) {
      Fact f = facts_[i];
      if (const auto* a = hol::get_if<hol::AndT>(f.formula)) {
        Term l = a->lhs, r = a->rhs;
        progress |= add_fact(l, store_.push(Step{"and_left", {f.step}, l, "", std::nullopt}));
        progress |= add_fact(r, store_.push(Step{"and_right", {f.step}, r, "", std::nullopt}));
      } else if (const auto* im = hol::get_if<hol::ImplT>(f.formula)) {
        if (auto ant = derive_formula(cc, im->lhs)) {
          Term c = im->rhs;
          progress |=
              add_fact(c, store_.push(Step{"mp", {f.step, *ant}, c, "", std::nullopt}));
        }
      } else if (const auto* eq = hol::get_if<hol::EqT>(f.formula)) {
        if (hol::kind(eq->rhs) == hol::TermKind::True) {
          Term c = eq->lhs;
          progress |= add_fact(
              c, store_.push(Step{"eq_true_elim", {f.step}, c, "", std::nullopt}));
        }
      }
    }
    return progress;
  }

  SearchCtx& sc_;
  Term goal_;
  TypeCache types_;
  StepStore store_;
  std::vector<Fact> facts_;
  std::map<std::string, std::size_t> fact_by_key_;
  std::vector<std::pair<Term, Type>> pool_;
};

std::string fresh_eigen(SearchCtx& sc, const std::string& base) {
  std::string b = base.empty() ? "x" : base;
  if (!sc.taken.count(b)) return b;
  for (int i = 1;; ++i) {
    std::string cand = b + std::to_string(i);
    if (!sc.taken.count(cand)) return cand;
  }
}

std::optional<ProofNode> prove_goal(SearchCtx& sc, const Term& goal_raw);

std::optional<ProofNode> leaf_attempt(SearchCtx& sc, const Term& goal) {
  LeafProver lp(sc, goal);
  if (auto steps = lp.run()) {
    ProofNode n;
    n.tag = ProofNode::Tag::Leaf;
    n.steps = std::move(*steps);
    return n;
  }
  return std::nullopt;
}

std::optional<ProofNode> prove_goal(SearchCtx& sc, const Term& goal_raw) {
  Term goal = hol::beta_eta_normalize(goal_raw);
  switch (hol::kind(goal)) {
    case hol::TermKind::True: {
      ProofNode n;
      n.tag = ProofNode::Tag::TrueIntro;
      return n;
    }
    case hol::TermKind::Impl: {
      const auto* im = hol::get_if<hol::ImplT>(goal);
      sc.hyps.push_back(im->lhs);
      auto child = prove_goal(sc, im->rhs);
      sc.hyps.pop_back();
      if (!child) return std::nullopt;
      ProofNode n;
      n.tag = ProofNode::Tag::ImplIntro;
      n.children.push_back(std::move(*child));
      return n;
    }
    case hol::TermKind::Not: {
      const auto* nt = hol::get_if<hol::NotT>(goal);
      sc.hyps.push_back(nt->arg);
      auto child = prove_goal(sc, hol::mk_false());
      sc.hyps.pop_back();
      if (!child) return std::nullopt;
      ProofNode n;
      n.tag = ProofNode::Tag::NotIntro;
      n.children.push_back(std::move(*child));
      return n;
    }
    case hol::TermKind::And: {
      const auto* a = hol::get_if<hol::AndT>(goal);
      auto l = prove_goal(sc, a->lhs);
      if (!l) return std::nullopt;
      auto r = prove_goal(sc, a->rhs);
      if (!r) return std::nullopt;
      ProofNode n;
      n.tag = ProofNode::Tag::AndIntro;
      n.children.push_back(std::move(*l));
      n.children.push_back(std::move(*r));
      return n;
    }
    case hol::TermKind::Forall: {
      const auto* fa = hol::get_if<hol::ForallT>(goal);
      std::string eigen = fresh_eigen(sc, fa->var);
      sc.taken.insert(eigen);
      sc.ctx.entries.push_back(hol::VarDecl{eigen, fa->ty});
      auto child = prove_goal(sc, hol::subst(fa->body, fa->var, hol::mk_var(eigen)));
      sc.ctx.entries.pop_back();
      sc.taken.erase(eigen);
      if (!child) return std::nullopt;
      ProofNode n;
      n.tag = ProofNode::Tag::ForallIntro;
      n.eigen = eigen;
      n.children.push_back(std::move(*child));
      return n;
    }
    case hol::TermKind::Exists: {
      if (auto leaf = leaf_attempt(sc, goal)) return leaf;
      const auto* ex = hol::get_if<hol::ExistsT>(goal);
      // Witness candidates: well-typed closed subterms of the goal, the path
      // hypotheses, and the axioms and assumptions, in that order.
      std::vector<Term> subs;
      std::set<std::string> seen;
      harvest_closed(goal, subs, seen);
      for (const auto& h : sc.hyps) harvest_closed(h, subs, seen);
      for (const auto& [name, f] : sc.axioms) harvest_closed(f, subs, seen);
      for (const auto& [name, f] : sc.assumptions) harvest_closed(f, subs, seen);
      TypeCache types(sc.thy, sc.ctx);
      int tried = 0;
      for (const auto& w : subs) {
        if (tried >= kMaxExistsWitnesses) break;
        const auto& ty = types.get(w);
        if (!ty || !hol::type_eq(*ty, ex->ty)) continue;
        ++tried;
        if (auto child = prove_goal(sc, hol::subst(ex->body, ex->var, w))) {
          ProofNode n;
          n.tag = ProofNode::Tag::ExistsIntro;
          n.witness = w;
          n.children.push_back(std::move(*child));
          return n;
        }
      }
      return std::nullopt;
    }
    case hol::TermKind::Or: {
      if (auto leaf = leaf_attempt(sc, goal)) return leaf;
      const auto* o = hol::get_if<hol::OrT>(goal);
      if (auto l = prove_goal(sc, o->lhs)) {
        ProofNode n;
        n.tag = ProofNode::Tag::OrLeft;
        n.children.push_back(std::move(*l));
        return n;
      }
      if (auto r = prove_goal(sc, o->rhs)) {
        ProofNode n;
        n.tag = ProofNode::Tag::OrRight;
        n.children.push_back(std::move(*r));
        return n;
      }
      return std::nullopt;
    }
    case hol::TermKind::Eq: {
      if (auto leaf = leaf_attempt(sc, goal)) return leaf;
      const auto* e = hol::get_if<hol::EqT>(goal);
      bool boolean = e->at && hol::kind(*e->at) == hol::TypeKind::Bool;
      if (boolean && sc.ext_depth < kMaxPropExtDepth) {
        ++sc.ext_depth;
        auto fwd = prove_goal(sc, hol::mk_impl(e->lhs, e->rhs));
        auto bwd = fwd ? prove_goal(sc, hol::mk_impl(e->rhs, e->lhs)) : std::nullopt;
        --sc.ext_depth;
        if (fwd && bwd) {
          ProofNode n;
          n.tag = ProofNode::Tag::PropExt;
          n.children.push_back(std::move(*fwd));
          n.children.push_back(std::move(*bwd));
          return n;
        }
      }
      return std::nullopt;
    }
    default:
      return leaf_attempt(sc, goal);
  }
}

// ---------------------------------------------------------------------------
// Replay checking.
// ---------------------------------------------------------------------------

struct ReplayEnv {
  const hol::Theory& thy;
  hol::Context ctx;
  std::map<std::string, Term> axioms;      // elaborated
  std::map<std::string, Term> assumptions; // elaborated
  std::vector<Term> hyps;
};

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool check_steps(ReplayEnv& env, const std::vector<Step>& steps, const Term& goal,
                 std::string* why) {
  auto conclusion_of = [&](std::size_t i) -> const Term& { return steps[i].conclusion; };
  bool goal_closed = false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    for (std::size_t p : s.premises)
      if (p >= i) return fail(why, "step " + std::to_string(i) + " uses a later premise");
    auto premise = [&](std::size_t k) -> const Term& {
      return conclusion_of(s.premises[k]);
    };
    auto need = [&](bool ok, const std::string& msg) {
      if (!ok) throw hol::TypeError("step " + std::to_string(i) + " (" + s.rule + "): " + msg);
      return true;
    };
    try {
      if (s.rule == "axiom") {
        auto it = env.axioms.find(s.name);
        need(it != env.axioms.end(), "unknown axiom " + s.name);
        need(hol::alpha_eq(s.conclusion, it->second), "conclusion is not that axiom");
      } else if (s.rule == "assume") {
        auto it = env.assumptions.find(s.name);
        need(it != env.assumptions.end(), "unknown assumption " + s.name);
        need(hol::alpha_eq(s.conclusion, it->second), "conclusion is not that assumption");
      } else if (s.rule == "hyp") {
        std::size_t k = 0;
        try {
          k = std::stoul(s.name);
        } catch (...) {
          need(false, "bad hypothesis index");
        }
        need(k < env.hyps.size(), "hypothesis index out of range");
        need(hol::alpha_eq(s.conclusion, env.hyps[k]), "conclusion is not that hypothesis");
      } else if (s.rule == "normalize") {
        need(s.premises.size() == 1, "arity");
        need(hol::alpha_eq(s.conclusion, hol::beta_eta_normalize(premise(0))),
             "not the normal form of the premise");
      } else if (s.rule == "and_left" || s.rule == "and_right") {
        need(s.premises.size() == 1, "arity");
        const auto* a = hol::get_if<hol::AndT>(premise(0));
        need(a != nullptr, "premise is not a conjunction");
        need(hol::alpha_eq(s.conclusion, s.rule == "and_left" ? a->lhs : a->rhs),
             "conclusion is not that conjunct");
      } else if (s.rule == "mp") {
        need(s.premises.size() == 2, "arity");
        const auto* im = hol::get_if<hol::ImplT>(premise(0));
        need(im != nullptr, "first premise is not an implication");
        need(hol::alpha_eq(premise(1), im->lhs), "second premise is not the antecedent");
        need(hol::alpha_eq(s.conclusion, im->rhs), "conclusion is not the consequent");
      } else if (s.rule == "inst") {
        need(s.premises.size() == 1 && s.witness.has_value(), "arity");
        const auto* fa = hol::get_if<hol::ForallT>(premise(0));
        need(fa != nullptr, "premise is not universal");
        Type wt = hol::infer(env.thy, env.ctx, *s.witness);
        need(hol::type_eq(wt, fa->ty), "witness type mismatch");
        need(hol::alpha_eq(s.conclusion,
                           hol::beta_eta_normalize(hol::subst(fa->body, fa->var, *s.witness))),
             "conclusion is not the instantiated body");
      } else if (s.rule == "refl") {
        const auto* e = hol::get_if<hol::EqT>(s.conclusion);
        need(e != nullptr && e->at.has_value(), "conclusion is not an annotated equality");
        need(hol::alpha_eq(e->lhs, e->rhs), "sides differ");
      } else if (s.rule == "sym") {
        need(s.premises.size() == 1, "arity");
        const auto* e = hol::get_if<hol::EqT>(premise(0));
        need(e != nullptr, "premise is not an equality");
        need(hol::alpha_eq(s.conclusion, hol::mk_eq(e->at, e->rhs, e->lhs)), "not the converse");
      } else if (s.rule == "trans") {
        need(s.premises.size() == 2, "arity");
        const auto* e0 = hol::get_if<hol::EqT>(premise(0));
        const auto* e1 = hol::get_if<hol::EqT>(premise(1));
        need(e0 && e1, "premises are not equalities");
        need(hol::alpha_eq(e0->rhs, e1->lhs), "middle terms differ");
        need(hol::alpha_eq(s.conclusion, hol::mk_eq(e0->at, e0->lhs, e1->rhs)),
             "conclusion does not chain the premises");
      } else if (s.rule == "cong") {
        need(s.premises.size() == 2, "arity");
        const auto* e0 = hol::get_if<hol::EqT>(premise(0));
        const auto* e1 = hol::get_if<hol::EqT>(premise(1));
        need(e0 && e1 && e0->at.has_value() && e1->at.has_value(),
             "premises are not annotated equalities");
        const auto* arrow = hol::get_if<hol::ArrowTy>(*e0->at);
        need(arrow != nullptr, "first premise is not at function type");
        need(hol::type_eq(arrow->from, *e1->at), "argument type mismatch");
        need(hol::alpha_eq(s.conclusion,
                           hol::mk_eq(arrow->to, hol::mk_app(e0->lhs, e1->lhs),
                                      hol::mk_app(e0->rhs, e1->rhs))),
             "conclusion is not the congruent application");
      } else if (s.rule == "eq_true_intro") {
        need(s.premises.size() == 1, "arity");
        need(hol::alpha_eq(s.conclusion,
                           hol::mk_eq(hol::mk_bool(), premise(0), hol::mk_true())),
             "conclusion is not premise = true");
      } else if (s.rule == "eq_true_elim") {
        need(s.premises.size() == 1, "arity");
        const auto* e = hol::get_if<hol::EqT>(premise(0));
        need(e != nullptr && hol::kind(e->rhs) == hol::TermKind::True,
             "premise is not an equation with true");
        need(hol::alpha_eq(s.conclusion, e->lhs), "conclusion is not the left side");
      } else if (s.rule == "neg_eq_false") {
        need(s.premises.size() == 1, "arity");
        const auto* n = hol::get_if<hol::NotT>(premise(0));
        need(n != nullptr, "premise is not a negation");
        need(hol::alpha_eq(s.conclusion,
                           hol::mk_eq(hol::mk_bool(), n->arg, hol::mk_false())),
             "conclusion is not body = false");
      } else if (s.rule == "true_intro") {
        need(hol::kind(s.conclusion) == hol::TermKind::True, "conclusion is not true");
      } else if (s.rule == "absurd") {
        need(s.premises.size() == 2, "arity");
        const auto* e = hol::get_if<hol::EqT>(premise(1));
        need(e != nullptr && hol::kind(e->rhs) == hol::TermKind::False,
             "second premise is not an equation with false");
        need(hol::alpha_eq(premise(0), e->lhs), "premises do not contradict");
      } else {
        need(false, "unknown rule");
      }
    } catch (const hol::TypeError& e) {
      return fail(why, e.what());
    }
    if (!goal_closed && hol::alpha_eq(steps[i].conclusion, goal)) goal_closed = true;
  }
  if (!goal_closed) return fail(why, "no step concludes the goal");
  return true;
}

bool replay_node(ReplayEnv& env, const ProofNode& node, const Term& goal_raw,
                 std::string* why) {
  Term goal = hol::beta_eta_normalize(goal_raw);
  switch (node.tag) {
    case ProofNode::Tag::TrueIntro:
      if (hol::kind(goal) != hol::TermKind::True) return fail(why, "goal is not true");
      return true;
    case ProofNode::Tag::ImplIntro: {
      const auto* im = hol::get_if<hol::ImplT>(goal);
      if (!im || node.children.size() != 1) return fail(why, "goal is not an implication");
      env.hyps.push_back(im->lhs);
      bool ok = replay_node(env, node.children[0], im->rhs, why);
      env.hyps.pop_back();
      return ok;
    }
    case ProofNode::Tag::NotIntro: {
      const auto* n = hol::get_if<hol::NotT>(goal);
      if (!n || node.children.size() != 1) return fail(why, "goal is not a negation");
      env.hyps.push_back(n->arg);
      bool ok = replay_node(env, node.children[0], hol::mk_false(), why);
      env.hyps.pop_back();
      return ok;
    }
    case ProofNode::Tag::AndIntro: {
      const auto* a = hol::get_if<hol::AndT>(goal);
      if (!a || node.children.size() != 2) return fail(why, "goal is not a conjunction");
      return replay_node(env, node.children[0], a->lhs, why) &&
             replay_node(env, node.children[1], a->rhs, why);
    }
    case ProofNode::Tag::OrLeft:
    case ProofNode::Tag::OrRight: {
      const auto* o = hol::get_if<hol::OrT>(goal);
      if (!o || node.children.size() != 1) return fail(why, "goal is not a disjunction");
      return replay_node(env, node.children[0],
                         node.tag == ProofNode::Tag::OrLeft ? o->lhs : o->rhs, why);
    }
    case ProofNode::Tag::ForallIntro: {
      const auto* fa = hol::get_if<hol::ForallT>(goal);
      if (!fa || node.children.size() != 1) return fail(why, "goal is not universal");
      if (node.eigen.empty()) return fail(why, "missing eigenvariable");
      if (env.thy.has_name(node.eigen) || env.ctx.has_name(node.eigen))
        return fail(why, "eigenvariable is not fresh: " + node.eigen);
      env.ctx.entries.push_back(hol::VarDecl{node.eigen, fa->ty});
      bool ok = replay_node(env, node.children[0],
                            hol::subst(fa->body, fa->var, hol::mk_var(node.eigen)), why);
      env.ctx.entries.pop_back();
      return ok;
    }
    case ProofNode::Tag::ExistsIntro: {
      const auto* ex = hol::get_if<hol::ExistsT>(goal);
      if (!ex || node.children.size() != 1 || !node.witness)
        return fail(why, "goal is not existential or the witness is missing");
      try {
        Type wt = hol::infer(env.thy, env.ctx, *node.witness);
        if (!hol::type_eq(wt, ex->ty)) return fail(why, "witness type mismatch");
      } catch (const hol::TypeError& e) {
        return fail(why, std::string("witness: ") + e.what());
      }
      return replay_node(env, node.children[0],
                         hol::subst(ex->body, ex->var, *node.witness), why);
    }
    case ProofNode::Tag::PropExt: {
      const auto* e = hol::get_if<hol::EqT>(goal);
      if (!e || node.children.size() != 2) return fail(why, "goal is not an equality");
      if (!e->at || hol::kind(*e->at) != hol::TypeKind::Bool)
        return fail(why, "goal is not a boolean equality");
      return replay_node(env, node.children[0], hol::mk_impl(e->lhs, e->rhs), why) &&
             replay_node(env, node.children[1], hol::mk_impl(e->rhs, e->lhs), why);
    }
    case ProofNode::Tag::Leaf:
      return check_steps(env, node.steps, goal, why);
  }
  return fail(why, "corrupt proof node");
}

// Elaborates every axiom, assumption, and the conjecture so that equality
// annotations are present and consistent on both the search and replay sides.
struct ElaboratedProblem {
  std::vector<std::pair<std::string, Term>> axioms;
  std::vector<std::pair<std::string, Term>> assumptions;
  Term conjecture;
};

ElaboratedProblem elaborate_problem(const hol::Problem& p) {
  ElaboratedProblem out;
  hol::Context empty;
  for (const auto& d : p.theory.decls) {
    if (const auto* ax = std::get_if<hol::AxiomDecl>(&d)) {
      Term e;
      hol::infer(p.theory, empty, ax->formula, &e);
      out.axioms.push_back({ax->name, e});
    }
  }
  for (const auto& entry : p.context.entries) {
    if (const auto* as = std::get_if<hol::Assumption>(&entry)) {
      Term e;
      hol::infer(p.theory, p.context, as->formula, &e);
      out.assumptions.push_back({as->name, e});
    }
  }
  Type ct = hol::infer(p.theory, p.context, p.conjecture, &out.conjecture);
  if (hol::kind(ct) != hol::TypeKind::Bool)
    throw hol::TypeError("conjecture is not boolean");
  return out;
}

} // namespace

bool replay(const hol::Problem& problem, const Proof& proof, std::string* why) {
  try {
    ElaboratedProblem ep = elaborate_problem(problem);
    ReplayEnv env{problem.theory, problem.context, {}, {}, {}};
    for (auto& [n, f] : ep.axioms) env.axioms.emplace(n, f);
    for (auto& [n, f] : ep.assumptions) env.assumptions.emplace(n, f);
    return replay_node(env, proof.root, ep.conjecture, why);
  } catch (const hol::TypeError& e) {
    return fail(why, e.what());
  }
}

OracleVerdict builtin_decide(const hol::Problem& problem, const BuiltinBounds& bounds,
                             Proof* out) {
  auto t0 = std::chrono::steady_clock::now();
  OracleVerdict v;
  v.by = "builtin";
  v.status = Status::Unknown;
  v.reason = UnknownReason::GaveUp;

  ElaboratedProblem ep;
  try {
    ep = elaborate_problem(problem);
  } catch (const hol::TypeError& e) {
    v.diagnostics = std::string("problem rejected: ") + e.what();
    v.seconds = elapsed_since(t0);
    return v;
  }

  SearchCtx sc{problem.theory, problem.context, std::move(ep.axioms),
               std::move(ep.assumptions), {},      bounds,
               0,             {}};
  for (const auto& d : problem.theory.decls) {
    if (const auto* td = std::get_if<hol::TypeDecl>(&d)) sc.taken.insert(td->name);
    if (const auto* cd = std::get_if<hol::ConstDecl>(&d)) sc.taken.insert(cd->name);
    if (const auto* ad = std::get_if<hol::AxiomDecl>(&d)) sc.taken.insert(ad->name);
  }
  for (const auto& entry : problem.context.entries) {
    if (const auto* vd = std::get_if<hol::VarDecl>(&entry)) sc.taken.insert(vd->name);
    if (const auto* as = std::get_if<hol::Assumption>(&entry)) sc.taken.insert(as->name);
  }

  std::optional<ProofNode> root;
  try {
    root = prove_goal(sc, ep.conjecture);
  } catch (const std::exception& e) {
    v.diagnostics = std::string("search aborted: ") + e.what();
    v.seconds = elapsed_since(t0);
    return v;
  }
  if (!root) {
    v.diagnostics = "bounded search exhausted";
    v.seconds = elapsed_since(t0);
    return v;
  }

  Proof proof{std::move(*root)};
  std::string why;
  if (!replay(problem, proof, &why)) {
    v.diagnostics = "internal error: trace replay failed: " + why;
    v.seconds = elapsed_since(t0);
    return v;
  }
  if (out) *out = std::move(proof);
  v.status = Status::Proved;
  v.reason = UnknownReason::NotAttempted;
  v.seconds = elapsed_since(t0);
  return v;
}

// ---------------------------------------------------------------------------
// External provers.
// ---------------------------------------------------------------------------

namespace {

std::string substitute_template(const std::string& tmpl, const std::string& file,
                                long timeout_secs) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.compare(i, 6, "{file}") == 0) {
      out += file;
      i += 6;
    } else if (tmpl.compare(i, 9, "{timeout}") == 0) {
      out += std::to_string(timeout_secs);
      i += 9;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

std::filesystem::path unique_problem_path(const std::string& temp_dir) {
  namespace fs = std::filesystem;
  static std::atomic<unsigned> counter{0};
  fs::path dir = temp_dir.empty() ? fs::temp_directory_path() : fs::path(temp_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::mt19937_64 rng(std::random_device{}());
  std::ostringstream name;
  name << "dholk_" << ::getpid() << "_" << counter.fetch_add(1) << "_" << std::hex
       << (rng() & 0xffffffu) << ".p";
  return dir / name.str();
}

struct RunResult {
  std::string output;
  bool timed_out = false;
  bool spawn_failed = false;
  int exit_status = -1;
};

RunResult run_command(const std::string& cmd, double deadline_seconds) {
  RunResult r;
  int fds[2];
  if (::pipe(fds) != 0) {
    r.spawn_failed = true;
    return r;
  }
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    r.spawn_failed = true;
    return r;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(fds[1], 1);
    ::dup2(fds[1], 2);
    ::close(fds[0]);
    ::close(fds[1]);
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(fds[1]);
  ::fcntl(fds[0], F_SETFL, O_NONBLOCK);

  auto t0 = std::chrono::steady_clock::now();
  constexpr std::size_t kMaxOutput = 4u << 20;
  bool eof = false;
  while (!eof) {
    double left = deadline_seconds - elapsed_since(t0);
    if (left <= 0) {
      r.timed_out = true;
      break;
    }
    struct pollfd pfd{fds[0], POLLIN, 0};
    int pr = ::poll(&pfd, 1, static_cast<int>(std::min(left * 1000.0, 1000.0)));
    if (pr < 0 && errno != EINTR) break;
    if (pr <= 0) continue;
    char buf[4096];
    for (;;) {
      ssize_t n = ::read(fds[0], buf, sizeof buf);
      if (n > 0) {
        if (r.output.size() < kMaxOutput) r.output.append(buf, static_cast<std::size_t>(n));
      } else if (n == 0) {
        eof = true;
        break;
      } else {
        if (errno == EAGAIN || errno == EWOULDBLOCK) break;
        if (errno == EINTR) continue;
        eof = true;
        break;
      }
    }
  }
  ::close(fds[0]);

  if (r.timed_out) ::kill(-pid, SIGKILL);
  // Reap, enforcing the deadline even if grandchildren hold the pipe open.
  for (;;) {
    int status = 0;
    pid_t w = ::waitpid(pid, &status, r.timed_out ? 0 : WNOHANG);
    if (w == pid) {
      if (WIFEXITED(status)) r.exit_status = WEXITSTATUS(status);
      break;
    }
    if (w < 0) break;
    if (elapsed_since(t0) > deadline_seconds) {
      r.timed_out = true;
      ::kill(-pid, SIGKILL);
      continue;
    }
    ::usleep(20000);
  }
  return r;
}

// First "SZS status <word>" occurrence, if any.
std::optional<std::string> szs_status(const std::string& output) {
  std::size_t at = output.find("SZS status");
  if (at == std::string::npos) return std::nullopt;
  std::size_t i = at + std::strlen("SZS status");
  while (i < output.size() && (output[i] == ' ' || output[i] == '\t')) ++i;
  std::size_t j = i;
  while (j < output.size() && (std::isalnum(static_cast<unsigned char>(output[j])) != 0)) ++j;
  if (j == i) return std::nullopt;
  return output.substr(i, j - i);
}

} // namespace

OracleVerdict run_external(const hol::Problem& problem, const std::string& name,
                           const std::string& command_template, double timeout_seconds,
                           bool keep_temp, const std::string& temp_dir) {
  auto t0 = std::chrono::steady_clock::now();
  OracleVerdict v;
  v.by = name.empty() ? "external" : name;
  v.status = Status::Unknown;
  v.reason = UnknownReason::GaveUp;

  if (command_template.empty()) {
    v.diagnostics = "no command template configured";
    v.seconds = elapsed_since(t0);
    return v;
  }

  std::filesystem::path path = unique_problem_path(temp_dir);
  try {
    std::ofstream out(path);
    out << tptp::emit_th0(problem);
    if (!out) throw std::runtime_error("write failed");
  } catch (const std::exception& e) {
    v.diagnostics = std::string("could not write problem file: ") + e.what();
    v.seconds = elapsed_since(t0);
    return v;
  }

  long secs = std::max(1L, static_cast<long>(std::ceil(timeout_seconds)));
  std::string cmd = substitute_template(command_template, path.string(), secs);
  RunResult run = run_command(cmd, timeout_seconds + 2.0);

  if (!keep_temp) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  } else {
    v.diagnostics = "problem file retained at " + path.string();
  }

  auto finish = [&](Status st, UnknownReason re, const std::string& note) {
    v.status = st;
    v.reason = re;
    if (!note.empty()) v.diagnostics = v.diagnostics.empty() ? note : v.diagnostics + "; " + note;
    v.seconds = elapsed_since(t0);
    return v;
  };

  if (run.spawn_failed) return finish(Status::Unknown, UnknownReason::GaveUp, "could not spawn command");

  auto status = szs_status(run.output);
  if (!status) {
    if (run.timed_out)
      return finish(Status::Unknown, UnknownReason::Timeout, "wall-clock deadline exceeded");
    if (run.exit_status == 127)
      return finish(Status::Unknown, UnknownReason::GaveUp, "command not found (exit 127)");
    return finish(Status::Unknown, UnknownReason::ParseFailure, "no SZS status line in output");
  }
  if (*status == "Theorem" || *status == "Unsatisfiable")
    return finish(Status::Proved, UnknownReason::NotAttempted, "SZS status " + *status);
  if (*status == "CounterSatisfiable" || *status == "Satisfiable")
    return finish(Status::Refuted, UnknownReason::NotAttempted, "SZS status " + *status);
  if (*status == "Timeout")
    return finish(Status::Unknown, UnknownReason::Timeout, "SZS status Timeout");
  return finish(Status::Unknown, UnknownReason::GaveUp, "SZS status " + *status);
}

OracleVerdict prove(const hol::Problem& problem, const OracleConfig& cfg) {
  OracleVerdict last;
  last.status = Status::Unknown;
  last.reason = UnknownReason::NotAttempted;
  last.by = "none";
  last.diagnostics = cfg.chain.empty() ? "empty oracle chain" : "";
  for (const auto& spec : cfg.chain) {
    OracleVerdict v;
    if (spec.kind == OracleSpec::Kind::Builtin) {
      v = builtin_decide(problem, spec.bounds);
      if (!spec.name.empty()) v.by = spec.name;
    } else {
      v = run_external(problem, spec.name, spec.command_template, cfg.timeout_seconds,
                       cfg.keep_temp, cfg.temp_dir);
    }
    if (v.status != Status::Unknown) return v;
    last = v;
  }
  return last;
}

} // namespace dholk::oracle
