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

#include "dholk/kernel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dholk::kernel {

using namespace dhol;

const char* to_string(ObligationKind k) {
  switch (k) {
    case ObligationKind::BaseArgEq: return "base-arg-eq";
    case ObligationKind::PsubIntro: return "psub-intro";
    case ObligationKind::PsubVariance: return "psub-variance";
    case ObligationKind::TypeEqPred: return "type-eq-pred";
    case ObligationKind::Conjecture: return "conjecture";
    case ObligationKind::Other: return "other";
  }
  return "other";
}

const char* to_string(DischargeResult r) {
  switch (r) {
    case DischargeResult::Proved: return "proved";
    case DischargeResult::Refuted: return "refuted";
    case DischargeResult::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// ---------------- Predicate-subtype normalization ----------------

namespace {

// Splits a predicate body into conjuncts, distributing universal quantifiers
// over conjunctions so that structurally merged predicates split back into
// the same pieces they were merged from.
std::vector<Term> and_forall_split(const Term& b) {
  if (const auto* a = dhol::get_if<AndT>(b)) {
    std::vector<Term> out = and_forall_split(a->lhs);
    std::vector<Term> rhs = and_forall_split(a->rhs);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
  }
  if (const auto* f = dhol::get_if<ForallT>(b)) {
    std::vector<Term> parts = and_forall_split(f->body);
    if (parts.size() > 1) {
      std::vector<Term> out;
      out.reserve(parts.size());
      for (const Term& p : parts) out.push_back(mk_forall(f->var, f->ty, p));
      return out;
    }
  }
  return {b};
}

// Canonical pieces of one subtype predicate over `core`: the predicate is
// applied to a fresh variable, beta-normalized, and split into conjuncts;
// each piece is re-packaged as a lambda over the core.
std::vector<Term> split_pred(const Term& p, const Type& core) {
  std::set<std::string> avoid = free_vars(p);
  collect_free_vars(core, avoid);
  std::string x = fresh_name("x", avoid);
  Term body = beta_normalize(beta_apply(p, mk_var(x)));
  std::vector<Term> out;
  for (const Term& leaf : and_forall_split(body)) out.push_back(mk_lam(x, core, leaf));
  return out;
}

Term fold_apply(const std::vector<Term>& preds, const std::string& x) {
  if (preds.empty()) return mk_true();
  Term b = beta_apply(preds[0], mk_var(x));
  for (std::size_t i = 1; i < preds.size(); ++i)
    b = mk_and(b, beta_apply(preds[i], mk_var(x)));
  return b;
}

} // namespace

NormParts norm_parts(const Type& a) {
  switch (kind(a)) {
    case TypeKind::Bool:
    case TypeKind::Base:
      return {a, {}};
    case TypeKind::Psub: {
      const auto& p = std::get<PsubTy>(a.node().v);
      NormParts np = norm_parts(p.base);
      for (Term& e : split_pred(p.pred, np.core)) np.preds.push_back(std::move(e));
      return np;
    }
    case TypeKind::Pi: {
      const auto& pi = std::get<PiTy>(a.node().v);
      NormParts cp = norm_parts(pi.codomain);
      Type core = mk_pi(pi.var, pi.domain, cp.core);
      NormParts out{core, {}};
      for (const Term& e : cp.preds) {
        // Codomain predicates are hoisted to predicates on whole functions:
        // a piece q over the codomain becomes λf. ∀x:domain. q (f x), where
        // the quantifier deliberately rebinds the function type's own binder
        // so that dependent occurrences inside q stay meaningful.
        const auto* lam = dhol::get_if<LamT>(e); // split_pred always builds lambdas
        std::set<std::string> avoid = free_vars(e);
        collect_free_vars(pi.domain, avoid);
        avoid.insert(pi.var);
        std::string f = fresh_name("f", avoid);
        Term applied = subst(lam->body, lam->var, mk_app(mk_var(f), mk_var(pi.var)));
        out.preds.push_back(mk_lam(f, core, mk_forall(pi.var, pi.domain, applied)));
      }
      return out;
    }
  }
  return {a, {}};
}

Type normalize_psub(const Type& a) {
  NormParts parts = norm_parts(a);
  if (parts.preds.empty()) return parts.core;
  std::set<std::string> avoid;
  collect_free_vars(parts.core, avoid);
  for (const Term& p : parts.preds) collect_free_vars(p, avoid);
  std::string x = fresh_name("x", avoid);
  return mk_psub(parts.core, mk_lam(x, parts.core, fold_apply(parts.preds, x)));
}

Type psub_strip(const Type& a) {
  Type t = a;
  while (const auto* p = dhol::get_if<PsubTy>(t)) t = p->base;
  return t;
}

// ---------------- Scope guards ----------------

namespace {

struct CtxGuard {
  Context& ctx;
  explicit CtxGuard(Context& c, ContextEntry e) : ctx(c) {
    ctx.entries.push_back(std::move(e));
  }
  ~CtxGuard() { ctx.entries.pop_back(); }
  CtxGuard(const CtxGuard&) = delete;
  CtxGuard& operator=(const CtxGuard&) = delete;
};

struct CtxPopper {
  Context& ctx;
  std::size_t n;
  explicit CtxPopper(Context& c) : ctx(c), n(c.entries.size()) {}
  ~CtxPopper() { ctx.entries.resize(n); }
  CtxPopper(const CtxPopper&) = delete;
  CtxPopper& operator=(const CtxPopper&) = delete;
};

struct LocGuard {
  std::vector<std::string>& loc;
  LocGuard(std::vector<std::string>& l, std::string s) : loc(l) {
    loc.push_back(std::move(s));
  }
  ~LocGuard() { loc.pop_back(); }
  LocGuard(const LocGuard&) = delete;
  LocGuard& operator=(const LocGuard&) = delete;
};

struct SilentGuard {
  int& s;
  explicit SilentGuard(int& v) : s(v) { ++s; }
  ~SilentGuard() { --s; }
  SilentGuard(const SilentGuard&) = delete;
  SilentGuard& operator=(const SilentGuard&) = delete;
};

const Assumption* find_assumption(const Context& ctx, const std::string& name) {
  for (const auto& e : ctx.entries)
    if (const auto* a = std::get_if<Assumption>(&e))
      if (a->name == name) return a;
  return nullptr;
}

} // namespace

// ---------------- Checker plumbing ----------------

std::string Checker::loc_string() const {
  std::string out;
  for (const auto& s : loc_) {
    if (!out.empty()) out += " / ";
    out += s;
  }
  return out;
}

std::set<std::string> Checker::names_in_scope() const {
  std::set<std::string> s;
  for (const auto& d : thy_.decls)
    std::visit([&](const auto& x) { s.insert(x.name); }, d);
  for (const auto& e : ctx_.entries)
    std::visit([&](const auto& x) { s.insert(x.name); }, e);
  return s;
}

std::string Checker::freshen(const std::string& base, const std::set<std::string>& extra) {
  std::set<std::string> avoid = names_in_scope();
  bool reserved = base.empty() || base[0] == '?';
  if (!reserved && !avoid.count(base)) return base;
  avoid.insert(extra.begin(), extra.end());
  return fresh_name(reserved ? "x" : base, avoid);
}

void Checker::emit(Term formula, Provenance prov) {
  if (silent_) return;
  if (prov.note.empty()) prov.note = loc_string();
  obligations_.push_back(Obligation{seq_++, thy_, ctx_, std::move(formula), std::move(prov)});
  DischargeOutcome out = oracle_.discharge(obligations_.back());
  outcomes_.push_back(out);
  if (out.result == DischargeResult::Refuted)
    throw CheckError("proof obligation refuted: " + pretty(obligations_.back().formula),
                     loc_string());
  if (out.result == DischargeResult::Unknown) unknown_ = true;
}

// ---------------- Well-formed types ----------------

Type Checker::wf_type(const Type& a) {
  switch (kind(a)) {
    case TypeKind::Bool:
      return a;
    case TypeKind::Base: {
      const auto& b = std::get<BaseApp>(a.node().v);
      const TypeDecl* td = thy_.find_type(b.ctor);
      if (!td) throw CheckError("unknown type constructor '" + b.ctor + "'", loc_string());
      if (td->telescope.size() != b.args.size())
        throw CheckError("type constructor '" + b.ctor + "' expects " +
                             std::to_string(td->telescope.size()) + " argument(s), got " +
                             std::to_string(b.args.size()),
                         loc_string());
      std::vector<Term> elab;
      elab.reserve(b.args.size());
      for (std::size_t i = 0; i < b.args.size(); ++i) {
        LocGuard lg(loc_, "argument " + std::to_string(i) + " of " + b.ctor);
        Type ti = td->telescope[i].second;
        for (std::size_t j = 0; j < i; ++j) ti = subst(ti, td->telescope[j].first, elab[j]);
        elab.push_back(check(b.args[i], ti));
      }
      return mk_base(b.ctor, std::move(elab));
    }
    case TypeKind::Pi: {
      const auto& p = std::get<PiTy>(a.node().v);
      Type dom = wf_type(p.domain);
      std::string z = freshen(p.var, free_vars(p.codomain));
      Type cod = (z == p.var) ? p.codomain : subst(p.codomain, p.var, mk_var(z));
      CtxGuard g(ctx_, VarDecl{z, dom});
      return mk_pi(z, dom, wf_type(cod));
    }
    case TypeKind::Psub: {
      const auto& p = std::get<PsubTy>(a.node().v);
      Type base = wf_type(p.base);
      LocGuard lg(loc_, "subtype predicate");
      Term pred = check(p.pred, mk_arrow(base, mk_bool()));
      return mk_psub(base, pred);
    }
  }
  return a;
}

// ---------------- Type equality and subtyping ----------------

void Checker::core_equal(const Type& a, const Type& b) {
  if (kind(a) == TypeKind::Bool && kind(b) == TypeKind::Bool) return;
  if (const auto* ba = dhol::get_if<BaseApp>(a)) {
    const auto* bb = dhol::get_if<BaseApp>(b);
    if (!bb || ba->ctor != bb->ctor)
      throw CheckError("type mismatch: " + pretty(a) + " vs " + pretty(b), loc_string());
    const TypeDecl* td = thy_.find_type(ba->ctor);
    if (!td || td->telescope.size() != ba->args.size() || ba->args.size() != bb->args.size())
      throw CheckError("malformed base type in equality check: " + pretty(a), loc_string());
    for (std::size_t i = 0; i < ba->args.size(); ++i) {
      if (alpha_eq(ba->args[i], bb->args[i])) continue;
      Type ti = td->telescope[i].second;
      for (std::size_t j = 0; j < i; ++j) ti = subst(ti, td->telescope[j].first, bb->args[j]);
      emit(mk_eq(ti, ba->args[i], bb->args[i]),
           Provenance{ObligationKind::BaseArgEq, ba->ctor, static_cast<int>(i), ""});
    }
    return;
  }
  if (const auto* pa = dhol::get_if<PiTy>(a)) {
    const auto* pb = dhol::get_if<PiTy>(b);
    if (!pb)
      throw CheckError("type mismatch: " + pretty(a) + " vs " + pretty(b), loc_string());
    type_equal(pa->domain, pb->domain);
    std::string z = freshen(pa->var, free_vars(pa->codomain));
    Type ca = (z == pa->var) ? pa->codomain : subst(pa->codomain, pa->var, mk_var(z));
    Type cb = (z == pb->var) ? pb->codomain : subst(pb->codomain, pb->var, mk_var(z));
    CtxGuard g(ctx_, VarDecl{z, pa->domain});
    type_equal(ca, cb);
    return;
  }
  throw CheckError("type mismatch: " + pretty(a) + " vs " + pretty(b), loc_string());
}

void Checker::type_equal(const Type& a, const Type& b) {
  if (alpha_eq(a, b)) return;
  NormParts pa = norm_parts(a);
  NormParts pb = norm_parts(b);
  core_equal(pa.core, pb.core);
  if (pa.preds.empty() && pb.preds.empty()) return;
  std::set<std::string> avoid = names_in_scope();
  collect_free_vars(pa.core, avoid);
  for (const Term& p : pa.preds) collect_free_vars(p, avoid);
  for (const Term& p : pb.preds) collect_free_vars(p, avoid);
  std::string x = fresh_name("x", avoid);
  Term lhs = fold_apply(pa.preds, x);
  Term rhs = fold_apply(pb.preds, x);
  if (alpha_eq(lhs, rhs)) return;
  emit(mk_forall(x, pa.core, mk_eq(mk_bool(), lhs, rhs)),
       Provenance{ObligationKind::TypeEqPred, "", -1, ""});
}

void Checker::subtype(const Type& a, const Type& b) {
  if (alpha_eq(a, b)) return;
  NormParts pa = norm_parts(a);
  NormParts pb = norm_parts(b);
  if (kind(pa.core) == TypeKind::Pi && kind(pb.core) == TypeKind::Pi) {
    const auto& xa = std::get<PiTy>(pa.core.node().v);
    const auto& xb = std::get<PiTy>(pb.core.node().v);
    subtype(xb.domain, xa.domain); // domains are contravariant
    std::string z = freshen(xa.var, free_vars(xa.codomain));
    Type ca = (z == xa.var) ? xa.codomain : subst(xa.codomain, xa.var, mk_var(z));
    Type cb = (z == xb.var) ? xb.codomain : subst(xb.codomain, xb.var, mk_var(z));
    CtxGuard g(ctx_, VarDecl{z, xb.domain});
    subtype(ca, cb);
  } else {
    core_equal(pa.core, pb.core);
  }
  if (pb.preds.empty()) return; // the larger type carries no predicate
  std::set<std::string> avoid = names_in_scope();
  collect_free_vars(pa.core, avoid);
  for (const Term& p : pa.preds) collect_free_vars(p, avoid);
  for (const Term& p : pb.preds) collect_free_vars(p, avoid);
  std::string x = fresh_name("x", avoid);
  Term rhs = fold_apply(pb.preds, x);
  if (!pa.preds.empty()) {
    Term lhs = fold_apply(pa.preds, x);
    if (alpha_eq(lhs, rhs)) return;
    CtxGuard g(ctx_, VarDecl{x, pa.core});
    emit(mk_impl(lhs, rhs), Provenance{ObligationKind::PsubVariance, "", -1, ""});
  } else {
    CtxGuard g(ctx_, VarDecl{x, pa.core});
    emit(rhs, Provenance{ObligationKind::PsubVariance, "", -1, ""});
  }
}

// ---------------- Term checking ----------------

namespace {

void collect_spine(const Term& t, Term& head, std::vector<Term>& args) {
  if (const auto* a = dhol::get_if<AppT>(t)) {
    collect_spine(a->fn, head, args);
    args.push_back(a->arg);
  } else {
    head = t;
  }
}

bool is_meta(const Term& t) {
  const auto* v = dhol::get_if<VarT>(t);
  return v && !v->name.empty() && v->name[0] == '?';
}

void match_term(const Term& pat, const Term& g, std::map<std::string, Term>& sol);

// First-order matching of a type pattern (containing ?-variables in term
// positions) against a ground type. Positions that fail to line up are
// simply skipped: they surface later as ordinary obligations or errors in
// the final checking pass, which reports them far more precisely.
void match_type(const Type& pat, const Type& g, std::map<std::string, Term>& sol) {
  switch (kind(pat)) {
    case TypeKind::Bool:
      return;
    case TypeKind::Base: {
      const auto* pb = dhol::get_if<BaseApp>(pat);
      const auto* gb = dhol::get_if<BaseApp>(g);
      if (!gb || pb->ctor != gb->ctor || pb->args.size() != gb->args.size()) return;
      for (std::size_t i = 0; i < pb->args.size(); ++i) match_term(pb->args[i], gb->args[i], sol);
      return;
    }
    case TypeKind::Pi: {
      const auto* pp = dhol::get_if<PiTy>(pat);
      const auto* gp = dhol::get_if<PiTy>(g);
      if (!gp) return;
      match_type(pp->domain, gp->domain, sol);
      Type gcod = (gp->var == pp->var) ? gp->codomain : subst(gp->codomain, gp->var, mk_var(pp->var));
      match_type(pp->codomain, gcod, sol);
      return;
    }
    case TypeKind::Psub: {
      const auto* pp = dhol::get_if<PsubTy>(pat);
      if (const auto* gp = dhol::get_if<PsubTy>(g)) {
        match_type(pp->base, gp->base, sol);
        match_term(pp->pred, gp->pred, sol);
      } else {
        match_type(pp->base, g, sol);
      }
      return;
    }
  }
}

void match_term(const Term& pat, const Term& g, std::map<std::string, Term>& sol) {
  if (is_meta(pat)) {
    const std::string& m = std::get<VarT>(pat.node().v).name;
    sol.emplace(m, g); // first solution wins; disagreements resurface later
    return;
  }
  if (kind(pat) != kind(g)) return;
  switch (kind(pat)) {
    case TermKind::App: {
      const auto& pa = std::get<AppT>(pat.node().v);
      const auto& ga = std::get<AppT>(g.node().v);
      match_term(pa.fn, ga.fn, sol);
      match_term(pa.arg, ga.arg, sol);
      return;
    }
    case TermKind::Lam: {
      const auto& pl = std::get<LamT>(pat.node().v);
      const auto& gl = std::get<LamT>(g.node().v);
      match_type(pl.ty, gl.ty, sol);
      Term gb = (gl.var == pl.var) ? gl.body : subst(gl.body, gl.var, mk_var(pl.var));
      match_term(pl.body, gb, sol);
      return;
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      const auto get_parts = [](const Term& t) {
        if (const auto* f = dhol::get_if<ForallT>(t))
          return std::tuple<const std::string&, const Type&, const Term&>(f->var, f->ty, f->body);
        const auto* e = dhol::get_if<ExistsT>(t);
        return std::tuple<const std::string&, const Type&, const Term&>(e->var, e->ty, e->body);
      };
      auto [pv, pt, pb] = get_parts(pat);
      auto [gv, gt, gb] = get_parts(g);
      match_type(pt, gt, sol);
      Term gbody = (gv == pv) ? gb : subst(gb, gv, mk_var(pv));
      match_term(pb, gbody, sol);
      return;
    }
    case TermKind::Eq: {
      const auto& pe = std::get<EqT>(pat.node().v);
      const auto& ge = std::get<EqT>(g.node().v);
      if (pe.at && ge.at) match_type(*pe.at, *ge.at, sol);
      match_term(pe.lhs, ge.lhs, sol);
      match_term(pe.rhs, ge.rhs, sol);
      return;
    }
    case TermKind::Impl: {
      const auto& pi = std::get<ImplT>(pat.node().v);
      const auto& gi = std::get<ImplT>(g.node().v);
      match_term(pi.lhs, gi.lhs, sol);
      match_term(pi.rhs, gi.rhs, sol);
      return;
    }
    case TermKind::And: {
      const auto& pi = std::get<AndT>(pat.node().v);
      const auto& gi = std::get<AndT>(g.node().v);
      match_term(pi.lhs, gi.lhs, sol);
      match_term(pi.rhs, gi.rhs, sol);
      return;
    }
    case TermKind::Or: {
      const auto& pi = std::get<OrT>(pat.node().v);
      const auto& gi = std::get<OrT>(g.node().v);
      match_term(pi.lhs, gi.lhs, sol);
      match_term(pi.rhs, gi.rhs, sol);
      return;
    }
    case TermKind::Not: {
      match_term(std::get<NotT>(pat.node().v).arg, std::get<NotT>(g.node().v).arg, sol);
      return;
    }
    default:
      return;
  }
}

} // namespace

InferResult Checker::infer_app_plain(const Term& fn_elab, const Type& fn_ty,
                                     const std::vector<Term>& args) {
  Term cur = fn_elab;
  Type ty = fn_ty;
  for (std::size_t i = 0; i < args.size(); ++i) {
    ty = psub_strip(ty);
    const auto* pi = dhol::get_if<PiTy>(ty);
    if (!pi)
      throw CheckError("not a function: " + pretty(cur) + " has type " + pretty(ty),
                       loc_string());
    Term ae = check(args[i], pi->domain);
    ty = subst(pi->codomain, pi->var, ae);
    cur = mk_app(cur, ae);
  }
  return {cur, ty};
}

InferResult Checker::infer_app(const Term& spine, const Type* expected) {
  Term head;
  std::vector<Term> args;
  collect_spine(spine, head, args);
  bool has_hole = std::any_of(args.begin(), args.end(),
                              [](const Term& a) { return kind(a) == TermKind::Hole; });
  if (!has_hole) {
    InferResult h = infer(head);
    return infer_app_plain(h.elaborated, h.type, args);
  }

  // Exploratory pass: walk the spine without emitting obligations, standing
  // in a ?-variable for each placeholder, and solve the ?-variables by
  // matching inferred argument types against the expected domains (and, if
  // available, the expected result type against the final codomain).
  std::map<std::string, Term> sol;
  {
    SilentGuard sg(silent_);
    InferResult h = infer(head);
    Type cur = h.type;
    for (std::size_t i = 0; i < args.size(); ++i) {
      cur = psub_strip(cur);
      const auto* pi = dhol::get_if<PiTy>(cur);
      if (!pi)
        throw CheckError("not a function while solving placeholders: type " + pretty(cur),
                         loc_string());
      if (kind(args[i]) == TermKind::Hole) {
        cur = subst(pi->codomain, pi->var, mk_var("?" + std::to_string(i)));
      } else {
        InferResult ai = infer(args[i]);
        match_type(pi->domain, ai.type, sol);
        cur = subst(pi->codomain, pi->var, ai.elaborated);
      }
    }
    if (expected) match_type(cur, *expected, sol);
  }

  std::vector<Term> filled = args;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (kind(args[i]) != TermKind::Hole) continue;
    auto it = sol.find("?" + std::to_string(i));
    if (it == sol.end())
      throw CheckError("cannot solve placeholder argument " + std::to_string(i) +
                           " of " + pretty(head),
                       loc_string());
    filled[i] = it->second;
  }

  // Final pass over the fully explicit spine; this is where obligations and
  // precise errors are produced.
  InferResult h = infer(head);
  return infer_app_plain(h.elaborated, h.type, filled);
}

InferResult Checker::infer(const Term& t) {
  switch (kind(t)) {
    case TermKind::Const: {
      const auto& c = std::get<ConstT>(t.node().v);
      const ConstDecl* cd = thy_.find_const(c.name);
      if (!cd) throw CheckError("unknown constant '" + c.name + "'", loc_string());
      return {t, cd->ty};
    }
    case TermKind::Var: {
      const auto& v = std::get<VarT>(t.node().v);
      const VarDecl* vd = ctx_.find_var(v.name);
      if (!vd) throw CheckError("unbound variable '" + v.name + "'", loc_string());
      return {t, vd->ty};
    }
    case TermKind::True:
    case TermKind::False:
      return {t, mk_bool()};
    case TermKind::Not: {
      const auto& n = std::get<NotT>(t.node().v);
      return {mk_not(check(n.arg, mk_bool())), mk_bool()};
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      Term l = check(i.lhs, mk_bool());
      std::string nm = fresh_name("ass", names_in_scope());
      CtxGuard g(ctx_, Assumption{nm, l});
      Term r = check(i.rhs, mk_bool());
      return {mk_impl(l, r), mk_bool()};
    }
    case TermKind::And: {
      const auto& i = std::get<AndT>(t.node().v);
      Term l = check(i.lhs, mk_bool());
      std::string nm = fresh_name("ass", names_in_scope());
      CtxGuard g(ctx_, Assumption{nm, l});
      Term r = check(i.rhs, mk_bool());
      return {mk_and(l, r), mk_bool()};
    }
    case TermKind::Or: {
      const auto& i = std::get<OrT>(t.node().v);
      Term l = check(i.lhs, mk_bool());
      std::string nm = fresh_name("ass", names_in_scope());
      CtxGuard g(ctx_, Assumption{nm, mk_not(l)});
      Term r = check(i.rhs, mk_bool());
      return {mk_or(l, r), mk_bool()};
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      const bool is_all = kind(t) == TermKind::Forall;
      const std::string& var = is_all ? std::get<ForallT>(t.node().v).var
                                      : std::get<ExistsT>(t.node().v).var;
      const Type& ty = is_all ? std::get<ForallT>(t.node().v).ty
                              : std::get<ExistsT>(t.node().v).ty;
      const Term& body = is_all ? std::get<ForallT>(t.node().v).body
                                : std::get<ExistsT>(t.node().v).body;
      Type a = wf_type(ty);
      std::string z = freshen(var, free_vars(body));
      Term b = (z == var) ? body : subst(body, var, mk_var(z));
      CtxGuard g(ctx_, VarDecl{z, a});
      Term be = check(b, mk_bool());
      return {is_all ? mk_forall(z, a, be) : mk_exists(z, a, be), mk_bool()};
    }
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      Type a = wf_type(l.ty);
      std::string z = freshen(l.var, free_vars(l.body));
      Term b = (z == l.var) ? l.body : subst(l.body, l.var, mk_var(z));
      CtxGuard g(ctx_, VarDecl{z, a});
      InferResult ir = infer(b);
      return {mk_lam(z, a, ir.elaborated), mk_pi(z, a, ir.type)};
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      if (e.at) {
        Type a = wf_type(*e.at);
        Term l = check(e.lhs, a);
        Term r = check(e.rhs, a);
        return {mk_eq(a, l, r), mk_bool()};
      }
      InferResult li = infer(e.lhs);
      Term r = check(e.rhs, li.type);
      return {mk_eq(li.type, li.elaborated, r), mk_bool()};
    }
    case TermKind::App:
      return infer_app(t, nullptr);
    case TermKind::Hole:
      throw CheckError("placeholder cannot be inferred outside an application", loc_string());
  }
  throw CheckError("unhandled term form", loc_string());
}

Term Checker::check(const Term& t, const Type& expected) {
  if (const auto* ps = dhol::get_if<PsubTy>(expected)) {
    Term te = check(t, ps->base);
    emit(beta_apply(ps->pred, te), Provenance{ObligationKind::PsubIntro, "", -1, ""});
    return te;
  }
  if (kind(t) == TermKind::Lam && kind(expected) == TypeKind::Pi) {
    const auto& lam = std::get<LamT>(t.node().v);
    const auto& pi = std::get<PiTy>(expected.node().v);
    Type dom = wf_type(lam.ty);
    {
      LocGuard lg(loc_, "lambda domain");
      type_equal(dom, pi.domain);
    }
    std::set<std::string> fvs = free_vars(lam.body);
    collect_free_vars(pi.codomain, fvs);
    fvs.insert(pi.var);
    std::string z = freshen(lam.var, fvs);
    Term body = (z == lam.var) ? lam.body : subst(lam.body, lam.var, mk_var(z));
    Type cod = (z == pi.var) ? pi.codomain : subst(pi.codomain, pi.var, mk_var(z));
    CtxGuard g(ctx_, VarDecl{z, dom});
    Term be = check(body, cod);
    return mk_lam(z, dom, be);
  }
  if (kind(t) == TermKind::Hole)
    throw CheckError("unresolved placeholder", loc_string());
  if (kind(t) == TermKind::App) {
    InferResult ir = infer_app(t, &expected);
    subtype(ir.type, expected);
    return ir.elaborated;
  }
  InferResult ir = infer(t);
  subtype(ir.type, expected);
  return ir.elaborated;
}

// ---------------- Declarations ----------------

void Checker::load_theory(const Theory& raw) {
  for (const auto& d : raw.decls) {
    if (const auto* td = std::get_if<TypeDecl>(&d)) {
      LocGuard lg(loc_, "type " + td->name);
      if (thy_.find_type(td->name) || thy_.find_const(td->name))
        throw CheckError("duplicate symbol '" + td->name + "'", loc_string());
      TypeDecl out{td->name, {}};
      CtxPopper pop(ctx_);
      std::vector<std::pair<std::string, std::string>> renames;
      for (const auto& [xi, ti_raw] : td->telescope) {
        Type ti = ti_raw;
        for (const auto& [from, to] : renames) ti = subst(ti, from, mk_var(to));
        ti = wf_type(ti);
        std::string zi = freshen(xi, {});
        if (zi != xi) renames.emplace_back(xi, zi);
        out.telescope.emplace_back(zi, ti);
        ctx_.entries.push_back(VarDecl{zi, ti});
      }
      thy_.decls.push_back(std::move(out));
    } else if (const auto* cd = std::get_if<ConstDecl>(&d)) {
      LocGuard lg(loc_, "constant " + cd->name);
      if (thy_.find_type(cd->name) || thy_.find_const(cd->name))
        throw CheckError("duplicate symbol '" + cd->name + "'", loc_string());
      Type ty = wf_type(cd->ty);
      thy_.decls.push_back(ConstDecl{cd->name, ty});
    } else {
      const auto& ad = std::get<AxiomDecl>(d);
      LocGuard lg(loc_, "axiom " + ad.name);
      if (axiom_names_.count(ad.name))
        throw CheckError("duplicate axiom name '" + ad.name + "'", loc_string());
      Term f = check(ad.formula, mk_bool());
      axiom_names_.insert(ad.name);
      thy_.decls.push_back(AxiomDecl{ad.name, f});
    }
  }
}

void Checker::load_context(const Context& raw) {
  for (const auto& e : raw.entries) {
    if (const auto* vd = std::get_if<VarDecl>(&e)) {
      LocGuard lg(loc_, "variable " + vd->name);
      if (ctx_.find_var(vd->name))
        throw CheckError("duplicate context variable '" + vd->name + "'", loc_string());
      if (thy_.find_type(vd->name) || thy_.find_const(vd->name))
        throw CheckError("context variable '" + vd->name + "' collides with a theory symbol",
                         loc_string());
      Type ty = wf_type(vd->ty);
      ctx_.entries.push_back(VarDecl{vd->name, ty});
    } else {
      const auto& as = std::get<Assumption>(e);
      LocGuard lg(loc_, "assumption " + as.name);
      if (axiom_names_.count(as.name) || find_assumption(ctx_, as.name))
        throw CheckError("duplicate assumption name '" + as.name + "'", loc_string());
      Term f = check(as.formula, mk_bool());
      axiom_names_.insert(as.name);
      ctx_.entries.push_back(Assumption{as.name, f});
    }
  }
}

Term Checker::check_formula(const Term& raw, const std::string& where) {
  LocGuard lg(loc_, where);
  return check(raw, mk_bool());
}

// ---------------- Whole-input checking ----------------

namespace {

CheckReport finish(Checker& ck, CheckReport r) {
  r.theory = ck.theory();
  r.context = ck.context();
  r.obligations = ck.obligations();
  r.outcomes = ck.outcomes();
  if (r.verdict != Verdict::Rejected)
    r.verdict = ck.saw_unknown() ? Verdict::Inconclusive : Verdict::Accepted;
  if (r.verdict == Verdict::Inconclusive && r.reason.empty())
    r.reason = "some proof obligations could not be discharged";
  return r;
}

} // namespace

CheckReport check_theory(const Theory& thy, ObligationOracle& oracle) {
  Checker ck(oracle);
  CheckReport r;
  try {
    ck.load_theory(thy);
  } catch (const CheckError& e) {
    r.verdict = Verdict::Rejected;
    r.reason = e.reason;
    r.location = e.location;
  }
  return finish(ck, std::move(r));
}

CheckReport check_problem(const Theory& thy, const Context& ctx,
                          const std::optional<Term>& conjecture, ObligationOracle& oracle) {
  Checker ck(oracle);
  CheckReport r;
  try {
    ck.load_theory(thy);
    ck.load_context(ctx);
    if (conjecture) r.conjecture = ck.check_formula(*conjecture, "conjecture");
  } catch (const CheckError& e) {
    r.verdict = Verdict::Rejected;
    r.reason = e.reason;
    r.location = e.location;
    r.conjecture.reset();
  }
  return finish(ck, std::move(r));
}

} // namespace dholk::kernel
