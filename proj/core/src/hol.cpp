/* Copyright 2026 The dholk Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "dholk/hol.hpp"

#include <map>
#include <sstream>

namespace dholk {
namespace hol {

namespace {
template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Type wrap(TypeNode n) { return Type(std::make_shared<const TypeNode>(std::move(n))); }
Term wrap(TermNode n) { return Term(std::make_shared<const TermNode>(std::move(n))); }
}  // namespace

Type mk_base(std::string name) { return wrap(TypeNode{BaseTy{std::move(name)}}); }
Type mk_arrow(Type from, Type to) {
  return wrap(TypeNode{ArrowTy{std::move(from), std::move(to)}});
}
Type mk_bool() { return wrap(TypeNode{BoolTy{}}); }

Term mk_const(std::string name) { return wrap(TermNode{ConstT{std::move(name)}}); }
Term mk_var(std::string name) { return wrap(TermNode{VarT{std::move(name)}}); }
Term mk_lam(std::string var, Type ty, Term body) {
  return wrap(TermNode{LamT{std::move(var), std::move(ty), std::move(body)}});
}
Term mk_app(Term fn, Term arg) {
  return wrap(TermNode{AppT{std::move(fn), std::move(arg)}});
}
Term mk_app(Term fn, const std::vector<Term>& args) {
  Term t = std::move(fn);
  for (const Term& a : args) t = mk_app(t, a);
  return t;
}
Term mk_eq(std::optional<Type> at, Term lhs, Term rhs) {
  return wrap(TermNode{EqT{std::move(at), std::move(lhs), std::move(rhs)}});
}
Term mk_impl(Term lhs, Term rhs) {
  return wrap(TermNode{ImplT{std::move(lhs), std::move(rhs)}});
}
Term mk_forall(std::string var, Type ty, Term body) {
  return wrap(TermNode{ForallT{std::move(var), std::move(ty), std::move(body)}});
}
Term mk_exists(std::string var, Type ty, Term body) {
  return wrap(TermNode{ExistsT{std::move(var), std::move(ty), std::move(body)}});
}
Term mk_and(Term lhs, Term rhs) {
  return wrap(TermNode{AndT{std::move(lhs), std::move(rhs)}});
}
Term mk_or(Term lhs, Term rhs) {
  return wrap(TermNode{OrT{std::move(lhs), std::move(rhs)}});
}
Term mk_not(Term arg) { return wrap(TermNode{NotT{std::move(arg)}}); }
Term mk_true() { return wrap(TermNode{TrueT{}}); }
Term mk_false() { return wrap(TermNode{FalseT{}}); }

// ---------------- Theory / context ----------------

bool Theory::has_type(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* td = std::get_if<TypeDecl>(&d); td && td->name == name) return true;
  return false;
}
const ConstDecl* Theory::find_const(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* cd = std::get_if<ConstDecl>(&d); cd && cd->name == name) return cd;
  return nullptr;
}
bool Theory::has_name(const std::string& name) const {
  for (const auto& d : decls) {
    const std::string& n = std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
    if (n == name) return true;
  }
  return false;
}

const VarDecl* Context::find_var(const std::string& name) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    if (const auto* vd = std::get_if<VarDecl>(&*it); vd && vd->name == name) return vd;
  return nullptr;
}
bool Context::has_name(const std::string& name) const {
  for (const auto& e : entries) {
    const std::string& n = std::visit([](const auto& x) -> const std::string& { return x.name; }, e);
    if (n == name) return true;
  }
  return false;
}

// ---------------- Structural helpers ----------------

namespace {
void fv(const Term& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const ConstT&) {},
                 [&](const VarT& v) { out.insert(v.name); },
                 [&](const LamT& l) {
                   std::set<std::string> inner;
                   fv(l.body, inner);
                   inner.erase(l.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const AppT& a) { fv(a.fn, out); fv(a.arg, out); },
                 [&](const EqT& e) { fv(e.lhs, out); fv(e.rhs, out); },
                 [&](const ImplT& i) { fv(i.lhs, out); fv(i.rhs, out); },
                 [&](const ForallT& f) {
                   std::set<std::string> inner;
                   fv(f.body, inner);
                   inner.erase(f.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const ExistsT& f) {
                   std::set<std::string> inner;
                   fv(f.body, inner);
                   inner.erase(f.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const AndT& a) { fv(a.lhs, out); fv(a.rhs, out); },
                 [&](const OrT& o) { fv(o.lhs, out); fv(o.rhs, out); },
                 [&](const NotT& n) { fv(n.arg, out); },
                 [&](const TrueT&) {},
                 [&](const FalseT&) {},
             },
             t.node().v);
}

std::string fresh(const std::string& base, const std::set<std::string>& avoid) {
  for (int k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

template <class Rebuild>
Term subst_binder(const std::string& var, const Type& ty, const Term& body,
                  const std::string& x, const Term& u, Rebuild rebuild) {
  if (var == x) return rebuild(var, ty, body);
  std::set<std::string> fvb;
  fv(body, fvb);
  if (!fvb.count(x)) return rebuild(var, ty, body);
  std::set<std::string> fvu;
  fv(u, fvu);
  if (fvu.count(var)) {
    std::set<std::string> avoid = fvb;
    avoid.insert(fvu.begin(), fvu.end());
    avoid.insert(x);
    avoid.insert(var);
    std::string var2 = fresh(var, avoid);
    Term body2 = subst(body, var, mk_var(var2));
    return rebuild(var2, ty, subst(body2, x, u));
  }
  return rebuild(var, ty, subst(body, x, u));
}
}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  fv(t, out);
  return out;
}

Term subst(const Term& t, const std::string& x, const Term& u) {
  return std::visit(
      overloaded{
          [&](const ConstT&) { return t; },
          [&](const VarT& v) { return v.name == x ? u : t; },
          [&](const LamT& l) {
            return subst_binder(l.var, l.ty, l.body, x, u,
                                [](std::string v, Type ty, Term b) {
                                  return mk_lam(std::move(v), std::move(ty), std::move(b));
                                });
          },
          [&](const AppT& a) { return mk_app(subst(a.fn, x, u), subst(a.arg, x, u)); },
          [&](const EqT& e) { return mk_eq(e.at, subst(e.lhs, x, u), subst(e.rhs, x, u)); },
          [&](const ImplT& i) { return mk_impl(subst(i.lhs, x, u), subst(i.rhs, x, u)); },
          [&](const ForallT& f) {
            return subst_binder(f.var, f.ty, f.body, x, u,
                                [](std::string v, Type ty, Term b) {
                                  return mk_forall(std::move(v), std::move(ty), std::move(b));
                                });
          },
          [&](const ExistsT& f) {
            return subst_binder(f.var, f.ty, f.body, x, u,
                                [](std::string v, Type ty, Term b) {
                                  return mk_exists(std::move(v), std::move(ty), std::move(b));
                                });
          },
          [&](const AndT& a) { return mk_and(subst(a.lhs, x, u), subst(a.rhs, x, u)); },
          [&](const OrT& o) { return mk_or(subst(o.lhs, x, u), subst(o.rhs, x, u)); },
          [&](const NotT& n) { return mk_not(subst(n.arg, x, u)); },
          [&](const TrueT&) { return t; },
          [&](const FalseT&) { return t; },
      },
      t.node().v);
}

bool type_eq(const Type& a, const Type& b) {
  if (kind(a) != kind(b)) return false;
  switch (kind(a)) {
    case TypeKind::Base:
      return std::get<BaseTy>(a.node().v).name == std::get<BaseTy>(b.node().v).name;
    case TypeKind::Arrow: {
      const auto& x = std::get<ArrowTy>(a.node().v);
      const auto& y = std::get<ArrowTy>(b.node().v);
      return type_eq(x.from, y.from) && type_eq(x.to, y.to);
    }
    case TypeKind::Bool:
      return true;
  }
  return false;
}

// ---------------- Canonical keys and alpha equivalence ----------------

namespace {
struct KeyEnv {
  std::map<std::string, int> bound;
  int level = 0;
  KeyEnv bind(const std::string& v) const {
    KeyEnv e = *this;
    e.bound[v] = level;
    e.level = level + 1;
    return e;
  }
};

void key_ty(const Type& t, std::ostringstream& os) {
  switch (kind(t)) {
    case TypeKind::Base:
      os << "b:" << std::get<BaseTy>(t.node().v).name;
      break;
    case TypeKind::Arrow: {
      const auto& a = std::get<ArrowTy>(t.node().v);
      os << "(> ";
      key_ty(a.from, os);
      os << ' ';
      key_ty(a.to, os);
      os << ')';
      break;
    }
    case TypeKind::Bool:
      os << 'o';
      break;
  }
}

void key(const Term& t, const KeyEnv& env, std::ostringstream& os) {
  std::visit(overloaded{
                 [&](const ConstT& c) { os << "c:" << c.name; },
                 [&](const VarT& v) {
                   auto it = env.bound.find(v.name);
                   if (it != env.bound.end())
                     os << '!' << it->second;
                   else
                     os << "v:" << v.name;
                 },
                 [&](const LamT& l) {
                   os << "(l ";
                   key_ty(l.ty, os);
                   os << ' ';
                   key(l.body, env.bind(l.var), os);
                   os << ')';
                 },
                 [&](const AppT& a) {
                   os << "(a ";
                   key(a.fn, env, os);
                   os << ' ';
                   key(a.arg, env, os);
                   os << ')';
                 },
                 [&](const EqT& e) {
                   os << "(= ";
                   if (e.at) key_ty(*e.at, os); else os << '?';
                   os << ' ';
                   key(e.lhs, env, os);
                   os << ' ';
                   key(e.rhs, env, os);
                   os << ')';
                 },
                 [&](const ImplT& i) {
                   os << "(=> ";
                   key(i.lhs, env, os);
                   os << ' ';
                   key(i.rhs, env, os);
                   os << ')';
                 },
                 [&](const ForallT& f) {
                   os << "(! ";
                   key_ty(f.ty, os);
                   os << ' ';
                   key(f.body, env.bind(f.var), os);
                   os << ')';
                 },
                 [&](const ExistsT& f) {
                   os << "(? ";
                   key_ty(f.ty, os);
                   os << ' ';
                   key(f.body, env.bind(f.var), os);
                   os << ')';
                 },
                 [&](const AndT& a) {
                   os << "(& ";
                   key(a.lhs, env, os);
                   os << ' ';
                   key(a.rhs, env, os);
                   os << ')';
                 },
                 [&](const OrT& o) {
                   os << "(| ";
                   key(o.lhs, env, os);
                   os << ' ';
                   key(o.rhs, env, os);
                   os << ')';
                 },
                 [&](const NotT& n) {
                   os << "(~ ";
                   key(n.arg, env, os);
                   os << ')';
                 },
                 [&](const TrueT&) { os << 'T'; },
                 [&](const FalseT&) { os << 'F'; },
             },
             t.node().v);
}
}  // namespace

std::string canon_key(const Term& t) {
  std::ostringstream os;
  key(t, KeyEnv{}, os);
  return os.str();
}
std::string canon_key(const Type& t) {
  std::ostringstream os;
  key_ty(t, os);
  return os.str();
}

bool alpha_eq(const Term& a, const Term& b) { return canon_key(a) == canon_key(b); }

// ---------------- Sugar ----------------

bool is_sugar(const Term& t) {
  switch (kind(t)) {
    case TermKind::Forall:
    case TermKind::Exists:
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Not:
    case TermKind::True:
    case TermKind::False:
      return true;
    default:
      return false;
  }
}

Term expand_sugar(const Term& t) {
  switch (kind(t)) {
    case TermKind::True: {
      Term id = mk_lam("x", mk_bool(), mk_var("x"));
      return mk_eq(mk_arrow(mk_bool(), mk_bool()), id, id);
    }
    case TermKind::False:
      return mk_forall("x", mk_bool(), mk_var("x"));
    case TermKind::Not:
      return mk_impl(std::get<NotT>(t.node().v).arg, mk_false());
    case TermKind::And: {
      const auto& a = std::get<AndT>(t.node().v);
      return mk_not(mk_impl(a.lhs, mk_not(a.rhs)));
    }
    case TermKind::Or: {
      const auto& o = std::get<OrT>(t.node().v);
      return mk_impl(mk_not(o.lhs), o.rhs);
    }
    case TermKind::Forall: {
      const auto& f = std::get<ForallT>(t.node().v);
      return mk_eq(mk_arrow(f.ty, mk_bool()), mk_lam(f.var, f.ty, f.body),
                   mk_lam(f.var, f.ty, mk_true()));
    }
    case TermKind::Exists: {
      const auto& f = std::get<ExistsT>(t.node().v);
      return mk_not(mk_forall(f.var, f.ty, mk_not(f.body)));
    }
    default:
      return t;
  }
}

Term desugar(const Term& t) {
  if (is_sugar(t)) return desugar(expand_sugar(t));
  switch (kind(t)) {
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      return mk_lam(l.var, l.ty, desugar(l.body));
    }
    case TermKind::App: {
      const auto& a = std::get<AppT>(t.node().v);
      return mk_app(desugar(a.fn), desugar(a.arg));
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      return mk_eq(e.at, desugar(e.lhs), desugar(e.rhs));
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      return mk_impl(desugar(i.lhs), desugar(i.rhs));
    }
    default:
      return t;
  }
}

// ---------------- Type checking ----------------

void wf_type(const Theory& thy, const Type& t) {
  switch (kind(t)) {
    case TypeKind::Base: {
      const auto& b = std::get<BaseTy>(t.node().v);
      if (!thy.has_type(b.name)) throw TypeError("undeclared base type: " + b.name);
      return;
    }
    case TypeKind::Arrow: {
      const auto& a = std::get<ArrowTy>(t.node().v);
      wf_type(thy, a.from);
      wf_type(thy, a.to);
      return;
    }
    case TypeKind::Bool:
      return;
  }
}

namespace {

Type infer_rec(const Theory& thy, Context& ctx, const Term& t, Term* elab);

void require_bool(const Theory& thy, Context& ctx, const Term& t, Term* elab,
                  const char* who) {
  Type ty = infer_rec(thy, ctx, t, elab);
  if (kind(ty) != TypeKind::Bool)
    throw TypeError(std::string(who) + " must be boolean, got " + pretty(ty));
}

Type infer_rec(const Theory& thy, Context& ctx, const Term& t, Term* elab) {
  switch (kind(t)) {
    case TermKind::Const: {
      const auto& c = std::get<ConstT>(t.node().v);
      const ConstDecl* d = thy.find_const(c.name);
      if (!d) throw TypeError("undeclared constant: " + c.name);
      if (elab) *elab = t;
      return d->ty;
    }
    case TermKind::Var: {
      const auto& v = std::get<VarT>(t.node().v);
      const VarDecl* d = ctx.find_var(v.name);
      if (!d) throw TypeError("unbound variable: " + v.name);
      if (elab) *elab = t;
      return d->ty;
    }
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      wf_type(thy, l.ty);
      ctx.entries.push_back(VarDecl{l.var, l.ty});
      Term body_e;
      Type bt = infer_rec(thy, ctx, l.body, elab ? &body_e : nullptr);
      ctx.entries.pop_back();
      if (elab) *elab = mk_lam(l.var, l.ty, body_e);
      return mk_arrow(l.ty, bt);
    }
    case TermKind::App: {
      const auto& a = std::get<AppT>(t.node().v);
      Term fn_e, arg_e;
      Type ft = infer_rec(thy, ctx, a.fn, elab ? &fn_e : nullptr);
      if (kind(ft) != TypeKind::Arrow)
        throw TypeError("application head is not a function: " + pretty(a.fn));
      const auto& arrow = std::get<ArrowTy>(ft.node().v);
      Type at = infer_rec(thy, ctx, a.arg, elab ? &arg_e : nullptr);
      if (!type_eq(at, arrow.from))
        throw TypeError("argument type mismatch: expected " + pretty(arrow.from) +
                        ", got " + pretty(at));
      if (elab) *elab = mk_app(fn_e, arg_e);
      return arrow.to;
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      Term lhs_e, rhs_e;
      Type lt = infer_rec(thy, ctx, e.lhs, elab ? &lhs_e : nullptr);
      if (e.at) {
        wf_type(thy, *e.at);
        if (!type_eq(lt, *e.at))
          throw TypeError("equality lhs has type " + pretty(lt) +
                          ", annotation says " + pretty(*e.at));
      }
      Type rt = infer_rec(thy, ctx, e.rhs, elab ? &rhs_e : nullptr);
      if (!type_eq(lt, rt))
        throw TypeError("equality between distinct types: " + pretty(lt) +
                        " vs " + pretty(rt));
      if (elab) *elab = mk_eq(e.at ? *e.at : lt, lhs_e, rhs_e);
      return mk_bool();
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      Term l_e, r_e;
      require_bool(thy, ctx, i.lhs, elab ? &l_e : nullptr, "implication lhs");
      require_bool(thy, ctx, i.rhs, elab ? &r_e : nullptr, "implication rhs");
      if (elab) *elab = mk_impl(l_e, r_e);
      return mk_bool();
    }
    case TermKind::Forall: {
      const auto& f = std::get<ForallT>(t.node().v);
      wf_type(thy, f.ty);
      ctx.entries.push_back(VarDecl{f.var, f.ty});
      Term body_e;
      require_bool(thy, ctx, f.body, elab ? &body_e : nullptr, "quantifier body");
      ctx.entries.pop_back();
      if (elab) *elab = mk_forall(f.var, f.ty, body_e);
      return mk_bool();
    }
    case TermKind::Exists: {
      const auto& f = std::get<ExistsT>(t.node().v);
      wf_type(thy, f.ty);
      ctx.entries.push_back(VarDecl{f.var, f.ty});
      Term body_e;
      require_bool(thy, ctx, f.body, elab ? &body_e : nullptr, "quantifier body");
      ctx.entries.pop_back();
      if (elab) *elab = mk_exists(f.var, f.ty, body_e);
      return mk_bool();
    }
    case TermKind::And: {
      const auto& a = std::get<AndT>(t.node().v);
      Term l_e, r_e;
      require_bool(thy, ctx, a.lhs, elab ? &l_e : nullptr, "conjunct");
      require_bool(thy, ctx, a.rhs, elab ? &r_e : nullptr, "conjunct");
      if (elab) *elab = mk_and(l_e, r_e);
      return mk_bool();
    }
    case TermKind::Or: {
      const auto& o = std::get<OrT>(t.node().v);
      Term l_e, r_e;
      require_bool(thy, ctx, o.lhs, elab ? &l_e : nullptr, "disjunct");
      require_bool(thy, ctx, o.rhs, elab ? &r_e : nullptr, "disjunct");
      if (elab) *elab = mk_or(l_e, r_e);
      return mk_bool();
    }
    case TermKind::Not: {
      const auto& n = std::get<NotT>(t.node().v);
      Term a_e;
      require_bool(thy, ctx, n.arg, elab ? &a_e : nullptr, "negated formula");
      if (elab) *elab = mk_not(a_e);
      return mk_bool();
    }
    case TermKind::True:
    case TermKind::False:
      if (elab) *elab = t;
      return mk_bool();
  }
  throw TypeError("unreachable term kind");
}

}  // namespace

Type infer(const Theory& thy, const Context& ctx, const Term& t, Term* elab) {
  Context scratch = ctx;
  return infer_rec(thy, scratch, t, elab);
}

void check_theory(const Theory& thy) {
  Theory prefix;
  std::set<std::string> symbols, axioms;
  for (const auto& d : thy.decls) {
    std::visit(overloaded{
                   [&](const TypeDecl& td) {
                     if (!symbols.insert(td.name).second)
                       throw TypeError("duplicate symbol: " + td.name);
                   },
                   [&](const ConstDecl& cd) {
                     if (!symbols.insert(cd.name).second)
                       throw TypeError("duplicate symbol: " + cd.name);
                     wf_type(prefix, cd.ty);
                   },
                   [&](const AxiomDecl& ad) {
                     if (!axioms.insert(ad.name).second)
                       throw TypeError("duplicate axiom name: " + ad.name);
                     Context empty;
                     Type ty = infer(prefix, empty, ad.formula);
                     if (kind(ty) != TypeKind::Bool)
                       throw TypeError("axiom " + ad.name + " is not boolean");
                   },
               },
               d);
    prefix.decls.push_back(d);
  }
}

void check_context(const Theory& thy, const Context& ctx) {
  Context prefix;
  std::set<std::string> names;
  for (const auto& e : ctx.entries) {
    std::visit(overloaded{
                   [&](const VarDecl& vd) {
                     if (!names.insert(vd.name).second)
                       throw TypeError("duplicate context name: " + vd.name);
                     wf_type(thy, vd.ty);
                   },
                   [&](const Assumption& as) {
                     if (!names.insert(as.name).second)
                       throw TypeError("duplicate context name: " + as.name);
                     Type ty = infer(thy, prefix, as.formula);
                     if (kind(ty) != TypeKind::Bool)
                       throw TypeError("assumption " + as.name + " is not boolean");
                   },
               },
               e);
    prefix.entries.push_back(e);
  }
}

void check_problem(const Problem& p) {
  check_theory(p.theory);
  check_context(p.theory, p.context);
  Type ty = infer(p.theory, p.context, p.conjecture);
  if (kind(ty) != TypeKind::Bool) throw TypeError("conjecture is not boolean");
}

// ---------------- Beta-eta normalization ----------------

namespace {

constexpr long kNormalizeFuel = 2000000;

Term nf(const Term& t, long& fuel) {
  if (--fuel <= 0) throw TypeError("normalization fuel exhausted");
  switch (kind(t)) {
    case TermKind::Const:
    case TermKind::Var:
    case TermKind::True:
    case TermKind::False:
      return t;
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      Term body = nf(l.body, fuel);
      if (const auto* app = get_if<AppT>(body)) {
        const auto* v = get_if<VarT>(app->arg);
        if (v && v->name == l.var && !free_vars(app->fn).count(l.var))
          return app->fn;
      }
      return mk_lam(l.var, l.ty, body);
    }
    case TermKind::App: {
      const auto& a = std::get<AppT>(t.node().v);
      Term fn = nf(a.fn, fuel);
      if (const auto* l = get_if<LamT>(fn))
        return nf(subst(l->body, l->var, a.arg), fuel);
      return mk_app(fn, nf(a.arg, fuel));
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      return mk_eq(e.at, nf(e.lhs, fuel), nf(e.rhs, fuel));
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      return mk_impl(nf(i.lhs, fuel), nf(i.rhs, fuel));
    }
    case TermKind::Forall: {
      const auto& f = std::get<ForallT>(t.node().v);
      return mk_forall(f.var, f.ty, nf(f.body, fuel));
    }
    case TermKind::Exists: {
      const auto& f = std::get<ExistsT>(t.node().v);
      return mk_exists(f.var, f.ty, nf(f.body, fuel));
    }
    case TermKind::And: {
      const auto& a = std::get<AndT>(t.node().v);
      return mk_and(nf(a.lhs, fuel), nf(a.rhs, fuel));
    }
    case TermKind::Or: {
      const auto& o = std::get<OrT>(t.node().v);
      return mk_or(nf(o.lhs, fuel), nf(o.rhs, fuel));
    }
    case TermKind::Not: {
      const auto& n = std::get<NotT>(t.node().v);
      return mk_not(nf(n.arg, fuel));
    }
  }
  return t;
}

}  // namespace

Term beta_eta_normalize(const Term& t) {
  long fuel = kNormalizeFuel;
  return nf(t, fuel);
}

// ---------------- Printing ----------------

namespace {
void pp_ty(const Type& t, std::ostringstream& os, bool atom) {
  switch (kind(t)) {
    case TypeKind::Base:
      os << std::get<BaseTy>(t.node().v).name;
      break;
    case TypeKind::Arrow: {
      const auto& a = std::get<ArrowTy>(t.node().v);
      if (atom) os << '(';
      pp_ty(a.from, os, true);
      os << " > ";
      pp_ty(a.to, os, false);
      if (atom) os << ')';
      break;
    }
    case TypeKind::Bool:
      os << "$o";
      break;
  }
}

void pp(const Term& t, std::ostringstream& os, int prec) {
  std::visit(overloaded{
                 [&](const ConstT& c) { os << c.name; },
                 [&](const VarT& v) { os << v.name; },
                 [&](const LamT& l) {
                   if (prec >= 1) os << '(';
                   os << "^[" << l.var << ':';
                   pp_ty(l.ty, os, false);
                   os << "]: ";
                   pp(l.body, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const AppT& a) {
                   if (prec >= 2) os << '(';
                   pp(a.fn, os, 1);
                   os << " @ ";
                   pp(a.arg, os, 2);
                   if (prec >= 2) os << ')';
                 },
                 [&](const EqT& e) {
                   if (prec >= 1) os << '(';
                   pp(e.lhs, os, 2);
                   os << " = ";
                   pp(e.rhs, os, 2);
                   if (prec >= 1) os << ')';
                 },
                 [&](const ImplT& i) {
                   if (prec >= 1) os << '(';
                   pp(i.lhs, os, 1);
                   os << " => ";
                   pp(i.rhs, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const ForallT& f) {
                   if (prec >= 1) os << '(';
                   os << "![" << f.var << ':';
                   pp_ty(f.ty, os, false);
                   os << "]: ";
                   pp(f.body, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const ExistsT& f) {
                   if (prec >= 1) os << '(';
                   os << "?[" << f.var << ':';
                   pp_ty(f.ty, os, false);
                   os << "]: ";
                   pp(f.body, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const AndT& a) {
                   if (prec >= 1) os << '(';
                   pp(a.lhs, os, 1);
                   os << " & ";
                   pp(a.rhs, os, 1);
                   if (prec >= 1) os << ')';
                 },
                 [&](const OrT& o) {
                   if (prec >= 1) os << '(';
                   pp(o.lhs, os, 1);
                   os << " | ";
                   pp(o.rhs, os, 1);
                   if (prec >= 1) os << ')';
                 },
                 [&](const NotT& n) {
                   os << '~';
                   pp(n.arg, os, 2);
                 },
                 [&](const TrueT&) { os << "$true"; },
                 [&](const FalseT&) { os << "$false"; },
             },
             t.node().v);
}
}  // namespace

std::string pretty(const Term& t) {
  std::ostringstream os;
  pp(t, os, 0);
  return os.str();
}
std::string pretty(const Type& t) {
  std::ostringstream os;
  pp_ty(t, os, false);
  return os.str();
}

}  // namespace hol
}  // namespace dholk
