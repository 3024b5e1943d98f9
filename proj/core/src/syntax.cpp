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

#include "dholk/syntax.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dholk {
namespace dhol {

namespace {
template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Type wrap(TypeNode n) { return Type(std::make_shared<const TypeNode>(std::move(n))); }
Term wrap(TermNode n) { return Term(std::make_shared<const TermNode>(std::move(n))); }
}  // namespace

// ---------------- Factories ----------------

Type mk_base(std::string ctor, std::vector<Term> args) {
  return wrap(TypeNode{BaseApp{std::move(ctor), std::move(args)}});
}
Type mk_pi(std::string var, Type domain, Type codomain) {
  return wrap(TypeNode{PiTy{std::move(var), std::move(domain), std::move(codomain)}});
}
Type mk_bool() { return wrap(TypeNode{BoolTy{}}); }
Type mk_psub(Type base, Term pred) {
  return wrap(TypeNode{PsubTy{std::move(base), std::move(pred)}});
}
Type mk_arrow(Type domain, Type codomain) {
  std::string v = "x";
  auto fv = free_vars(codomain);
  if (fv.count(v)) v = fresh_name(v, fv);
  return mk_pi(v, std::move(domain), std::move(codomain));
}

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
Term mk_hole() { return wrap(TermNode{HoleT{}}); }

// ---------------- Theory / Context lookup ----------------

const TypeDecl* Theory::find_type(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* td = std::get_if<TypeDecl>(&d); td && td->name == name) return td;
  return nullptr;
}
const ConstDecl* Theory::find_const(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* cd = std::get_if<ConstDecl>(&d); cd && cd->name == name) return cd;
  return nullptr;
}
const AxiomDecl* Theory::find_axiom(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* ad = std::get_if<AxiomDecl>(&d); ad && ad->name == name) return ad;
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
Context Context::extended(ContextEntry e) const {
  Context out = *this;
  out.entries.push_back(std::move(e));
  return out;
}

// ---------------- Free variables ----------------

void collect_free_vars(const Type& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const BaseApp& b) {
                   for (const Term& a : b.args) collect_free_vars(a, out);
                 },
                 [&](const PiTy& p) {
                   collect_free_vars(p.domain, out);
                   std::set<std::string> inner;
                   collect_free_vars(p.codomain, inner);
                   inner.erase(p.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const BoolTy&) {},
                 [&](const PsubTy& p) {
                   collect_free_vars(p.base, out);
                   collect_free_vars(p.pred, out);
                 },
             },
             t.node().v);
}

void collect_free_vars(const Term& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const ConstT&) {},
                 [&](const VarT& v) { out.insert(v.name); },
                 [&](const LamT& l) {
                   collect_free_vars(l.ty, out);
                   std::set<std::string> inner;
                   collect_free_vars(l.body, inner);
                   inner.erase(l.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const AppT& a) {
                   collect_free_vars(a.fn, out);
                   collect_free_vars(a.arg, out);
                 },
                 [&](const EqT& e) {
                   if (e.at) collect_free_vars(*e.at, out);
                   collect_free_vars(e.lhs, out);
                   collect_free_vars(e.rhs, out);
                 },
                 [&](const ImplT& i) {
                   collect_free_vars(i.lhs, out);
                   collect_free_vars(i.rhs, out);
                 },
                 [&](const ForallT& f) {
                   collect_free_vars(f.ty, out);
                   std::set<std::string> inner;
                   collect_free_vars(f.body, inner);
                   inner.erase(f.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const ExistsT& f) {
                   collect_free_vars(f.ty, out);
                   std::set<std::string> inner;
                   collect_free_vars(f.body, inner);
                   inner.erase(f.var);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const AndT& a) {
                   collect_free_vars(a.lhs, out);
                   collect_free_vars(a.rhs, out);
                 },
                 [&](const OrT& o) {
                   collect_free_vars(o.lhs, out);
                   collect_free_vars(o.rhs, out);
                 },
                 [&](const NotT& n) { collect_free_vars(n.arg, out); },
                 [&](const TrueT&) {},
                 [&](const FalseT&) {},
                 [&](const HoleT&) {},
             },
             t.node().v);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free_vars(t, out);
  return out;
}
std::set<std::string> free_vars(const Type& t) {
  std::set<std::string> out;
  collect_free_vars(t, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

// ---------------- Substitution ----------------

namespace {

// Shared binder handling for Lam/Forall/Exists/Pi. Renames the binder when it
// would capture a free variable of `u` inside the body.
template <class Rebuild>
auto subst_binder(const std::string& var, const Type& ty, const Term& body,
                  const std::string& x, const Term& u, Rebuild rebuild) {
  Type ty2 = subst(ty, x, u);
  if (var == x) return rebuild(var, ty2, body);
  bool x_in_body = free_vars(body).count(x) != 0;
  if (!x_in_body) return rebuild(var, ty2, body);
  if (free_vars(u).count(var)) {
    std::set<std::string> avoid = free_vars(body);
    auto fvu = free_vars(u);
    avoid.insert(fvu.begin(), fvu.end());
    avoid.insert(x);
    avoid.insert(var);
    std::string var2 = fresh_name(var, avoid);
    Term body2 = subst(body, var, mk_var(var2));
    return rebuild(var2, ty2, subst(body2, x, u));
  }
  return rebuild(var, ty2, subst(body, x, u));
}

}  // namespace

Type subst(const Type& t, const std::string& x, const Term& u) {
  return std::visit(
      overloaded{
          [&](const BaseApp& b) {
            std::vector<Term> args;
            args.reserve(b.args.size());
            for (const Term& a : b.args) args.push_back(subst(a, x, u));
            return mk_base(b.ctor, std::move(args));
          },
          [&](const PiTy& p) {
            Type dom = subst(p.domain, x, u);
            if (p.var == x) return mk_pi(p.var, dom, p.codomain);
            if (!free_vars(p.codomain).count(x)) return mk_pi(p.var, dom, p.codomain);
            if (free_vars(u).count(p.var)) {
              std::set<std::string> avoid = free_vars(p.codomain);
              auto fvu = free_vars(u);
              avoid.insert(fvu.begin(), fvu.end());
              avoid.insert(x);
              avoid.insert(p.var);
              std::string v2 = fresh_name(p.var, avoid);
              Type cod = subst(p.codomain, p.var, mk_var(v2));
              return mk_pi(v2, dom, subst(cod, x, u));
            }
            return mk_pi(p.var, dom, subst(p.codomain, x, u));
          },
          [&](const BoolTy&) { return t; },
          [&](const PsubTy& p) {
            return mk_psub(subst(p.base, x, u), subst(p.pred, x, u));
          },
      },
      t.node().v);
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
          [&](const EqT& e) {
            std::optional<Type> at;
            if (e.at) at = subst(*e.at, x, u);
            return mk_eq(std::move(at), subst(e.lhs, x, u), subst(e.rhs, x, u));
          },
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
          [&](const HoleT&) { return t; },
      },
      t.node().v);
}

// ---------------- Alpha equivalence ----------------

namespace {

struct AlphaEnv {
  std::map<std::string, int> left, right;
  int level = 0;

  AlphaEnv bind(const std::string& l, const std::string& r) const {
    AlphaEnv e = *this;
    e.left[l] = level;
    e.right[r] = level;
    e.level = level + 1;
    return e;
  }
};

bool aeq(const Term& a, const Term& b, const AlphaEnv& env);

bool aeq(const Type& a, const Type& b, const AlphaEnv& env) {
  if (kind(a) != kind(b)) return false;
  switch (kind(a)) {
    case TypeKind::Base: {
      const auto& x = std::get<BaseApp>(a.node().v);
      const auto& y = std::get<BaseApp>(b.node().v);
      if (x.ctor != y.ctor || x.args.size() != y.args.size()) return false;
      for (size_t i = 0; i < x.args.size(); ++i)
        if (!aeq(x.args[i], y.args[i], env)) return false;
      return true;
    }
    case TypeKind::Pi: {
      const auto& x = std::get<PiTy>(a.node().v);
      const auto& y = std::get<PiTy>(b.node().v);
      return aeq(x.domain, y.domain, env) &&
             aeq(x.codomain, y.codomain, env.bind(x.var, y.var));
    }
    case TypeKind::Bool:
      return true;
    case TypeKind::Psub: {
      const auto& x = std::get<PsubTy>(a.node().v);
      const auto& y = std::get<PsubTy>(b.node().v);
      return aeq(x.base, y.base, env) && aeq(x.pred, y.pred, env);
    }
  }
  return false;
}

bool aeq(const Term& a, const Term& b, const AlphaEnv& env) {
  if (kind(a) != kind(b)) return false;
  switch (kind(a)) {
    case TermKind::Const:
      return std::get<ConstT>(a.node().v).name == std::get<ConstT>(b.node().v).name;
    case TermKind::Var: {
      const auto& x = std::get<VarT>(a.node().v).name;
      const auto& y = std::get<VarT>(b.node().v).name;
      auto ix = env.left.find(x);
      auto iy = env.right.find(y);
      if (ix != env.left.end() || iy != env.right.end())
        return ix != env.left.end() && iy != env.right.end() && ix->second == iy->second;
      return x == y;
    }
    case TermKind::Lam: {
      const auto& x = std::get<LamT>(a.node().v);
      const auto& y = std::get<LamT>(b.node().v);
      return aeq(x.ty, y.ty, env) && aeq(x.body, y.body, env.bind(x.var, y.var));
    }
    case TermKind::App: {
      const auto& x = std::get<AppT>(a.node().v);
      const auto& y = std::get<AppT>(b.node().v);
      return aeq(x.fn, y.fn, env) && aeq(x.arg, y.arg, env);
    }
    case TermKind::Eq: {
      const auto& x = std::get<EqT>(a.node().v);
      const auto& y = std::get<EqT>(b.node().v);
      if (x.at.has_value() != y.at.has_value()) return false;
      if (x.at && !aeq(*x.at, *y.at, env)) return false;
      return aeq(x.lhs, y.lhs, env) && aeq(x.rhs, y.rhs, env);
    }
    case TermKind::Impl: {
      const auto& x = std::get<ImplT>(a.node().v);
      const auto& y = std::get<ImplT>(b.node().v);
      return aeq(x.lhs, y.lhs, env) && aeq(x.rhs, y.rhs, env);
    }
    case TermKind::Forall: {
      const auto& x = std::get<ForallT>(a.node().v);
      const auto& y = std::get<ForallT>(b.node().v);
      return aeq(x.ty, y.ty, env) && aeq(x.body, y.body, env.bind(x.var, y.var));
    }
    case TermKind::Exists: {
      const auto& x = std::get<ExistsT>(a.node().v);
      const auto& y = std::get<ExistsT>(b.node().v);
      return aeq(x.ty, y.ty, env) && aeq(x.body, y.body, env.bind(x.var, y.var));
    }
    case TermKind::And: {
      const auto& x = std::get<AndT>(a.node().v);
      const auto& y = std::get<AndT>(b.node().v);
      return aeq(x.lhs, y.lhs, env) && aeq(x.rhs, y.rhs, env);
    }
    case TermKind::Or: {
      const auto& x = std::get<OrT>(a.node().v);
      const auto& y = std::get<OrT>(b.node().v);
      return aeq(x.lhs, y.lhs, env) && aeq(x.rhs, y.rhs, env);
    }
    case TermKind::Not:
      return aeq(std::get<NotT>(a.node().v).arg, std::get<NotT>(b.node().v).arg, env);
    case TermKind::True:
    case TermKind::False:
    case TermKind::Hole:
      return true;
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) { return aeq(a, b, AlphaEnv{}); }
bool alpha_eq(const Type& a, const Type& b) { return aeq(a, b, AlphaEnv{}); }

// ---------------- Canonical keys ----------------

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

void key(const Term& t, const KeyEnv& env, std::ostringstream& os);

void key(const Type& t, const KeyEnv& env, std::ostringstream& os) {
  std::visit(overloaded{
                 [&](const BaseApp& b) {
                   os << "(b " << b.ctor;
                   for (const Term& a : b.args) {
                     os << ' ';
                     key(a, env, os);
                   }
                   os << ')';
                 },
                 [&](const PiTy& p) {
                   os << "(pi ";
                   key(p.domain, env, os);
                   os << ' ';
                   key(p.codomain, env.bind(p.var), os);
                   os << ')';
                 },
                 [&](const BoolTy&) { os << "o"; },
                 [&](const PsubTy& p) {
                   os << "(ps ";
                   key(p.base, env, os);
                   os << ' ';
                   key(p.pred, env, os);
                   os << ')';
                 },
             },
             t.node().v);
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
                   key(l.ty, env, os);
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
                   if (e.at) {
                     key(*e.at, env, os);
                   } else {
                     os << '?';
                   }
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
                   key(f.ty, env, os);
                   os << ' ';
                   key(f.body, env.bind(f.var), os);
                   os << ')';
                 },
                 [&](const ExistsT& f) {
                   os << "(? ";
                   key(f.ty, env, os);
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
                 [&](const TrueT&) { os << "T"; },
                 [&](const FalseT&) { os << "F"; },
                 [&](const HoleT&) { os << "_"; },
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
  key(t, KeyEnv{}, os);
  return os.str();
}

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
      // (^[x:$o]: x) = (^[x:$o]: x)
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

namespace {
Type desugar_type(const Type& t);

Term desugar_term(const Term& t) {
  if (is_sugar(t)) return desugar_term(expand_sugar(t));
  switch (kind(t)) {
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      return mk_lam(l.var, desugar_type(l.ty), desugar_term(l.body));
    }
    case TermKind::App: {
      const auto& a = std::get<AppT>(t.node().v);
      return mk_app(desugar_term(a.fn), desugar_term(a.arg));
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      std::optional<Type> at;
      if (e.at) at = desugar_type(*e.at);
      return mk_eq(std::move(at), desugar_term(e.lhs), desugar_term(e.rhs));
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      return mk_impl(desugar_term(i.lhs), desugar_term(i.rhs));
    }
    default:
      return t;  // unreachable: sugar handled above
  }
}

Type desugar_type(const Type& t) {
  switch (kind(t)) {
    case TypeKind::Base: {
      const auto& b = std::get<BaseApp>(t.node().v);
      std::vector<Term> args;
      args.reserve(b.args.size());
      for (const Term& a : b.args) args.push_back(desugar_term(a));
      return mk_base(b.ctor, std::move(args));
    }
    case TypeKind::Pi: {
      const auto& p = std::get<PiTy>(t.node().v);
      return mk_pi(p.var, desugar_type(p.domain), desugar_type(p.codomain));
    }
    case TypeKind::Bool:
      return t;
    case TypeKind::Psub: {
      const auto& p = std::get<PsubTy>(t.node().v);
      return mk_psub(desugar_type(p.base), desugar_term(p.pred));
    }
  }
  return t;
}
}  // namespace

Term desugar(const Term& t) { return desugar_term(t); }

Term beta_apply(const Term& p, const Term& t) {
  if (const auto* l = get_if<LamT>(p)) return subst(l->body, l->var, t);
  return mk_app(p, t);
}

namespace {
constexpr long kBetaFuel = 1000000;

Type bnf_type(const Type& t, long& fuel);

Term bnf(const Term& t, long& fuel) {
  if (--fuel <= 0) throw std::runtime_error("beta normalization fuel exhausted");
  switch (kind(t)) {
    case TermKind::Const:
    case TermKind::Var:
    case TermKind::True:
    case TermKind::False:
    case TermKind::Hole:
      return t;
    case TermKind::Lam: {
      const auto& l = std::get<LamT>(t.node().v);
      return mk_lam(l.var, bnf_type(l.ty, fuel), bnf(l.body, fuel));
    }
    case TermKind::App: {
      const auto& a = std::get<AppT>(t.node().v);
      Term fn = bnf(a.fn, fuel);
      if (const auto* l = get_if<LamT>(fn)) return bnf(subst(l->body, l->var, a.arg), fuel);
      return mk_app(fn, bnf(a.arg, fuel));
    }
    case TermKind::Eq: {
      const auto& e = std::get<EqT>(t.node().v);
      std::optional<Type> at;
      if (e.at) at = bnf_type(*e.at, fuel);
      return mk_eq(std::move(at), bnf(e.lhs, fuel), bnf(e.rhs, fuel));
    }
    case TermKind::Impl: {
      const auto& i = std::get<ImplT>(t.node().v);
      return mk_impl(bnf(i.lhs, fuel), bnf(i.rhs, fuel));
    }
    case TermKind::Forall: {
      const auto& f = std::get<ForallT>(t.node().v);
      return mk_forall(f.var, bnf_type(f.ty, fuel), bnf(f.body, fuel));
    }
    case TermKind::Exists: {
      const auto& f = std::get<ExistsT>(t.node().v);
      return mk_exists(f.var, bnf_type(f.ty, fuel), bnf(f.body, fuel));
    }
    case TermKind::And: {
      const auto& a = std::get<AndT>(t.node().v);
      return mk_and(bnf(a.lhs, fuel), bnf(a.rhs, fuel));
    }
    case TermKind::Or: {
      const auto& o = std::get<OrT>(t.node().v);
      return mk_or(bnf(o.lhs, fuel), bnf(o.rhs, fuel));
    }
    case TermKind::Not: {
      const auto& n = std::get<NotT>(t.node().v);
      return mk_not(bnf(n.arg, fuel));
    }
  }
  return t;
}

Type bnf_type(const Type& t, long& fuel) {
  switch (kind(t)) {
    case TypeKind::Base: {
      const auto& b = std::get<BaseApp>(t.node().v);
      std::vector<Term> args;
      args.reserve(b.args.size());
      for (const Term& a : b.args) args.push_back(bnf(a, fuel));
      return mk_base(b.ctor, std::move(args));
    }
    case TypeKind::Pi: {
      const auto& p = std::get<PiTy>(t.node().v);
      return mk_pi(p.var, bnf_type(p.domain, fuel), bnf_type(p.codomain, fuel));
    }
    case TypeKind::Bool:
      return t;
    case TypeKind::Psub: {
      const auto& p = std::get<PsubTy>(t.node().v);
      return mk_psub(bnf_type(p.base, fuel), bnf(p.pred, fuel));
    }
  }
  return t;
}
}  // namespace

Term beta_normalize(const Term& t) {
  long fuel = kBetaFuel;
  return bnf(t, fuel);
}

// ---------------- Pretty printing ----------------

namespace {

// prec: 0 top, 1 binary rhs, 2 application argument
void pp(const Term& t, std::ostringstream& os, int prec);

void pp(const Type& t, std::ostringstream& os, int prec) {
  std::visit(overloaded{
                 [&](const BaseApp& b) {
                   if (b.args.empty()) {
                     os << b.ctor;
                     return;
                   }
                   if (prec >= 2) os << '(';
                   os << b.ctor;
                   for (const Term& a : b.args) {
                     os << ' ';
                     pp(a, os, 2);
                   }
                   if (prec >= 2) os << ')';
                 },
                 [&](const PiTy& p) {
                   if (prec >= 1) os << '(';
                   if (free_vars(p.codomain).count(p.var)) {
                     os << "!>[" << p.var << ':';
                     pp(p.domain, os, 0);
                     os << "]: ";
                     pp(p.codomain, os, 0);
                   } else {
                     pp(p.domain, os, 1);
                     os << " > ";
                     pp(p.codomain, os, 0);
                   }
                   if (prec >= 1) os << ')';
                 },
                 [&](const BoolTy&) { os << "$o"; },
                 [&](const PsubTy& p) {
                   if (prec >= 1) os << '(';
                   pp(p.base, os, 1);
                   os << " ?| ";
                   pp(p.pred, os, 2);
                   if (prec >= 1) os << ')';
                 },
             },
             t.node().v);
}

void pp(const Term& t, std::ostringstream& os, int prec) {
  std::visit(overloaded{
                 [&](const ConstT& c) { os << c.name; },
                 [&](const VarT& v) { os << v.name; },
                 [&](const LamT& l) {
                   if (prec >= 1) os << '(';
                   os << "^[" << l.var << ':';
                   pp(l.ty, os, 0);
                   os << "]: ";
                   pp(l.body, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const AppT& a) {
                   if (prec >= 2) os << '(';
                   pp(a.fn, os, 1);
                   os << ' ';
                   pp(a.arg, os, 2);
                   if (prec >= 2) os << ')';
                 },
                 [&](const EqT& e) {
                   if (prec >= 1) os << '(';
                   pp(e.lhs, os, 1);
                   os << " =";
                   if (e.at) {
                     os << '_';
                     pp(*e.at, os, 2);
                   }
                   os << ' ';
                   pp(e.rhs, os, 1);
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
                   pp(f.ty, os, 0);
                   os << "]: ";
                   pp(f.body, os, 0);
                   if (prec >= 1) os << ')';
                 },
                 [&](const ExistsT& f) {
                   if (prec >= 1) os << '(';
                   os << "?[" << f.var << ':';
                   pp(f.ty, os, 0);
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
                   os << "~";
                   pp(n.arg, os, 2);
                 },
                 [&](const TrueT&) { os << "$true"; },
                 [&](const FalseT&) { os << "$false"; },
                 [&](const HoleT&) { os << "_"; },
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
  pp(t, os, 0);
  return os.str();
}
std::string pretty(const Context& ctx) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : ctx.entries) {
    if (!first) os << ", ";
    first = false;
    std::visit(overloaded{
                   [&](const VarDecl& v) { os << v.name << ':' << pretty(v.ty); },
                   [&](const Assumption& a) {
                     os << a.name << ": " << pretty(a.formula);
                   },
               },
               e);
  }
  return os.str();
}

}  // namespace dhol
}  // namespace dholk
