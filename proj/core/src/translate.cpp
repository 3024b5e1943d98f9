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

#include "dholk/translate.hpp"

#include <set>
#include <vector>

namespace dholk::translate {

std::string per_constant_name(const std::string& type_ctor) { return type_ctor + "_per"; }
std::string typing_axiom_name(const std::string& const_name) { return const_name + "_tp"; }
std::string var_typing_assumption_name(const std::string& var) { return var + "_tp"; }

// ---------------- Types ----------------

hol::Type translate_type(const dhol::Type& a) {
  switch (dhol::kind(a)) {
    case dhol::TypeKind::Bool:
      return hol::mk_bool();
    case dhol::TypeKind::Base:
      return hol::mk_base(std::get<dhol::BaseApp>(a.node().v).ctor);
    case dhol::TypeKind::Pi: {
      const auto& p = std::get<dhol::PiTy>(a.node().v);
      return hol::mk_arrow(translate_type(p.domain), translate_type(p.codomain));
    }
    case dhol::TypeKind::Psub:
      return translate_type(std::get<dhol::PsubTy>(a.node().v).base);
  }
  return hol::mk_bool();
}

// ---------------- Relations ----------------

hol::Term per_of(const dhol::Type& a, const hol::Term& s, const hol::Term& t) {
  switch (dhol::kind(a)) {
    case dhol::TypeKind::Bool:
      return hol::mk_eq(hol::mk_bool(), s, t);
    case dhol::TypeKind::Base: {
      const auto& b = std::get<dhol::BaseApp>(a.node().v);
      hol::Term app = hol::mk_const(per_constant_name(b.ctor));
      for (const dhol::Term& arg : b.args) app = hol::mk_app(app, translate_term(arg));
      return hol::mk_app(hol::mk_app(app, s), t);
    }
    case dhol::TypeKind::Pi: {
      const auto& p = std::get<dhol::PiTy>(a.node().v);
      std::set<std::string> avoid = hol::free_vars(s);
      for (const std::string& n : hol::free_vars(t)) avoid.insert(n);
      dhol::collect_free_vars(a, avoid);
      std::string x1 = avoid.count(p.var) ? dhol::fresh_name(p.var, avoid) : p.var;
      avoid.insert(x1);
      std::string primed = p.var + "'";
      std::string x2 = avoid.count(primed) ? dhol::fresh_name(primed, avoid) : primed;
      hol::Type dom = translate_type(p.domain);
      dhol::Type cod = (x1 == p.var) ? p.codomain : dhol::subst(p.codomain, p.var, dhol::mk_var(x1));
      hol::Term rel = per_of(cod, hol::mk_app(s, hol::mk_var(x1)), hol::mk_app(t, hol::mk_var(x2)));
      hol::Term guard = per_of(p.domain, hol::mk_var(x1), hol::mk_var(x2));
      return hol::mk_forall(x1, dom, hol::mk_forall(x2, dom, hol::mk_impl(guard, rel)));
    }
    case dhol::TypeKind::Psub: {
      const auto& p = std::get<dhol::PsubTy>(a.node().v);
      hol::Term pred = translate_term(p.pred);
      return hol::mk_and(hol::mk_and(per_of(p.base, s, t), hol::mk_app(pred, s)),
                         hol::mk_app(pred, t));
    }
  }
  return hol::mk_true();
}

// ---------------- Terms ----------------

hol::Term translate_term(const dhol::Term& t) {
  switch (dhol::kind(t)) {
    case dhol::TermKind::Const:
      return hol::mk_const(std::get<dhol::ConstT>(t.node().v).name);
    case dhol::TermKind::Var:
      return hol::mk_var(std::get<dhol::VarT>(t.node().v).name);
    case dhol::TermKind::Lam: {
      const auto& l = std::get<dhol::LamT>(t.node().v);
      return hol::mk_lam(l.var, translate_type(l.ty), translate_term(l.body));
    }
    case dhol::TermKind::App: {
      const auto& a = std::get<dhol::AppT>(t.node().v);
      return hol::mk_app(translate_term(a.fn), translate_term(a.arg));
    }
    case dhol::TermKind::Eq: {
      const auto& e = std::get<dhol::EqT>(t.node().v);
      if (!e.at)
        throw TranslateError("equality without a type annotation cannot be translated; "
                             "run the checker first");
      return per_of(*e.at, translate_term(e.lhs), translate_term(e.rhs));
    }
    case dhol::TermKind::Impl: {
      const auto& i = std::get<dhol::ImplT>(t.node().v);
      return hol::mk_impl(translate_term(i.lhs), translate_term(i.rhs));
    }
    case dhol::TermKind::Forall: {
      const auto& f = std::get<dhol::ForallT>(t.node().v);
      hol::Term guard = per_of(f.ty, hol::mk_var(f.var), hol::mk_var(f.var));
      return hol::mk_forall(f.var, translate_type(f.ty),
                            hol::mk_impl(guard, translate_term(f.body)));
    }
    case dhol::TermKind::Exists: {
      const auto& f = std::get<dhol::ExistsT>(t.node().v);
      hol::Term guard = per_of(f.ty, hol::mk_var(f.var), hol::mk_var(f.var));
      return hol::mk_exists(f.var, translate_type(f.ty),
                            hol::mk_and(guard, translate_term(f.body)));
    }
    case dhol::TermKind::And: {
      const auto& i = std::get<dhol::AndT>(t.node().v);
      return hol::mk_and(translate_term(i.lhs), translate_term(i.rhs));
    }
    case dhol::TermKind::Or: {
      const auto& i = std::get<dhol::OrT>(t.node().v);
      return hol::mk_or(translate_term(i.lhs), translate_term(i.rhs));
    }
    case dhol::TermKind::Not:
      return hol::mk_not(translate_term(std::get<dhol::NotT>(t.node().v).arg));
    case dhol::TermKind::True:
      return hol::mk_true();
    case dhol::TermKind::False:
      return hol::mk_false();
    case dhol::TermKind::Hole:
      throw TranslateError("unresolved placeholder cannot be translated");
  }
  throw TranslateError("unhandled term form");
}

// ---------------- Theories ----------------

namespace {

// a_per applied to the telescope variables and two extra arguments.
hol::Term per_app(const std::string& per_name,
                  const std::vector<std::pair<std::string, dhol::Type>>& tel,
                  const hol::Term& u, const hol::Term& v) {
  hol::Term app = hol::mk_const(per_name);
  for (const auto& [x, ty] : tel) app = hol::mk_app(app, hol::mk_var(x));
  return hol::mk_app(hol::mk_app(app, u), v);
}

hol::Term quantify_telescope(const std::vector<std::pair<std::string, dhol::Type>>& tel,
                             hol::Term body) {
  for (auto it = tel.rbegin(); it != tel.rend(); ++it)
    body = hol::mk_forall(it->first, translate_type(it->second), std::move(body));
  return body;
}

} // namespace

TranslationOutput translate_theory(const dhol::Theory& thy, AxiomSet axioms) {
  TranslationOutput out;
  std::set<std::string> symbols;
  std::set<std::string> axiom_names;
  for (const auto& d : thy.decls) {
    if (const auto* td = std::get_if<dhol::TypeDecl>(&d))
      symbols.insert(td->name);
    else if (const auto* cd = std::get_if<dhol::ConstDecl>(&d))
      symbols.insert(cd->name);
    else
      axiom_names.insert(std::get<dhol::AxiomDecl>(d).name);
  }

  auto add_generated_symbol = [&](const std::string& n, const std::string& src) {
    if (!symbols.insert(n).second)
      throw TranslateError("generated symbol '" + n + "' collides with an existing name");
    out.symbol_source[n] = src;
  };
  auto add_generated_axiom = [&](const std::string& n, const std::string& src) {
    if (!axiom_names.insert(n).second)
      throw TranslateError("generated axiom name '" + n + "' collides with an existing name");
    out.axiom_source[n] = src;
  };

  for (const auto& d : thy.decls) {
    if (const auto* td = std::get_if<dhol::TypeDecl>(&d)) {
      out.theory.decls.push_back(hol::TypeDecl{td->name});

      const std::string pn = per_constant_name(td->name);
      add_generated_symbol(pn, td->name);
      out.per_names[td->name] = pn;

      hol::Type at = hol::mk_base(td->name);
      hol::Type pt = hol::mk_arrow(at, hol::mk_arrow(at, hol::mk_bool()));
      for (auto it = td->telescope.rbegin(); it != td->telescope.rend(); ++it)
        pt = hol::mk_arrow(translate_type(it->second), pt);
      out.theory.decls.push_back(hol::ConstDecl{pn, pt});

      std::set<std::string> telnames;
      for (const auto& [x, ty] : td->telescope) telnames.insert(x);
      auto pick = [&](const char* base) {
        std::string n = telnames.count(base) ? dhol::fresh_name(base, telnames) : base;
        telnames.insert(n);
        return n;
      };
      const std::string u = pick("u"), v = pick("v"), w = pick("w");
      auto per = [&](const std::string& l, const std::string& r) {
        return per_app(pn, td->telescope, hol::mk_var(l), hol::mk_var(r));
      };
      auto close = [&](hol::Term inner, std::vector<std::string> vars) {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
          inner = hol::mk_forall(*it, at, std::move(inner));
        return quantify_telescope(td->telescope, std::move(inner));
      };

      if (axioms == AxiomSet::Appendix) {
        const std::string sym_n = td->name + "_sym";
        add_generated_axiom(sym_n, td->name);
        out.theory.decls.push_back(hol::AxiomDecl{
            sym_n, close(hol::mk_impl(per(u, v), per(v, u)), {u, v})});

        const std::string trans_n = td->name + "_trans";
        add_generated_axiom(trans_n, td->name);
        out.theory.decls.push_back(hol::AxiomDecl{
            trans_n,
            close(hol::mk_impl(per(u, v), hol::mk_impl(per(v, w), per(u, w))), {u, v, w})});

        const std::string per_n = td->name + "_per";
        add_generated_axiom(per_n, td->name);
        out.theory.decls.push_back(hol::AxiomDecl{
            per_n,
            close(hol::mk_impl(per(v, v),
                               hol::mk_eq(hol::mk_bool(), per(u, v),
                                          hol::mk_eq(at, hol::mk_var(u), hol::mk_var(v)))),
                  {u, v})});
      } else {
        const std::string per_n = td->name + "_PER";
        add_generated_axiom(per_n, td->name);
        out.theory.decls.push_back(hol::AxiomDecl{
            per_n,
            close(hol::mk_impl(per(u, v), hol::mk_eq(at, hol::mk_var(u), hol::mk_var(v))),
                  {u, v})});
      }
    } else if (const auto* cd = std::get_if<dhol::ConstDecl>(&d)) {
      out.theory.decls.push_back(hol::ConstDecl{cd->name, translate_type(cd->ty)});
      const std::string tn = typing_axiom_name(cd->name);
      add_generated_axiom(tn, cd->name);
      out.theory.decls.push_back(hol::AxiomDecl{
          tn, per_of(cd->ty, hol::mk_const(cd->name), hol::mk_const(cd->name))});
    } else {
      const auto& ad = std::get<dhol::AxiomDecl>(d);
      out.theory.decls.push_back(hol::AxiomDecl{ad.name, translate_term(ad.formula)});
    }
  }
  return out;
}

// ---------------- Contexts ----------------

hol::Context translate_context(const dhol::Context& ctx) {
  hol::Context out;
  std::set<std::string> assumption_names;
  for (const auto& e : ctx.entries)
    if (const auto* a = std::get_if<dhol::Assumption>(&e)) assumption_names.insert(a->name);

  for (const auto& e : ctx.entries) {
    if (const auto* v = std::get_if<dhol::VarDecl>(&e)) {
      out.entries.push_back(hol::VarDecl{v->name, translate_type(v->ty)});
      const std::string tn = var_typing_assumption_name(v->name);
      if (!assumption_names.insert(tn).second)
        throw TranslateError("generated assumption name '" + tn +
                             "' collides with an existing name");
      out.entries.push_back(
          hol::Assumption{tn, per_of(v->ty, hol::mk_var(v->name), hol::mk_var(v->name))});
    } else {
      const auto& a = std::get<dhol::Assumption>(e);
      out.entries.push_back(hol::Assumption{a.name, translate_term(a.formula)});
    }
  }
  return out;
}

// ---------------- Obligations ----------------

hol::Problem translate_obligation(const kernel::Obligation& o, AxiomSet axioms) {
  hol::Problem p;
  p.theory = translate_theory(o.theory, axioms).theory;
  p.context = translate_context(o.context);
  p.conjecture = translate_term(o.formula);
  return p;
}

} // namespace dholk::translate
