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

#ifndef DHOLK_SYNTAX_HPP_
#define DHOLK_SYNTAX_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dholk {
namespace dhol {

struct TypeNode;
struct TermNode;

// Immutable handles; all structural sharing is safe because nodes are const.
class Type {
 public:
  Type() = default;
  explicit Type(std::shared_ptr<const TypeNode> p) : p_(std::move(p)) {}
  const TypeNode& node() const { return *p_; }
  bool valid() const { return p_ != nullptr; }
  const TypeNode* raw() const { return p_.get(); }

 private:
  std::shared_ptr<const TypeNode> p_;
};

class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const TermNode> p) : p_(std::move(p)) {}
  const TermNode& node() const { return *p_; }
  bool valid() const { return p_ != nullptr; }
  const TermNode* raw() const { return p_.get(); }

 private:
  std::shared_ptr<const TermNode> p_;
};

// ---------------- Type nodes ----------------

// a t1 ... tn  (n = declared arity; n may be 0)
struct BaseApp {
  std::string ctor;
  std::vector<Term> args;
};

// !>[var:domain]: codomain
struct PiTy {
  std::string var;
  Type domain;
  Type codomain;
};

struct BoolTy {};

// base ?| pred   (pred : base > $o)
struct PsubTy {
  Type base;
  Term pred;
};

struct TypeNode {
  std::variant<BaseApp, PiTy, BoolTy, PsubTy> v;
};

enum class TypeKind { Base, Pi, Bool, Psub };

inline TypeKind kind(const Type& t) { return static_cast<TypeKind>(t.node().v.index()); }

// ---------------- Term nodes ----------------

struct ConstT { std::string name; };
struct VarT { std::string name; };
struct LamT { std::string var; Type ty; Term body; };
struct AppT { Term fn; Term arg; };
// s =_at t; `at` is empty until the elaborator resolves it for parsed input.
struct EqT { std::optional<Type> at; Term lhs; Term rhs; };
struct ImplT { Term lhs; Term rhs; };
// Sugar forms are kept as distinct nodes until a consumer expands them.
struct ForallT { std::string var; Type ty; Term body; };
struct ExistsT { std::string var; Type ty; Term body; };
struct AndT { Term lhs; Term rhs; };
struct OrT { Term lhs; Term rhs; };
struct NotT { Term arg; };
struct TrueT {};
struct FalseT {};
// A `_` placeholder argument; exists only between parsing and elaboration.
struct HoleT {};

struct TermNode {
  std::variant<ConstT, VarT, LamT, AppT, EqT, ImplT, ForallT, ExistsT, AndT,
               OrT, NotT, TrueT, FalseT, HoleT> v;
};

enum class TermKind {
  Const, Var, Lam, App, Eq, Impl, Forall, Exists, And, Or, Not, True, False,
  Hole
};

inline TermKind kind(const Term& t) { return static_cast<TermKind>(t.node().v.index()); }

template <class T>
const T* get_if(const Term& t) { return std::get_if<T>(&t.node().v); }
template <class T>
const T* get_if(const Type& t) { return std::get_if<T>(&t.node().v); }

// ---------------- Factories ----------------

Type mk_base(std::string ctor, std::vector<Term> args = {});
Type mk_pi(std::string var, Type domain, Type codomain);
Type mk_bool();
Type mk_psub(Type base, Term pred);
// Non-dependent Pi with a binder chosen fresh for the codomain.
Type mk_arrow(Type domain, Type codomain);

Term mk_const(std::string name);
Term mk_var(std::string name);
Term mk_lam(std::string var, Type ty, Term body);
Term mk_app(Term fn, Term arg);
Term mk_app(Term fn, const std::vector<Term>& args);
Term mk_eq(std::optional<Type> at, Term lhs, Term rhs);
Term mk_impl(Term lhs, Term rhs);
Term mk_forall(std::string var, Type ty, Term body);
Term mk_exists(std::string var, Type ty, Term body);
Term mk_and(Term lhs, Term rhs);
Term mk_or(Term lhs, Term rhs);
Term mk_not(Term arg);
Term mk_true();
Term mk_false();
Term mk_hole();

// ---------------- Theories and contexts ----------------

struct TypeDecl {
  std::string name;
  std::vector<std::pair<std::string, Type>> telescope;
};
struct ConstDecl {
  std::string name;
  Type ty;
};
struct AxiomDecl {
  std::string name;
  Term formula;
};
using Declaration = std::variant<TypeDecl, ConstDecl, AxiomDecl>;

struct Theory {
  std::vector<Declaration> decls;

  const TypeDecl* find_type(const std::string& name) const;
  const ConstDecl* find_const(const std::string& name) const;
  const AxiomDecl* find_axiom(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

struct VarDecl {
  std::string name;
  Type ty;
};
struct Assumption {
  std::string name;
  Term formula;
};
using ContextEntry = std::variant<VarDecl, Assumption>;

struct Context {
  std::vector<ContextEntry> entries;

  const VarDecl* find_var(const std::string& name) const;
  bool has_name(const std::string& name) const;
  Context extended(ContextEntry e) const;
};

// ---------------- Operations ----------------

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Type& t);
void collect_free_vars(const Term& t, std::set<std::string>& out);
void collect_free_vars(const Type& t, std::set<std::string>& out);

// Smallest name of the form base1, base2, ... not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding substitution [x := u].
Term subst(const Term& t, const std::string& x, const Term& u);
Type subst(const Type& t, const std::string& x, const Term& u);

bool alpha_eq(const Term& a, const Term& b);
bool alpha_eq(const Type& a, const Type& b);

// Canonical string key: equal keys iff alpha-equal terms.
std::string canon_key(const Term& t);
std::string canon_key(const Type& t);

bool is_sugar(const Term& t);
// One definitional expansion step of a sugar head; other terms pass through.
Term expand_sugar(const Term& t);
// Full expansion to the connective-free core (equality, lambda, application,
// implication, constants, variables).
Term desugar(const Term& t);

// One beta step p @ t when p is a lambda, a plain application otherwise.
Term beta_apply(const Term& p, const Term& t);

// Full beta normal form (no eta); sugar preserved. Fuel-guarded against
// ill-typed divergence.
Term beta_normalize(const Term& t);

std::string pretty(const Term& t);
std::string pretty(const Type& t);
std::string pretty(const Context& ctx);

}  // namespace dhol
}  // namespace dholk

#endif  // DHOLK_SYNTAX_HPP_
