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

#ifndef DHOLK_HOL_HPP_
#define DHOLK_HOL_HPP_

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dholk {
namespace hol {

struct TypeNode;
struct TermNode;

class Type {
 public:
  Type() = default;
  explicit Type(std::shared_ptr<const TypeNode> p) : p_(std::move(p)) {}
  const TypeNode& node() const { return *p_; }
  bool valid() const { return p_ != nullptr; }

 private:
  std::shared_ptr<const TypeNode> p_;
};

class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const TermNode> p) : p_(std::move(p)) {}
  const TermNode& node() const { return *p_; }
  bool valid() const { return p_ != nullptr; }

 private:
  std::shared_ptr<const TermNode> p_;
};

// ---------------- Types ----------------

struct BaseTy { std::string name; };
struct ArrowTy { Type from; Type to; };
struct BoolTy {};

struct TypeNode {
  std::variant<BaseTy, ArrowTy, BoolTy> v;
};

enum class TypeKind { Base, Arrow, Bool };
inline TypeKind kind(const Type& t) { return static_cast<TypeKind>(t.node().v.index()); }

// ---------------- Terms ----------------

struct ConstT { std::string name; };
struct VarT { std::string name; };
struct LamT { std::string var; Type ty; Term body; };
struct AppT { Term fn; Term arg; };
struct EqT { std::optional<Type> at; Term lhs; Term rhs; };
struct ImplT { Term lhs; Term rhs; };
struct ForallT { std::string var; Type ty; Term body; };
struct ExistsT { std::string var; Type ty; Term body; };
struct AndT { Term lhs; Term rhs; };
struct OrT { Term lhs; Term rhs; };
struct NotT { Term arg; };
struct TrueT {};
struct FalseT {};

struct TermNode {
  std::variant<ConstT, VarT, LamT, AppT, EqT, ImplT, ForallT, ExistsT, AndT,
               OrT, NotT, TrueT, FalseT> v;
};

enum class TermKind {
  Const, Var, Lam, App, Eq, Impl, Forall, Exists, And, Or, Not, True, False
};
inline TermKind kind(const Term& t) { return static_cast<TermKind>(t.node().v.index()); }

template <class T>
const T* get_if(const Term& t) { return std::get_if<T>(&t.node().v); }
template <class T>
const T* get_if(const Type& t) { return std::get_if<T>(&t.node().v); }

// ---------------- Factories ----------------

Type mk_base(std::string name);
Type mk_arrow(Type from, Type to);
Type mk_bool();

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

// ---------------- Theory / context ----------------

struct TypeDecl { std::string name; };
struct ConstDecl { std::string name; Type ty; };
struct AxiomDecl { std::string name; Term formula; };
using Declaration = std::variant<TypeDecl, ConstDecl, AxiomDecl>;

struct Theory {
  std::vector<Declaration> decls;

  bool has_type(const std::string& name) const;
  const ConstDecl* find_const(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

struct VarDecl { std::string name; Type ty; };
struct Assumption { std::string name; Term formula; };
using ContextEntry = std::variant<VarDecl, Assumption>;

struct Context {
  std::vector<ContextEntry> entries;

  const VarDecl* find_var(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

// A self-contained validity question: theory, local context, conjecture.
struct Problem {
  Theory theory;
  Context context;
  Term conjecture;
};

// ---------------- Errors ----------------

class TypeError : public std::runtime_error {
 public:
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------- Operations ----------------

std::set<std::string> free_vars(const Term& t);
Term subst(const Term& t, const std::string& x, const Term& u);
bool alpha_eq(const Term& a, const Term& b);
bool type_eq(const Type& a, const Type& b);
std::string canon_key(const Term& t);
std::string canon_key(const Type& t);

bool is_sugar(const Term& t);
Term expand_sugar(const Term& t);
Term desugar(const Term& t);

// Throws TypeError when a base type is undeclared.
void wf_type(const Theory& thy, const Type& t);

// Simple type inference; throws TypeError on failure. Elaborated output (with
// every equality annotation filled in) is written to *elab when non-null.
Type infer(const Theory& thy, const Context& ctx, const Term& t, Term* elab = nullptr);

// Declaration-by-declaration check of a whole theory; throws TypeError.
void check_theory(const Theory& thy);
void check_context(const Theory& thy, const Context& ctx);
void check_problem(const Problem& p);

// Beta-eta normal form. Requires a well-typed term; sugar nodes are preserved
// and normalized underneath.
Term beta_eta_normalize(const Term& t);

std::string pretty(const Term& t);
std::string pretty(const Type& t);

}  // namespace hol
}  // namespace dholk

#endif  // DHOLK_HOL_HPP_
