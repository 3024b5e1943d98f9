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

#include "dholk/tptp.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace dholk::tptp {

namespace {

// ---------------------------------------------------------------------------
// Lexer, shared by the dependent dialect and the TH0 reparser.
// ---------------------------------------------------------------------------

enum class Tok {
  LParen, RParen, LBracket, RBracket, Comma, Colon, Dot,
  Lower, Upper, Defined,
  At, Arrow, Psub, PiBinder, Lam, Bang, Quest, Tilde, Amp, Pipe,
  Implies, Iff, Eq, Neq, Underscore,
  End
};

struct Token {
  Tok k;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto err = [&](const std::string& m) { throw ParseError(m, line, col); };
  auto push = [&](Tok k, std::string text, int n) {
    out.push_back(Token{k, std::move(text), line, col});
    col += n;
    i += static_cast<std::size_t>(n);
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++col;
      ++i;
      continue;
    }
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      int l0 = line, c0 = col;
      i += 2;
      col += 2;
      for (;;) {
        if (i + 1 >= s.size()) throw ParseError("unterminated comment", l0, c0);
        if (s[i] == '*' && s[i + 1] == '/') {
          i += 2;
          col += 2;
          break;
        }
        if (s[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
        ++i;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      push(std::islower(static_cast<unsigned char>(c)) ? Tok::Lower : Tok::Upper, word,
           static_cast<int>(j - i));
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      if (j == i + 1) err("lone '$'");
      push(Tok::Defined, s.substr(i, j - i), static_cast<int>(j - i));
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '\'' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '\'') err("unterminated quoted name");
      push(Tok::Lower, s.substr(i + 1, j - i - 1), static_cast<int>(j - i + 1));
      continue;
    }
    if (c == '_') {
      if (i + 1 < s.size() &&
          (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_'))
        err("identifiers may not start with '_'");
      push(Tok::Underscore, "_", 1);
      continue;
    }
    auto two = [&](const char* op) {
      return i + 1 < s.size() && s[i] == op[0] && s[i + 1] == op[1];
    };
    if (i + 2 < s.size() && s[i] == '<' && s[i + 1] == '=' && s[i + 2] == '>') {
      push(Tok::Iff, "<=>", 3);
      continue;
    }
    if (two("=>")) { push(Tok::Implies, "=>", 2); continue; }
    if (two("!=")) { push(Tok::Neq, "!=", 2); continue; }
    if (two("!>")) { push(Tok::PiBinder, "!>", 2); continue; }
    if (two("?|")) { push(Tok::Psub, "?|", 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, "(", 1); continue;
      case ')': push(Tok::RParen, ")", 1); continue;
      case '[': push(Tok::LBracket, "[", 1); continue;
      case ']': push(Tok::RBracket, "]", 1); continue;
      case ',': push(Tok::Comma, ",", 1); continue;
      case ':': push(Tok::Colon, ":", 1); continue;
      case '.': push(Tok::Dot, ".", 1); continue;
      case '@': push(Tok::At, "@", 1); continue;
      case '>': push(Tok::Arrow, ">", 1); continue;
      case '^': push(Tok::Lam, "^", 1); continue;
      case '!': push(Tok::Bang, "!", 1); continue;
      case '?': push(Tok::Quest, "?", 1); continue;
      case '~': push(Tok::Tilde, "~", 1); continue;
      case '&': push(Tok::Amp, "&", 1); continue;
      case '|': push(Tok::Pipe, "|", 1); continue;
      case '=': push(Tok::Eq, "=", 1); continue;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\" + std::to_string(static_cast<unsigned char>(c));
        err("unexpected character '" + shown + "'");
      }
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class ParserBase {
 public:
  explicit ParserBase(std::vector<Token> toks) : toks_(std::move(toks)) {}

 protected:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.k != Tok::End) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().k == k; }
  bool eat(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.k == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.col);
  }

  struct DepthGuard {
    explicit DepthGuard(const ParserBase& p, int& d) : d_(d) {
      if (++d_ > 500) {
        const Token& t = p.peek();
        throw ParseError("nesting too deep", t.line, t.col);
      }
    }
    ~DepthGuard() { --d_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    int& d_;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Dependent dialect parser.
// ---------------------------------------------------------------------------

class DholParser : public ParserBase {
 public:
  explicit DholParser(std::vector<Token> toks) : ParserBase(std::move(toks)) {}

  ParseResult run() {
    ParseResult r;
    while (!at(Tok::End)) statement(r);
    return r;
  }

 private:
  void statement(ParseResult& r) {
    Token kw = expect(Tok::Lower, "'thf'");
    if (kw.text != "thf") throw ParseError("expected 'thf'", kw.line, kw.col);
    expect(Tok::LParen, "'('");
    std::string stmt_name = statement_name();
    expect(Tok::Comma, "','");
    Token role = expect(Tok::Lower, "a role");
    expect(Tok::Comma, "','");
    if (role.text == "type") {
      type_statement(r);
    } else if (role.text == "axiom" || role.text == "definition") {
      dhol::Term f = term();
      bool uses_ctx_var = false;
      for (const auto& v : dhol::free_vars(f))
        if (ctx_vars_.count(v)) { uses_ctx_var = true; break; }
      if (uses_ctx_var)
        r.context.entries.push_back(dhol::Assumption{stmt_name, f});
      else
        r.theory.decls.push_back(dhol::AxiomDecl{stmt_name, f});
    } else if (role.text == "conjecture") {
      if (r.conjecture) throw ParseError("duplicate conjecture", role.line, role.col);
      r.conjecture = term();
    } else {
      throw ParseError("unsupported role '" + role.text + "'", role.line, role.col);
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
  }

  std::string statement_name() {
    if (at(Tok::Lower) || at(Tok::Upper)) return next().text;
    fail("expected a statement name");
  }

  // A type-role statement declares a type constructor (result $tType), a
  // constant (lower-case symbol), or a context variable (upper-case symbol).
  void type_statement(ParseResult& r) {
    if (!at(Tok::Lower) && !at(Tok::Upper)) fail("expected a symbol name");
    Token sym = next();
    expect(Tok::Colon, "':'");
    std::vector<std::pair<std::string, dhol::Type>> telescope;
    while (at(Tok::PiBinder)) pi_group(telescope);
    if (at(Tok::Defined) && peek().text == "$tType") {
      next();
      r.theory.decls.push_back(dhol::TypeDecl{sym.text, std::move(telescope)});
      return;
    }
    dhol::Type ty = type();
    for (auto it = telescope.rbegin(); it != telescope.rend(); ++it)
      ty = dhol::mk_pi(it->first, it->second, ty);
    if (std::isupper(static_cast<unsigned char>(sym.text[0]))) {
      r.context.entries.push_back(dhol::VarDecl{sym.text, ty});
      ctx_vars_.insert(sym.text);
    } else {
      r.theory.decls.push_back(dhol::ConstDecl{sym.text, ty});
    }
  }

  void pi_group(std::vector<std::pair<std::string, dhol::Type>>& out) {
    expect(Tok::PiBinder, "'!>'");
    expect(Tok::LBracket, "'['");
    do {
      Token v = expect(Tok::Upper, "a variable (upper-case)");
      expect(Tok::Colon, "':'");
      out.push_back({v.text, type()});
    } while (eat(Tok::Comma));
    expect(Tok::RBracket, "']'");
    expect(Tok::Colon, "':'");
  }

  // type := arrow ('?|' unary-term)*        predicate subtypes, left-assoc
  dhol::Type type() {
    DepthGuard g(*this, depth_);
    dhol::Type t = arrow_type();
    while (eat(Tok::Psub)) t = dhol::mk_psub(t, unary_term());
    return t;
  }

  dhol::Type arrow_type() {
    DepthGuard g(*this, depth_);
    dhol::Type l = app_type();
    if (eat(Tok::Arrow)) return dhol::mk_arrow(l, arrow_type());
    return l;
  }

  dhol::Type app_type() {
    DepthGuard g(*this, depth_);
    if (at(Tok::PiBinder)) {
      std::vector<std::pair<std::string, dhol::Type>> binders;
      while (at(Tok::PiBinder)) pi_group(binders);
      dhol::Type body = type();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = dhol::mk_pi(it->first, it->second, body);
      return body;
    }
    if (at(Tok::Defined)) {
      Token d = next();
      if (d.text == "$o") return dhol::mk_bool();
      throw ParseError("'" + d.text + "' is not a type here", d.line, d.col);
    }
    if (at(Tok::Lower)) {
      Token ctor = next();
      std::vector<dhol::Term> args;
      while (eat(Tok::At)) args.push_back(primary_term());
      return dhol::mk_base(ctor.text, args);
    }
    if (eat(Tok::LParen)) {
      dhol::Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  // term := impl ('<=>' impl)*   iff folds to boolean equality, left-assoc
  dhol::Term term() {
    DepthGuard g(*this, depth_);
    dhol::Term l = impl_term();
    while (eat(Tok::Iff)) l = dhol::mk_eq(dhol::mk_bool(), l, impl_term());
    return l;
  }

  dhol::Term impl_term() {
    DepthGuard g(*this, depth_);
    dhol::Term l = or_term();
    if (eat(Tok::Implies)) return dhol::mk_impl(l, impl_term());
    return l;
  }

  dhol::Term or_term() {
    dhol::Term l = and_term();
    while (eat(Tok::Pipe)) l = dhol::mk_or(l, and_term());
    return l;
  }

  dhol::Term and_term() {
    dhol::Term l = eq_term();
    while (eat(Tok::Amp)) l = dhol::mk_and(l, eq_term());
    return l;
  }

  // Plain '=' defers its type annotation to elaboration.
  dhol::Term eq_term() {
    dhol::Term l = app_term();
    if (eat(Tok::Eq)) return dhol::mk_eq(std::nullopt, l, app_term());
    if (eat(Tok::Neq)) return dhol::mk_not(dhol::mk_eq(std::nullopt, l, app_term()));
    return l;
  }

  dhol::Term app_term() {
    dhol::Term l = unary_term();
    while (eat(Tok::At)) l = dhol::mk_app(l, unary_term());
    return l;
  }

  dhol::Term unary_term() {
    DepthGuard g(*this, depth_);
    if (eat(Tok::Tilde)) return dhol::mk_not(unary_term());
    if (at(Tok::Bang) || at(Tok::Quest) || at(Tok::Lam)) {
      Tok q = next().k;
      expect(Tok::LBracket, "'['");
      std::vector<std::pair<std::string, dhol::Type>> binders;
      do {
        Token v = expect(Tok::Upper, "a variable (upper-case)");
        expect(Tok::Colon, "':'");
        binders.push_back({v.text, type()});
      } while (eat(Tok::Comma));
      expect(Tok::RBracket, "']'");
      expect(Tok::Colon, "':'");
      dhol::Term body = unary_term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        if (q == Tok::Bang)
          body = dhol::mk_forall(it->first, it->second, body);
        else if (q == Tok::Quest)
          body = dhol::mk_exists(it->first, it->second, body);
        else
          body = dhol::mk_lam(it->first, it->second, body);
      }
      return body;
    }
    return primary_term();
  }

  dhol::Term primary_term() {
    DepthGuard g(*this, depth_);
    if (at(Tok::Defined)) {
      Token d = next();
      if (d.text == "$true") return dhol::mk_true();
      if (d.text == "$false") return dhol::mk_false();
      throw ParseError("'" + d.text + "' is not a term", d.line, d.col);
    }
    if (eat(Tok::Underscore)) return dhol::mk_hole();
    if (at(Tok::Lower)) return dhol::mk_const(next().text);
    if (at(Tok::Upper)) return dhol::mk_var(next().text);
    if (eat(Tok::LParen)) {
      dhol::Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }

  std::set<std::string> ctx_vars_;
};

} // namespace

ParseResult parse_dhol(const std::string& text) {
  DholParser p(lex(text));
  return p.run();
}

// ---------------------------------------------------------------------------
// Name mangling.
// ---------------------------------------------------------------------------

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_escape_shaped(const std::string& s) {
  if (s.size() < 5 || s.compare(0, 4, "esc_") != 0) return false;
  for (std::size_t i = 4; i < s.size(); ++i) {
    char c = s[i];
    bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!hex) return false;
  }
  return true;
}

} // namespace

std::string mangle_name(const std::string& name) {
  if (is_lower_word(name) && !is_escape_shaped(name)) return name;
  static const char* hexdigits = "0123456789abcdef";
  std::string out = "esc_";
  for (unsigned char c : name) {
    out += hexdigits[c >> 4];
    out += hexdigits[c & 0xf];
  }
  return out;
}

std::optional<std::string> demangle_name(const std::string& name) {
  if (!is_escape_shaped(name)) {
    if (is_lower_word(name)) return name;
    return std::nullopt;
  }
  if ((name.size() - 4) % 2 != 0) return std::nullopt;
  std::string out;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    return c - 'a' + 10;
  };
  for (std::size_t i = 4; i < name.size(); i += 2)
    out += static_cast<char>((nibble(name[i]) << 4) | nibble(name[i + 1]));
  return out;
}

// ---------------------------------------------------------------------------
// TH0 emission.
// ---------------------------------------------------------------------------

namespace {

void print_type(const hol::Type& t, std::ostream& os, bool left_of_arrow) {
  switch (hol::kind(t)) {
    case hol::TypeKind::Bool:
      os << "$o";
      return;
    case hol::TypeKind::Base:
      os << mangle_name(hol::get_if<hol::BaseTy>(t)->name);
      return;
    case hol::TypeKind::Arrow: {
      const auto* a = hol::get_if<hol::ArrowTy>(t);
      if (left_of_arrow) os << '(';
      print_type(a->from, os, true);
      os << " > ";
      print_type(a->to, os, false);
      if (left_of_arrow) os << ')';
      return;
    }
  }
}

std::string type_string(const hol::Type& t) {
  std::ostringstream os;
  print_type(t, os, false);
  return os.str();
}

// Bound variables are renamed per scope to TPTP upper-words; free variables
// (context variables, declared as constants alongside the theory) print
// mangled like constants. Every composite prints fully parenthesized, so the
// output is layout-deterministic and trivially unambiguous.
class TermPrinter {
 public:
  std::string render(const hol::Term& t) {
    std::ostringstream os;
    print(t, os);
    return os.str();
  }

 private:
  std::map<std::string, std::vector<std::string>> renames_;
  std::set<std::string> active_;

  std::string fresh_upper(const std::string& src) {
    std::string base;
    for (char c : src)
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') base += c;
    if (base.empty() || !std::isalpha(static_cast<unsigned char>(base[0])))
      base = "X";
    else
      base[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])));
    std::string cand = base;
    for (int i = 1; active_.count(cand); ++i) cand = base + std::to_string(i);
    return cand;
  }

  void operand(const hol::Term& t, std::ostream& os) {
    // Composites wrap themselves in parentheses; binders and negation do not,
    // so wrap them here when they appear as operands.
    switch (hol::kind(t)) {
      case hol::TermKind::Forall:
      case hol::TermKind::Exists:
      case hol::TermKind::Lam:
      case hol::TermKind::Not:
        os << '(';
        print(t, os);
        os << ')';
        return;
      default:
        print(t, os);
        return;
    }
  }

  void binder(const char* sigil, const std::string& var, const hol::Type& ty,
              const hol::Term& body, std::ostream& os) {
    std::string name = fresh_upper(var);
    renames_[var].push_back(name);
    active_.insert(name);
    os << sigil << '[' << name << ": ";
    print_type(ty, os, false);
    os << "]: ";
    operand(body, os);
    active_.erase(name);
    renames_[var].pop_back();
    if (renames_[var].empty()) renames_.erase(var);
  }

  void binary(const hol::Term& l, const char* op, const hol::Term& r, std::ostream& os) {
    os << '(';
    operand(l, os);
    os << ' ' << op << ' ';
    operand(r, os);
    os << ')';
  }

  void print(const hol::Term& t, std::ostream& os) {
    switch (hol::kind(t)) {
      case hol::TermKind::Const:
        os << mangle_name(hol::get_if<hol::ConstT>(t)->name);
        return;
      case hol::TermKind::Var: {
        const std::string& n = hol::get_if<hol::VarT>(t)->name;
        auto it = renames_.find(n);
        if (it != renames_.end() && !it->second.empty())
          os << it->second.back();
        else
          os << mangle_name(n);
        return;
      }
      case hol::TermKind::True:
        os << "$true";
        return;
      case hol::TermKind::False:
        os << "$false";
        return;
      case hol::TermKind::App: {
        std::vector<const hol::Term*> spine;
        const hol::Term* cur = &t;
        while (const auto* a = hol::get_if<hol::AppT>(*cur)) {
          spine.push_back(&a->arg);
          cur = &a->fn;
        }
        os << '(';
        operand(*cur, os);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
          os << " @ ";
          operand(**it, os);
        }
        os << ')';
        return;
      }
      case hol::TermKind::Eq: {
        const auto* e = hol::get_if<hol::EqT>(t);
        binary(e->lhs, "=", e->rhs, os);
        return;
      }
      case hol::TermKind::Impl: {
        const auto* n = hol::get_if<hol::ImplT>(t);
        binary(n->lhs, "=>", n->rhs, os);
        return;
      }
      case hol::TermKind::And: {
        const auto* n = hol::get_if<hol::AndT>(t);
        binary(n->lhs, "&", n->rhs, os);
        return;
      }
      case hol::TermKind::Or: {
        const auto* n = hol::get_if<hol::OrT>(t);
        binary(n->lhs, "|", n->rhs, os);
        return;
      }
      case hol::TermKind::Not: {
        const auto* n = hol::get_if<hol::NotT>(t);
        os << "~ ";
        operand(n->arg, os);
        return;
      }
      case hol::TermKind::Forall: {
        const auto* n = hol::get_if<hol::ForallT>(t);
        binder("!", n->var, n->ty, n->body, os);
        return;
      }
      case hol::TermKind::Exists: {
        const auto* n = hol::get_if<hol::ExistsT>(t);
        binder("?", n->var, n->ty, n->body, os);
        return;
      }
      case hol::TermKind::Lam: {
        const auto* n = hol::get_if<hol::LamT>(t);
        binder("^", n->var, n->ty, n->body, os);
        return;
      }
    }
  }
};

class StatementNamer {
 public:
  std::string claim(const std::string& wanted) {
    if (used_.insert(wanted).second) return wanted;
    for (int i = 2;; ++i) {
      std::string cand = wanted + "_" + std::to_string(i);
      if (used_.insert(cand).second) return cand;
    }
  }

 private:
  std::set<std::string> used_;
};

} // namespace

std::string emit_th0(const hol::Theory& thy, const hol::Context& ctx,
                     const std::optional<hol::Term>& conjecture) {
  std::ostringstream os;
  os << "% TH0 problem.\n"
        "% Names outside the TPTP lower-word class, and names matching\n"
        "% '^esc_[0-9a-f]+$', are written as 'esc_' + lowercase hex of their\n"
        "% UTF-8 bytes; all other names are verbatim. Declaration statement\n"
        "% names carry a '_decl' suffix (symbols and axioms are separate\n"
        "% namespaces). Context variables are declared as constants and\n"
        "% context assumptions stated as axioms.\n";
  StatementNamer namer;
  auto type_stmt = [&](const std::string& sym, const std::string& ty) {
    os << "thf(" << namer.claim(mangle_name(sym) + "_decl") << ", type, " << mangle_name(sym)
       << ": " << ty << ").\n";
  };
  auto formula_stmt = [&](const std::string& name, const char* role, const hol::Term& f) {
    TermPrinter pr;
    os << "thf(" << namer.claim(mangle_name(name)) << ", " << role << ", " << pr.render(f)
       << ").\n";
  };
  for (const auto& d : thy.decls) {
    if (const auto* td = std::get_if<hol::TypeDecl>(&d)) {
      type_stmt(td->name, "$tType");
    } else if (const auto* cd = std::get_if<hol::ConstDecl>(&d)) {
      type_stmt(cd->name, type_string(cd->ty));
    } else if (const auto* ad = std::get_if<hol::AxiomDecl>(&d)) {
      formula_stmt(ad->name, "axiom", ad->formula);
    }
  }
  for (const auto& entry : ctx.entries) {
    if (const auto* vd = std::get_if<hol::VarDecl>(&entry)) {
      type_stmt(vd->name, type_string(vd->ty));
    } else if (const auto* as = std::get_if<hol::Assumption>(&entry)) {
      formula_stmt(as->name, "axiom", as->formula);
    }
  }
  if (conjecture) {
    TermPrinter pr;
    os << "thf(" << namer.claim("conj") << ", conjecture, " << pr.render(*conjecture)
       << ").\n";
  }
  return os.str();
}

std::string emit_th0(const translate::TranslationOutput& out,
                     const std::optional<hol::Term>& conjecture) {
  return emit_th0(out.theory, hol::Context{}, conjecture);
}

std::string emit_th0(const hol::Problem& problem) {
  return emit_th0(problem.theory, problem.context, problem.conjecture);
}

// ---------------------------------------------------------------------------
// TH0 reparsing (round-trip validation).
// ---------------------------------------------------------------------------

namespace {

class Th0Parser : public ParserBase {
 public:
  explicit Th0Parser(std::vector<Token> toks) : ParserBase(std::move(toks)) {}

  ReparseResult run() {
    ReparseResult r;
    while (!at(Tok::End)) statement(r);
    if (r.conjecture) {
      hol::Term elab;
      hol::infer(r.theory, hol::Context{}, *r.conjecture, &elab);
      r.conjecture = elab;
    }
    return r;
  }

 private:
  static std::string unmangle(const std::string& s) {
    auto d = demangle_name(s);
    return d ? *d : s;
  }

  void statement(ReparseResult& r) {
    Token kw = expect(Tok::Lower, "'thf'");
    if (kw.text != "thf") throw ParseError("expected 'thf'", kw.line, kw.col);
    expect(Tok::LParen, "'('");
    if (!at(Tok::Lower) && !at(Tok::Upper)) fail("expected a statement name");
    std::string stmt_name = next().text;
    expect(Tok::Comma, "','");
    Token role = expect(Tok::Lower, "a role");
    expect(Tok::Comma, "','");
    if (role.text == "type") {
      Token sym = expect(Tok::Lower, "a symbol name");
      expect(Tok::Colon, "':'");
      if (at(Tok::Defined) && peek().text == "$tType") {
        next();
        r.theory.decls.push_back(hol::TypeDecl{unmangle(sym.text)});
      } else {
        r.theory.decls.push_back(hol::ConstDecl{unmangle(sym.text), type()});
      }
    } else if (role.text == "axiom" || role.text == "definition") {
      hol::Term f = term();
      // Annotations are reconstructed against the declarations seen so far.
      hol::Term elab;
      hol::infer(r.theory, hol::Context{}, f, &elab);
      r.theory.decls.push_back(hol::AxiomDecl{unmangle(stmt_name), elab});
    } else if (role.text == "conjecture") {
      if (r.conjecture) throw ParseError("duplicate conjecture", role.line, role.col);
      r.conjecture = term();
    } else {
      throw ParseError("unsupported role '" + role.text + "'", role.line, role.col);
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
  }

  hol::Type type() {
    DepthGuard g(*this, depth_);
    hol::Type l = atom_type();
    if (eat(Tok::Arrow)) return hol::mk_arrow(l, type());
    return l;
  }

  hol::Type atom_type() {
    DepthGuard g(*this, depth_);
    if (at(Tok::Defined)) {
      Token d = next();
      if (d.text == "$o") return hol::mk_bool();
      throw ParseError("'" + d.text + "' is not a type here", d.line, d.col);
    }
    if (at(Tok::Lower)) return hol::mk_base(unmangle(next().text));
    if (eat(Tok::LParen)) {
      hol::Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  hol::Term term() {
    DepthGuard g(*this, depth_);
    hol::Term l = impl_term();
    while (eat(Tok::Iff)) l = hol::mk_eq(hol::mk_bool(), l, impl_term());
    return l;
  }

  hol::Term impl_term() {
    DepthGuard g(*this, depth_);
    hol::Term l = or_term();
    if (eat(Tok::Implies)) return hol::mk_impl(l, impl_term());
    return l;
  }

  hol::Term or_term() {
    hol::Term l = and_term();
    while (eat(Tok::Pipe)) l = hol::mk_or(l, and_term());
    return l;
  }

  hol::Term and_term() {
    hol::Term l = eq_term();
    while (eat(Tok::Amp)) l = hol::mk_and(l, eq_term());
    return l;
  }

  hol::Term eq_term() {
    hol::Term l = app_term();
    if (eat(Tok::Eq)) return hol::mk_eq(std::nullopt, l, app_term());
    if (eat(Tok::Neq)) return hol::mk_not(hol::mk_eq(std::nullopt, l, app_term()));
    return l;
  }

  hol::Term app_term() {
    hol::Term l = unary_term();
    while (eat(Tok::At)) l = hol::mk_app(l, unary_term());
    return l;
  }

  hol::Term unary_term() {
    DepthGuard g(*this, depth_);
    if (eat(Tok::Tilde)) return hol::mk_not(unary_term());
    if (at(Tok::Bang) || at(Tok::Quest) || at(Tok::Lam)) {
      Tok q = next().k;
      expect(Tok::LBracket, "'['");
      std::vector<std::pair<std::string, hol::Type>> binders;
      do {
        Token v = expect(Tok::Upper, "a variable (upper-case)");
        expect(Tok::Colon, "':'");
        binders.push_back({v.text, type()});
      } while (eat(Tok::Comma));
      expect(Tok::RBracket, "']'");
      expect(Tok::Colon, "':'");
      hol::Term body = unary_term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        if (q == Tok::Bang)
          body = hol::mk_forall(it->first, it->second, body);
        else if (q == Tok::Quest)
          body = hol::mk_exists(it->first, it->second, body);
        else
          body = hol::mk_lam(it->first, it->second, body);
      }
      return body;
    }
    return primary_term();
  }

  hol::Term primary_term() {
    DepthGuard g(*this, depth_);
    if (at(Tok::Defined)) {
      Token d = next();
      if (d.text == "$true") return hol::mk_true();
      if (d.text == "$false") return hol::mk_false();
      throw ParseError("'" + d.text + "' is not a term", d.line, d.col);
    }
    if (at(Tok::Lower)) return hol::mk_const(unmangle(next().text));
    if (at(Tok::Upper)) return hol::mk_var(next().text);
    if (eat(Tok::LParen)) {
      hol::Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }
};

} // namespace

ReparseResult reparse_th0(const std::string& text) {
  Th0Parser p(lex(text));
  return p.run();
}

} // namespace dholk::tptp
