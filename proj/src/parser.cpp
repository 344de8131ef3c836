// Copyright 2026 The BVT Authors. All rights reserved.
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

#include "bvt/frontend.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace bvt {

namespace {

struct token {
  enum class kind { ident, number, punct, end };
  kind k;
  std::string text;
  uint64_t value = 0;
  source_pos pos;
};

const char *unsupported_keyword(const std::string &s) {
  static const char *kws[] = {"goto", "return", "for", "do", "break", "continue",
                              "float", "double", "int", "char", "long", "short",
                              "void", "struct"};
  for (const char *k : kws)
    if (s == k) return k;
  return nullptr;
}

struct lexer {
  const std::string &src;
  size_t i = 0;
  int line = 1, col = 1;

  explicit lexer(const std::string &s) : src(s) {}

  source_pos pos() const { return {line, col}; }

  void advance() {
    if (i < src.size() && src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_ws() {
    for (;;) {
      while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) advance();
      if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '/') {
        while (i < src.size() && src[i] != '\n') advance();
        continue;
      }
      if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '*') {
        source_pos start = pos();
        advance();
        advance();
        while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) advance();
        if (i + 1 >= src.size()) throw parse_error("unterminated comment", start);
        advance();
        advance();
        continue;
      }
      break;
    }
  }

  token next() {
    skip_ws();
    token t;
    t.pos = pos();
    if (i >= src.size()) {
      t.k = token::kind::end;
      return t;
    }
    char c = src[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        s += src[i];
        advance();
      }
      t.k = token::kind::ident;
      t.text = s;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      bool hex = false;
      if (c == '0' && i + 1 < src.size() && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        hex = true;
        s += src[i];
        advance();
        s += src[i];
        advance();
      }
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])))) {
        s += src[i];
        advance();
      }
      t.k = token::kind::number;
      t.text = s;
      try {
        t.value = std::stoull(s, nullptr, hex ? 16 : 10);
      } catch (const std::exception &) {
        throw parse_error("bad numeric literal '" + s + "'", t.pos);
      }
      return t;
    }
    // punctuation, longest match first
    static const char *puncts[] = {"<<", ">>", "<=", ">=", "==", "!=", "&&", "||"};
    for (const char *p : puncts) {
      if (src.compare(i, 2, p) == 0) {
        t.k = token::kind::punct;
        t.text = p;
        advance();
        advance();
        return t;
      }
    }
    t.k = token::kind::punct;
    t.text = std::string(1, c);
    advance();
    return t;
  }
};

struct type_info {
  unsigned width;
  bool is_signed;
  bool operator==(const type_info &) const = default;
};

struct parser {
  lexer lex;
  token cur;
  var_list decls;

  explicit parser(const std::string &s) : lex(s) { cur = lex.next(); }

  [[noreturn]] void fail(const std::string &msg) { throw parse_error(msg, cur.pos); }

  void bump() { cur = lex.next(); }

  bool at_punct(const std::string &p) const {
    return cur.k == token::kind::punct && cur.text == p;
  }

  void expect_punct(const std::string &p) {
    if (!at_punct(p)) fail("expected '" + p + "'");
    bump();
  }

  bool at_ident(const std::string &s) const {
    return cur.k == token::kind::ident && cur.text == s;
  }

  std::optional<var_info> try_decl_type() {
    if (cur.k != token::kind::ident) return std::nullopt;
    const std::string &s = cur.text;
    if (s.size() < 2 || (s[0] != 'u' && s[0] != 'i')) return std::nullopt;
    for (size_t k = 1; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
    unsigned w = unsigned(std::stoul(s.substr(1)));
    if (w < 1 || w > 64) fail("width out of range in type '" + s + "'");
    var_info v;
    v.width = w;
    v.is_signed = s[0] == 'i';
    return v;
  }

  void check_unsupported() {
    if (cur.k == token::kind::ident) {
      if (const char *kw = unsupported_keyword(cur.text))
        fail(std::string("unsupported construct: ") + kw);
    }
    if (at_punct("[")) fail("unsupported construct: array");
    if (at_punct("*") ) fail("unsupported construct: pointer dereference");
  }

  source_program parse_program() {
    source_program prog;
    // decl* first
    for (;;) {
      if (cur.k == token::kind::end) break;
      auto ty = try_decl_type();
      if (!ty) break;
      token save = cur;
      bump();
      if (cur.k != token::kind::ident) {
        cur = save; // not a declaration after all
        break;
      }
      var_info v = *ty;
      v.name = cur.text;
      if (unsupported_keyword(v.name)) fail("unsupported construct: " + v.name);
      for (const auto &d : prog.decls)
        if (d.name == v.name) fail("variable '" + v.name + "' declared twice");
      bump();
      expect_punct(";");
      prog.decls.push_back(v);
    }
    decls = prog.decls;
    while (cur.k != token::kind::end) prog.body.push_back(parse_stmt());
    typecheck_block(prog.body);
    return prog;
  }

  ast_stmt_ptr parse_stmt() {
    check_unsupported();
    auto s = std::make_shared<ast_stmt>();
    s->pos = cur.pos;
    if (at_ident("while")) {
      bump();
      expect_punct("(");
      s->k = ast_stmt::kind::while_loop;
      s->expr = parse_expr();
      expect_punct(")");
      s->body = parse_block();
      return s;
    }
    if (at_ident("if")) {
      bump();
      expect_punct("(");
      s->k = ast_stmt::kind::if_else;
      s->expr = parse_expr();
      expect_punct(")");
      s->body = parse_block();
      if (at_ident("else")) {
        bump();
        s->else_body = parse_block();
      }
      return s;
    }
    if (try_decl_type()) fail("declaration after the first statement");
    if (cur.k != token::kind::ident) fail("expected statement");
    s->target = cur.text;
    bump();
    // x++; x--; sugar
    if (at_punct("+") || at_punct("-")) {
      std::string op = cur.text;
      bump();
      if (!at_punct(op)) fail("expected '" + op + "'");
      bump();
      expect_punct(";");
      s->k = ast_stmt::kind::assign;
      auto var = std::make_shared<ast_expr>();
      var->op = ast_op::ident;
      var->name = s->target;
      var->pos = s->pos;
      auto one = std::make_shared<ast_expr>();
      one->op = ast_op::lit;
      one->lit = 1;
      one->pos = s->pos;
      auto rhs = std::make_shared<ast_expr>();
      rhs->op = op == "+" ? ast_op::add : ast_op::sub;
      rhs->args = {var, one};
      rhs->pos = s->pos;
      s->expr = rhs;
      return s;
    }
    // compound assignment sugar: += -= *= &= |= ^=
    if ((at_punct("+") || at_punct("-") || at_punct("*") || at_punct("&") || at_punct("|") ||
         at_punct("^"))) {
      fail("expected '='");
    }
    if (at_punct("(")) fail("unsupported construct: function call");
    expect_punct("=");
    if (at_ident("nondet")) {
      bump();
      expect_punct("(");
      expect_punct(")");
      expect_punct(";");
      s->k = ast_stmt::kind::assign_nondet;
      return s;
    }
    s->k = ast_stmt::kind::assign;
    s->expr = parse_expr();
    expect_punct(";");
    return s;
  }

  std::vector<ast_stmt_ptr> parse_block() {
    std::vector<ast_stmt_ptr> stmts;
    if (at_punct("{")) {
      bump();
      while (!at_punct("}")) {
        if (cur.k == token::kind::end) fail("unterminated block");
        stmts.push_back(parse_stmt());
      }
      bump();
    } else {
      stmts.push_back(parse_stmt());
    }
    return stmts;
  }

  // --- expressions, C precedence ladder ---

  ast_expr_ptr mk(ast_op op, std::vector<ast_expr_ptr> args, source_pos pos) {
    auto e = std::make_shared<ast_expr>();
    e->op = op;
    e->args = std::move(args);
    e->pos = pos;
    return e;
  }

  ast_expr_ptr parse_expr() { return parse_lor(); }

  ast_expr_ptr parse_lor() {
    auto e = parse_land();
    while (at_punct("||")) {
      auto pos = cur.pos;
      bump();
      e = mk(ast_op::lor, {e, parse_land()}, pos);
    }
    return e;
  }

  ast_expr_ptr parse_land() {
    auto e = parse_bor();
    while (at_punct("&&")) {
      auto pos = cur.pos;
      bump();
      e = mk(ast_op::land, {e, parse_bor()}, pos);
    }
    return e;
  }

  ast_expr_ptr parse_bor() {
    auto e = parse_bxor();
    while (at_punct("|")) {
      auto pos = cur.pos;
      bump();
      e = mk(ast_op::bor, {e, parse_bxor()}, pos);
    }
    return e;
  }

  ast_expr_ptr parse_bxor() {
    auto e = parse_band();
    while (at_punct("^")) {
      auto pos = cur.pos;
      bump();
      e = mk(ast_op::bxor, {e, parse_band()}, pos);
    }
    return e;
  }

  ast_expr_ptr parse_band() {
    auto e = parse_equality();
    while (at_punct("&")) {
      auto pos = cur.pos;
      bump();
      e = mk(ast_op::band, {e, parse_equality()}, pos);
    }
    return e;
  }

  ast_expr_ptr parse_equality() {
    auto e = parse_rel();
    for (;;) {
      if (at_punct("==")) {
        auto pos = cur.pos;
        bump();
        e = mk(ast_op::eq, {e, parse_rel()}, pos);
      } else if (at_punct("!=")) {
        auto pos = cur.pos;
        bump();
        e = mk(ast_op::ne, {e, parse_rel()}, pos);
      } else {
        return e;
      }
    }
  }

  ast_expr_ptr parse_rel() {
    auto e = parse_shift();
    for (;;) {
      ast_op op;
      if (at_punct("<")) op = ast_op::lt;
      else if (at_punct("<=")) op = ast_op::le;
      else if (at_punct(">")) op = ast_op::gt;
      else if (at_punct(">=")) op = ast_op::ge;
      else return e;
      auto pos = cur.pos;
      bump();
      e = mk(op, {e, parse_shift()}, pos);
    }
  }

  ast_expr_ptr parse_shift() {
    auto e = parse_add();
    for (;;) {
      ast_op op;
      if (at_punct("<<")) op = ast_op::shl;
      else if (at_punct(">>")) op = ast_op::shr;
      else return e;
      auto pos = cur.pos;
      bump();
      e = mk(op, {e, parse_add()}, pos);
    }
  }

  ast_expr_ptr parse_add() {
    auto e = parse_mul();
    for (;;) {
      ast_op op;
      if (at_punct("+")) op = ast_op::add;
      else if (at_punct("-")) op = ast_op::sub;
      else return e;
      auto pos = cur.pos;
      bump();
      e = mk(op, {e, parse_mul()}, pos);
    }
  }

  ast_expr_ptr parse_mul() {
    auto e = parse_unary();
    for (;;) {
      ast_op op;
      if (at_punct("*")) op = ast_op::mul;
      else if (at_punct("/")) op = ast_op::div_;
      else if (at_punct("%")) op = ast_op::rem;
      else return e;
      auto pos = cur.pos;
      bump();
      e = mk(op, {e, parse_unary()}, pos);
    }
  }

  ast_expr_ptr parse_unary() {
    auto pos = cur.pos;
    if (at_punct("!")) {
      bump();
      return mk(ast_op::lnot, {parse_unary()}, pos);
    }
    if (at_punct("~")) {
      bump();
      return mk(ast_op::bnot, {parse_unary()}, pos);
    }
    if (at_punct("-")) {
      bump();
      return mk(ast_op::negate, {parse_unary()}, pos);
    }
    return parse_primary();
  }

  ast_expr_ptr parse_primary() {
    check_unsupported();
    auto pos = cur.pos;
    if (at_punct("(")) {
      bump();
      auto e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (cur.k == token::kind::number) {
      auto e = std::make_shared<ast_expr>();
      e->op = ast_op::lit;
      e->lit = cur.value;
      e->pos = pos;
      bump();
      return e;
    }
    if (cur.k == token::kind::ident) {
      if (cur.text == "nondet") fail("nondet() is only allowed as a whole assignment");
      auto e = std::make_shared<ast_expr>();
      e->op = ast_op::ident;
      e->name = cur.text;
      e->pos = pos;
      bump();
      if (at_punct("(")) fail("unsupported construct: function call");
      return e;
    }
    fail("expected expression");
  }

  // --- type checking ---

  const var_info *find_decl(const std::string &name) {
    for (const auto &d : decls)
      if (d.name == name) return &d;
    return nullptr;
  }

  const var_info &require_decl(const std::string &name, source_pos pos) {
    const var_info *d = find_decl(name);
    if (!d) throw parse_error("undeclared variable " + name, pos);
    return *d;
  }

  void typecheck_block(const std::vector<ast_stmt_ptr> &stmts) {
    for (const auto &s : stmts) {
      switch (s->k) {
      case ast_stmt::kind::assign: {
        const var_info &d = require_decl(s->target, s->pos);
        switch (s->expr->op) {
        case ast_op::land:
        case ast_op::lor:
        case ast_op::lnot:
        case ast_op::lt:
        case ast_op::le:
        case ast_op::gt:
        case ast_op::ge:
        case ast_op::eq:
        case ast_op::ne:
          // boolean result, zero-extended into the target
          type_bool(s->expr);
          break;
        default: {
          // value is computed in its own type and converted on assignment
          auto nat = natural_type(s->expr);
          type_info t = nat ? *nat : type_info{d.width, d.is_signed};
          type_expr(s->expr, t);
          break;
        }
        }
        break;
      }
      case ast_stmt::kind::assign_nondet:
        require_decl(s->target, s->pos);
        break;
      case ast_stmt::kind::while_loop:
      case ast_stmt::kind::if_else:
        type_bool(s->expr);
        typecheck_block(s->body);
        typecheck_block(s->else_body);
        break;
      }
    }
  }

  // Determines a type bottom-up where identifiers pin it; literals adopt the
  // sibling's or the context's type.
  std::optional<type_info> natural_type(const ast_expr_ptr &e) {
    switch (e->op) {
    case ast_op::lit: return std::nullopt;
    case ast_op::ident: {
      const var_info &d = require_decl(e->name, e->pos);
      return type_info{d.width, d.is_signed};
    }
    case ast_op::lnot:
    case ast_op::land:
    case ast_op::lor:
    case ast_op::lt:
    case ast_op::le:
    case ast_op::gt:
    case ast_op::ge:
    case ast_op::eq:
    case ast_op::ne:
      return std::nullopt; // boolean, width-less
    case ast_op::bnot:
    case ast_op::negate: return natural_type(e->args[0]);
    default: {
      auto a = natural_type(e->args[0]);
      if (a) return a;
      return natural_type(e->args[1]);
    }
    }
  }

  void type_bool(const ast_expr_ptr &e) {
    switch (e->op) {
    case ast_op::land:
    case ast_op::lor:
      type_bool(e->args[0]);
      type_bool(e->args[1]);
      e->is_bool = true;
      return;
    case ast_op::lnot:
      type_bool(e->args[0]);
      e->is_bool = true;
      return;
    case ast_op::lt:
    case ast_op::le:
    case ast_op::gt:
    case ast_op::ge:
    case ast_op::eq:
    case ast_op::ne: {
      auto a = natural_type(e->args[0]);
      auto b = natural_type(e->args[1]);
      if (a && b) {
        if (a->width != b->width)
          throw parse_error("comparison of operands with different widths", e->pos);
        if (a->is_signed != b->is_signed)
          throw parse_error("mixed-signedness comparison", e->pos);
      }
      type_info t = a ? *a : (b ? *b : type_info{64, false});
      type_expr(e->args[0], t);
      type_expr(e->args[1], t);
      e->is_bool = true;
      return;
    }
    case ast_op::lit:
      // literal as a condition: nonzero test
      e->width = 64;
      e->is_signed = false;
      e->is_bool = false;
      return;
    default: {
      auto t = natural_type(e);
      type_expr(e, t ? *t : type_info{64, false});
      return;
    }
    }
  }

  void type_expr(const ast_expr_ptr &e, type_info expected) {
    switch (e->op) {
    case ast_op::lit:
      if (e->lit > word::mask(expected.width))
        throw parse_error("literal does not fit in " + std::to_string(expected.width) + " bits",
                          e->pos);
      e->width = expected.width;
      e->is_signed = expected.is_signed;
      return;
    case ast_op::ident: {
      const var_info &d = require_decl(e->name, e->pos);
      e->width = d.width;
      e->is_signed = d.is_signed;
      if (d.width != expected.width)
        throw parse_error("width mismatch for variable " + e->name, e->pos);
      return;
    }
    case ast_op::land:
    case ast_op::lor:
    case ast_op::lnot:
    case ast_op::lt:
    case ast_op::le:
    case ast_op::gt:
    case ast_op::ge:
    case ast_op::eq:
    case ast_op::ne:
      // boolean used as a word: zero-extended
      type_bool(e);
      e->width = expected.width;
      e->is_signed = expected.is_signed;
      return;
    case ast_op::bnot:
    case ast_op::negate:
      type_expr(e->args[0], expected);
      e->width = expected.width;
      e->is_signed = expected.is_signed;
      return;
    case ast_op::shl:
    case ast_op::shr: {
      type_expr(e->args[0], expected);
      auto rt = natural_type(e->args[1]);
      if (rt && rt->width != expected.width)
        throw parse_error("shift amount width mismatch", e->pos);
      type_expr(e->args[1], type_info{expected.width, rt ? rt->is_signed : false});
      e->width = expected.width;
      e->is_signed = expected.is_signed;
      return;
    }
    default: {
      auto a = natural_type(e->args[0]);
      auto b = natural_type(e->args[1]);
      for (auto *t : {&a, &b}) {
        if (*t && ((*t)->width != expected.width))
          throw parse_error("width mismatch in expression", e->pos);
        if (*t && ((*t)->is_signed != expected.is_signed))
          throw parse_error("mixed-signedness arithmetic", e->pos);
      }
      type_expr(e->args[0], expected);
      type_expr(e->args[1], expected);
      e->width = expected.width;
      e->is_signed = expected.is_signed;
      return;
    }
    }
  }
};

} // namespace

source_program parse(const std::string &text) {
  parser p(text);
  return p.parse_program();
}

// --- pretty printing -----------------------------------------------------------

namespace {

int precedence(ast_op op) {
  switch (op) {
  case ast_op::lor: return 1;
  case ast_op::land: return 2;
  case ast_op::bor: return 3;
  case ast_op::bxor: return 4;
  case ast_op::band: return 5;
  case ast_op::eq:
  case ast_op::ne: return 6;
  case ast_op::lt:
  case ast_op::le:
  case ast_op::gt:
  case ast_op::ge: return 7;
  case ast_op::shl:
  case ast_op::shr: return 8;
  case ast_op::add:
  case ast_op::sub: return 9;
  case ast_op::mul:
  case ast_op::div_:
  case ast_op::rem: return 10;
  default: return 11; // unary & primary
  }
}

const char *op_text(ast_op op) {
  switch (op) {
  case ast_op::add: return "+";
  case ast_op::sub: return "-";
  case ast_op::mul: return "*";
  case ast_op::div_: return "/";
  case ast_op::rem: return "%";
  case ast_op::band: return "&";
  case ast_op::bor: return "|";
  case ast_op::bxor: return "^";
  case ast_op::shl: return "<<";
  case ast_op::shr: return ">>";
  case ast_op::lt: return "<";
  case ast_op::le: return "<=";
  case ast_op::gt: return ">";
  case ast_op::ge: return ">=";
  case ast_op::eq: return "==";
  case ast_op::ne: return "!=";
  case ast_op::land: return "&&";
  case ast_op::lor: return "||";
  default: return "?";
  }
}

void print_expr(const ast_expr_ptr &e, int parent_prec, std::ostringstream &os) {
  int prec = precedence(e->op);
  switch (e->op) {
  case ast_op::lit: os << e->lit; return;
  case ast_op::ident: os << e->name; return;
  case ast_op::lnot:
    os << "!";
    print_expr(e->args[0], prec, os);
    return;
  case ast_op::bnot:
    os << "~";
    print_expr(e->args[0], prec, os);
    return;
  case ast_op::negate:
    os << "-";
    print_expr(e->args[0], prec, os);
    return;
  default: break;
  }
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  print_expr(e->args[0], prec, os);
  os << " " << op_text(e->op) << " ";
  print_expr(e->args[1], prec + 1, os);
  if (paren) os << ")";
}

void print_block(const std::vector<ast_stmt_ptr> &stmts, int indent, std::ostringstream &os);

void print_stmt(const ast_stmt_ptr &s, int indent, std::ostringstream &os) {
  std::string pad(size_t(indent) * 2, ' ');
  switch (s->k) {
  case ast_stmt::kind::assign:
    os << pad << s->target << " = ";
    print_expr(s->expr, 0, os);
    os << ";\n";
    break;
  case ast_stmt::kind::assign_nondet:
    os << pad << s->target << " = nondet();\n";
    break;
  case ast_stmt::kind::while_loop:
    os << pad << "while (";
    print_expr(s->expr, 0, os);
    os << ") {\n";
    print_block(s->body, indent + 1, os);
    os << pad << "}\n";
    break;
  case ast_stmt::kind::if_else:
    os << pad << "if (";
    print_expr(s->expr, 0, os);
    os << ") {\n";
    print_block(s->body, indent + 1, os);
    os << pad << "}";
    if (!s->else_body.empty()) {
      os << " else {\n";
      print_block(s->else_body, indent + 1, os);
      os << pad << "}";
    }
    os << "\n";
    break;
  }
}

void print_block(const std::vector<ast_stmt_ptr> &stmts, int indent, std::ostringstream &os) {
  for (const auto &s : stmts) print_stmt(s, indent, os);
}

bool expr_equal(const ast_expr_ptr &a, const ast_expr_ptr &b) {
  if (a->op != b->op) return false;
  if (a->op == ast_op::lit) return a->lit == b->lit;
  if (a->op == ast_op::ident) return a->name == b->name;
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool block_equal(const std::vector<ast_stmt_ptr> &a, const std::vector<ast_stmt_ptr> &b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    const auto &x = a[i], &y = b[i];
    if (x->k != y->k || x->target != y->target) return false;
    if ((x->expr != nullptr) != (y->expr != nullptr)) return false;
    if (x->expr && !expr_equal(x->expr, y->expr)) return false;
    if (!block_equal(x->body, y->body) || !block_equal(x->else_body, y->else_body)) return false;
  }
  return true;
}

size_t block_loops(const std::vector<ast_stmt_ptr> &stmts) {
  size_t n = 0;
  for (const auto &s : stmts) {
    if (s->k == ast_stmt::kind::while_loop) ++n;
    n += block_loops(s->body) + block_loops(s->else_body);
  }
  return n;
}

size_t block_depth(const std::vector<ast_stmt_ptr> &stmts) {
  size_t d = 0;
  for (const auto &s : stmts) {
    size_t inner = std::max(block_depth(s->body), block_depth(s->else_body));
    if (s->k == ast_stmt::kind::while_loop) inner += 1;
    d = std::max(d, inner);
  }
  return d;
}

} // namespace

std::string pretty_print(const source_program &p) {
  std::ostringstream os;
  for (const auto &d : p.decls)
    os << (d.is_signed ? "i" : "u") << d.width << " " << d.name << ";\n";
  print_block(p.body, 0, os);
  return os.str();
}

bool ast_equal(const source_program &a, const source_program &b) {
  return a.decls == b.decls && block_equal(a.body, b.body);
}

size_t count_loops(const source_program &p) { return block_loops(p.body); }
size_t max_loop_depth(const source_program &p) { return block_depth(p.body); }

} // namespace bvt
