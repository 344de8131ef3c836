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

#ifndef BVT_FRONTEND_HPP
#define BVT_FRONTEND_HPP

#include "bvt/semantics.hpp"

#include <memory>
#include <stdexcept>

namespace bvt {

struct source_pos {
  int line = 0;
  int col = 0;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &msg, source_pos pos)
      : std::runtime_error(msg + " at line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.col)),
        pos(pos) {}
  source_pos pos;
};

// --- abstract syntax ---------------------------------------------------------

enum class ast_op : uint8_t {
  lit, ident,
  add, sub, mul, div_, rem, band, bor, bxor, shl, shr,
  lt, le, gt, ge, eq, ne,
  land, lor, lnot, bnot, negate,
};

struct ast_expr;
using ast_expr_ptr = std::shared_ptr<ast_expr>;

struct ast_expr {
  ast_op op;
  uint64_t lit = 0;
  std::string name;
  std::vector<ast_expr_ptr> args;
  source_pos pos;

  // filled by the type checker; width 0 plus is_bool marks boolean values
  unsigned width = 0;
  bool is_signed = false;
  bool is_bool = false;
};

struct ast_stmt;
using ast_stmt_ptr = std::shared_ptr<ast_stmt>;

struct ast_stmt {
  enum class kind : uint8_t { assign, assign_nondet, while_loop, if_else };
  kind k;
  std::string target;         // assign*, target variable
  ast_expr_ptr expr;          // assign value / guard
  std::vector<ast_stmt_ptr> body;
  std::vector<ast_stmt_ptr> else_body;
  source_pos pos;
};

struct source_program {
  var_list decls;
  std::vector<ast_stmt_ptr> body;
};

// Parse and type-check; throws parse_error with position info.
source_program parse(const std::string &text);

std::string pretty_print(const source_program &p);
bool ast_equal(const source_program &a, const source_program &b);

size_t count_loops(const source_program &p);
size_t max_loop_depth(const source_program &p);

// --- loop-nest model ----------------------------------------------------------

// A loop body is a leading straight-line relation followed by zero or more
// (inner loop, trailing straight-line relation) segments.
struct loop_spec {
  bv_expr guard; // 1-bit over the program variables
  transition pre;
  std::vector<std::pair<loop_spec, transition>> inner;
  source_pos pos;

  bool simple() const { return inner.empty(); }
  // For simple loops, the body transition.
  const transition &body() const { return pre; }
  size_t depth() const {
    size_t d = 0;
    for (const auto &[l, p] : inner) d = std::max(d, l.depth());
    return d + 1;
  }
};

struct top_loop {
  transition prefix; // straight-line code executed before the loop is entered
  loop_spec loop;
};

struct loop_nest {
  var_list vars;
  std::vector<top_loop> loops;
  transition epilogue; // trailing straight-line code; never affects termination
};

size_t count_loops(const loop_nest &n);
size_t max_loop_depth(const loop_nest &n);

// Normalizes the AST into guards, functional-form bodies and straight-line
// glue relations. Loops nested under conditionals are not supported.
loop_nest extract_loop_nest(const source_program &p);

} // namespace bvt

#endif
