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

namespace bvt {

namespace {

// Symbolic store threaded through straight-line code: each variable maps to
// an expression over the segment's entry values and nondet input symbols.
struct sym_store {
  std::map<std::string, bv_expr> m;
};

struct extractor {
  const source_program &prog;
  int nondet_counter = 0;

  const var_info &decl(const std::string &name) {
    for (const auto &d : prog.decls)
      if (d.name == name) return d;
    throw std::logic_error("extract: unknown variable " + name);
  }

  bv_expr lower_bool(const ast_expr_ptr &e, const sym_store &st);

  bv_expr lower_word(const ast_expr_ptr &e, const sym_store &st) {
    switch (e->op) {
    case ast_op::lit: return mk_const(e->width, e->lit);
    case ast_op::ident: return st.m.at(e->name);
    case ast_op::land:
    case ast_op::lor:
    case ast_op::lnot:
    case ast_op::lt:
    case ast_op::le:
    case ast_op::gt:
    case ast_op::ge:
    case ast_op::eq:
    case ast_op::ne: return mk_zext(lower_bool(e, st), e->width ? e->width : 1);
    case ast_op::bnot: return mk_unary(bv_op::bvnot, lower_word(e->args[0], st));
    case ast_op::negate: return mk_unary(bv_op::neg, lower_word(e->args[0], st));
    default: break;
    }
    bv_expr a = lower_word(e->args[0], st);
    bv_expr b = lower_word(e->args[1], st);
    bool sgn = e->is_signed;
    switch (e->op) {
    case ast_op::add: return mk_binary(bv_op::add, a, b);
    case ast_op::sub: return mk_binary(bv_op::sub, a, b);
    case ast_op::mul: return mk_binary(bv_op::mul, a, b);
    case ast_op::div_: return mk_binary(sgn ? bv_op::sdiv : bv_op::udiv, a, b);
    case ast_op::rem: return mk_binary(sgn ? bv_op::srem : bv_op::urem, a, b);
    case ast_op::band: return mk_binary(bv_op::bvand, a, b);
    case ast_op::bor: return mk_binary(bv_op::bvor, a, b);
    case ast_op::bxor: return mk_binary(bv_op::bvxor, a, b);
    case ast_op::shl: return mk_binary(bv_op::shl, a, b);
    case ast_op::shr: return mk_binary(sgn ? bv_op::ashr : bv_op::lshr, a, b);
    default: throw std::logic_error("lower_word: unexpected op");
    }
  }

  static bv_expr convert(const bv_expr &v, bool from_signed, unsigned to_width) {
    if (v->width == to_width) return v;
    if (v->width > to_width) return mk_trunc(v, to_width);
    return from_signed ? mk_sext(v, to_width) : mk_zext(v, to_width);
  }

  sym_store initial_store() {
    sym_store st;
    for (const auto &d : prog.decls) st.m.emplace(d.name, mk_var(d.name, d.width));
    return st;
  }

  transition store_to_transition(const sym_store &st, std::vector<input_sym> inputs) {
    transition t;
    for (const auto &d : prog.decls) t.updates.push_back(st.m.at(d.name));
    t.inputs = std::move(inputs);
    return t;
  }

  // Executes straight-line statements symbolically; loops are rejected.
  void exec_straight(const std::vector<ast_stmt_ptr> &stmts, sym_store &st,
                     std::vector<input_sym> &inputs) {
    for (const auto &s : stmts) exec_stmt(s, st, inputs);
  }

  void exec_stmt(const ast_stmt_ptr &s, sym_store &st, std::vector<input_sym> &inputs) {
    switch (s->k) {
    case ast_stmt::kind::assign: {
      const var_info &d = decl(s->target);
      bv_expr v;
      if (s->expr->is_bool)
        v = mk_zext(lower_bool(s->expr, st), d.width);
      else
        v = convert(lower_word(s->expr, st), s->expr->is_signed, d.width);
      st.m[s->target] = v;
      break;
    }
    case ast_stmt::kind::assign_nondet: {
      const var_info &d = decl(s->target);
      input_sym in{"nd" + std::to_string(nondet_counter++) + ":" + s->target, d.width};
      inputs.push_back(in);
      st.m[s->target] = mk_var(in.name, in.width);
      break;
    }
    case ast_stmt::kind::if_else: {
      bv_expr c = lower_bool(s->expr, st);
      sym_store then_st = st, else_st = st;
      exec_straight(s->body, then_st, inputs);
      exec_straight(s->else_body, else_st, inputs);
      for (auto &[name, v] : st.m) {
        const bv_expr &tv = then_st.m.at(name);
        const bv_expr &ev = else_st.m.at(name);
        if (tv != ev) v = mk_ite(c, tv, ev);
      }
      break;
    }
    case ast_stmt::kind::while_loop:
      throw parse_error("unsupported construct: loop inside conditional", s->pos);
    }
  }

  // Splits a statement list into straight-line / loop segments.
  void split_segments(const std::vector<ast_stmt_ptr> &stmts, transition &lead,
                      std::vector<std::pair<loop_spec, transition>> &segments) {
    sym_store st = initial_store();
    std::vector<input_sym> inputs;
    bool lead_done = false;
    for (const auto &s : stmts) {
      if (s->k == ast_stmt::kind::while_loop) {
        transition t = store_to_transition(st, std::move(inputs));
        if (!lead_done) {
          lead = std::move(t);
          lead_done = true;
        } else {
          segments.back().second = std::move(t);
        }
        segments.emplace_back(extract_loop(s), transition{});
        st = initial_store();
        inputs = {};
        continue;
      }
      bool contains_loop = s->k == ast_stmt::kind::if_else &&
                           (block_contains_loop(s->body) || block_contains_loop(s->else_body));
      if (contains_loop)
        throw parse_error("unsupported construct: loop inside conditional", s->pos);
      exec_stmt(s, st, inputs);
    }
    transition t = store_to_transition(st, std::move(inputs));
    if (!lead_done)
      lead = std::move(t);
    else
      segments.back().second = std::move(t);
  }

  static bool block_contains_loop(const std::vector<ast_stmt_ptr> &stmts) {
    for (const auto &s : stmts) {
      if (s->k == ast_stmt::kind::while_loop) return true;
      if (block_contains_loop(s->body) || block_contains_loop(s->else_body)) return true;
    }
    return false;
  }

  loop_spec extract_loop(const ast_stmt_ptr &s) {
    loop_spec l;
    l.pos = s->pos;
    sym_store st = initial_store();
    l.guard = lower_bool(s->expr, st);
    split_segments(s->body, l.pre, l.inner);
    return l;
  }
};

bv_expr extractor::lower_bool(const ast_expr_ptr &e, const sym_store &st) {
  switch (e->op) {
  case ast_op::land: return mk_and(lower_bool(e->args[0], st), lower_bool(e->args[1], st));
  case ast_op::lor: return mk_or(lower_bool(e->args[0], st), lower_bool(e->args[1], st));
  case ast_op::lnot: return mk_not(lower_bool(e->args[0], st));
  case ast_op::lt:
  case ast_op::le:
  case ast_op::gt:
  case ast_op::ge: {
    bv_expr a = lower_word(e->args[0], st);
    bv_expr b = lower_word(e->args[1], st);
    bool sgn = e->args[0]->is_signed || e->args[1]->is_signed;
    switch (e->op) {
    case ast_op::lt: return mk_binary(sgn ? bv_op::slt : bv_op::ult, a, b);
    case ast_op::le: return mk_binary(sgn ? bv_op::sle : bv_op::ule, a, b);
    case ast_op::gt: return mk_binary(sgn ? bv_op::slt : bv_op::ult, b, a);
    default: return mk_binary(sgn ? bv_op::sle : bv_op::ule, b, a);
    }
  }
  case ast_op::eq: return mk_binary(bv_op::eq, lower_word(e->args[0], st), lower_word(e->args[1], st));
  case ast_op::ne: return mk_binary(bv_op::ne, lower_word(e->args[0], st), lower_word(e->args[1], st));
  default: {
    bv_expr v = lower_word(e, st);
    if (v->op == bv_op::constant) return mk_bool(v->cval != 0);
    return mk_binary(bv_op::ne, v, mk_const(v->width, 0));
  }
  }
}

} // namespace

size_t count_loops(const loop_nest &n) {
  std::function<size_t(const loop_spec &)> rec = [&](const loop_spec &l) -> size_t {
    size_t k = 1;
    for (const auto &[il, p] : l.inner) k += rec(il);
    return k;
  };
  size_t total = 0;
  for (const auto &tl : n.loops) total += rec(tl.loop);
  return total;
}

size_t max_loop_depth(const loop_nest &n) {
  size_t d = 0;
  for (const auto &tl : n.loops) d = std::max(d, tl.loop.depth());
  return d;
}

loop_nest extract_loop_nest(const source_program &p) {
  extractor ex{p};
  loop_nest nest;
  nest.vars = p.decls;

  transition lead;
  std::vector<std::pair<loop_spec, transition>> segments;
  ex.split_segments(p.body, lead, segments);

  transition next_prefix = std::move(lead);
  for (auto &[loop, after] : segments) {
    top_loop tl;
    tl.prefix = std::move(next_prefix);
    tl.loop = std::move(loop);
    nest.loops.push_back(std::move(tl));
    next_prefix = std::move(after);
  }
  nest.epilogue = std::move(next_prefix);
  return nest;
}

} // namespace bvt
