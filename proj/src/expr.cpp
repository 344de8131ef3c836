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

#include "bvt/expr.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bvt {

const char *op_name(bv_op op) {
  switch (op) {
  case bv_op::var: return "var";
  case bv_op::constant: return "const";
  case bv_op::hole: return "hole";
  case bv_op::add: return "add";
  case bv_op::sub: return "sub";
  case bv_op::mul: return "mul";
  case bv_op::udiv: return "udiv";
  case bv_op::sdiv: return "sdiv";
  case bv_op::urem: return "urem";
  case bv_op::srem: return "srem";
  case bv_op::neg: return "neg";
  case bv_op::bvand: return "and";
  case bv_op::bvor: return "or";
  case bv_op::bvxor: return "xor";
  case bv_op::bvnot: return "not";
  case bv_op::shl: return "shl";
  case bv_op::lshr: return "lshr";
  case bv_op::ashr: return "ashr";
  case bv_op::ult: return "ult";
  case bv_op::ule: return "ule";
  case bv_op::slt: return "slt";
  case bv_op::sle: return "sle";
  case bv_op::eq: return "eq";
  case bv_op::ne: return "ne";
  case bv_op::land: return "land";
  case bv_op::lor: return "lor";
  case bv_op::lnot: return "lnot";
  case bv_op::implies: return "implies";
  case bv_op::ite: return "ite";
  case bv_op::zext: return "zext";
  case bv_op::sext: return "sext";
  case bv_op::trunc: return "trunc";
  }
  return "?";
}

namespace {

bv_expr mk_node(bv_node n) { return std::make_shared<bv_node>(std::move(n)); }

[[noreturn]] void width_error(const char *what) {
  throw std::logic_error(std::string("expression width error: ") + what);
}

bool is_bool_op(bv_op op) {
  switch (op) {
  case bv_op::ult:
  case bv_op::ule:
  case bv_op::slt:
  case bv_op::sle:
  case bv_op::eq:
  case bv_op::ne:
  case bv_op::land:
  case bv_op::lor:
  case bv_op::lnot:
  case bv_op::implies:
    return true;
  default:
    return false;
  }
}

} // namespace

bv_expr mk_var(const std::string &name, unsigned width) {
  bv_node n;
  n.op = bv_op::var;
  n.width = width;
  n.name = name;
  return mk_node(std::move(n));
}

bv_expr mk_const(const word &w) {
  bv_node n;
  n.op = bv_op::constant;
  n.width = w.width();
  n.cval = w.bits();
  return mk_node(std::move(n));
}

bv_expr mk_const(unsigned width, uint64_t value) { return mk_const(word(width, value)); }

bv_expr mk_bool(bool b) { return mk_const(1, b ? 1 : 0); }

bv_expr mk_hole(const std::string &name, unsigned out_width,
                const std::vector<bv_expr> &args, unsigned out) {
  bv_node n;
  n.op = bv_op::hole;
  n.width = out_width;
  n.name = name;
  n.hole_out = out;
  n.args = args;
  return mk_node(std::move(n));
}

bv_expr mk_binary(bv_op op, const bv_expr &a, const bv_expr &b) {
  if (a->width != b->width) width_error(op_name(op));
  if ((op == bv_op::land || op == bv_op::lor || op == bv_op::implies) && a->width != 1)
    width_error("logical connective on non-boolean");
  bv_node n;
  n.op = op;
  n.width = is_bool_op(op) ? 1 : a->width;
  n.args = {a, b};
  return mk_node(std::move(n));
}

bv_expr mk_unary(bv_op op, const bv_expr &a) {
  if (op == bv_op::lnot && a->width != 1) width_error("lnot on non-boolean");
  bv_node n;
  n.op = op;
  n.width = a->width;
  if (op == bv_op::lnot) n.width = 1;
  n.args = {a};
  return mk_node(std::move(n));
}

bv_expr mk_ite(const bv_expr &c, const bv_expr &t, const bv_expr &f) {
  if (c->width != 1) width_error("ite condition");
  if (t->width != f->width) width_error("ite arms");
  bv_node n;
  n.op = bv_op::ite;
  n.width = t->width;
  n.args = {c, t, f};
  return mk_node(std::move(n));
}

static bv_expr mk_resize(bv_op op, const bv_expr &a, unsigned width) {
  bv_node n;
  n.op = op;
  n.width = width;
  n.args = {a};
  return mk_node(std::move(n));
}

bv_expr mk_zext(const bv_expr &a, unsigned width) {
  if (width < a->width) width_error("zext");
  if (width == a->width) return a;
  return mk_resize(bv_op::zext, a, width);
}

bv_expr mk_sext(const bv_expr &a, unsigned width) {
  if (width < a->width) width_error("sext");
  if (width == a->width) return a;
  return mk_resize(bv_op::sext, a, width);
}

bv_expr mk_trunc(const bv_expr &a, unsigned width) {
  if (width > a->width) width_error("trunc");
  if (width == a->width) return a;
  return mk_resize(bv_op::trunc, a, width);
}

bv_expr mk_and(const bv_expr &a, const bv_expr &b) {
  if (a->op == bv_op::constant) return a->cval ? b : a;
  if (b->op == bv_op::constant) return b->cval ? a : b;
  return mk_binary(bv_op::land, a, b);
}

bv_expr mk_or(const bv_expr &a, const bv_expr &b) {
  if (a->op == bv_op::constant) return a->cval ? a : b;
  if (b->op == bv_op::constant) return b->cval ? b : a;
  return mk_binary(bv_op::lor, a, b);
}

bv_expr mk_not(const bv_expr &a) {
  if (a->op == bv_op::constant) return mk_bool(!a->cval);
  return mk_unary(bv_op::lnot, a);
}

bv_expr mk_implies(const bv_expr &a, const bv_expr &b) { return mk_binary(bv_op::implies, a, b); }

bv_expr mk_eq(const bv_expr &a, const bv_expr &b) { return mk_binary(bv_op::eq, a, b); }

bv_expr mk_conj(const std::vector<bv_expr> &xs) {
  bv_expr r = mk_bool(true);
  for (const auto &x : xs) r = mk_and(r, x);
  return r;
}

bv_expr mk_disj(const std::vector<bv_expr> &xs) {
  bv_expr r = mk_bool(false);
  for (const auto &x : xs) r = mk_or(r, x);
  return r;
}

namespace {

word apply_op(const bv_node &n, const std::vector<word> &a) {
  switch (n.op) {
  case bv_op::add: return add(a[0], a[1]);
  case bv_op::sub: return sub(a[0], a[1]);
  case bv_op::mul: return mul(a[0], a[1]);
  case bv_op::udiv: return udiv(a[0], a[1]);
  case bv_op::sdiv: return sdiv(a[0], a[1]);
  case bv_op::urem: return urem(a[0], a[1]);
  case bv_op::srem: return srem(a[0], a[1]);
  case bv_op::neg: return neg(a[0]);
  case bv_op::bvand: return bv_and(a[0], a[1]);
  case bv_op::bvor: return bv_or(a[0], a[1]);
  case bv_op::bvxor: return bv_xor(a[0], a[1]);
  case bv_op::bvnot: return bv_not(a[0]);
  case bv_op::shl: return shl(a[0], a[1]);
  case bv_op::lshr: return lshr(a[0], a[1]);
  case bv_op::ashr: return ashr(a[0], a[1]);
  case bv_op::ult: return ult(a[0], a[1]);
  case bv_op::ule: return ule(a[0], a[1]);
  case bv_op::slt: return slt(a[0], a[1]);
  case bv_op::sle: return sle(a[0], a[1]);
  case bv_op::eq: return eq(a[0], a[1]);
  case bv_op::ne: return ne(a[0], a[1]);
  case bv_op::land: return word::from_bool(a[0].is_true() && a[1].is_true());
  case bv_op::lor: return word::from_bool(a[0].is_true() || a[1].is_true());
  case bv_op::lnot: return word::from_bool(!a[0].is_true());
  case bv_op::implies: return word::from_bool(!a[0].is_true() || a[1].is_true());
  case bv_op::ite: return a[0].is_true() ? a[1] : a[2];
  case bv_op::zext: return zext(a[0], n.width);
  case bv_op::sext: return sext(a[0], n.width);
  case bv_op::trunc: return trunc(a[0], n.width);
  default: throw std::logic_error("apply_op: not an operator");
  }
}

struct eval_ctx {
  const valuation &v;
  const hole_eval_fn *holes;
  bool default_zero;
  std::unordered_map<const bv_node *, word> memo;

  word run(const bv_expr &e) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    word r = compute(e);
    memo.emplace(e.get(), r);
    return r;
  }

  word compute(const bv_expr &e) {
    const bv_node &n = *e;
    switch (n.op) {
    case bv_op::var: {
      auto it = v.find(n.name);
      if (it == v.end()) {
        if (default_zero) return word(n.width, 0);
        throw std::logic_error("eval: unbound symbol " + n.name);
      }
      if (it->second.width() != n.width)
        throw std::logic_error("eval: width mismatch for symbol " + n.name);
      return it->second;
    }
    case bv_op::constant: return word(n.width, n.cval);
    case bv_op::hole: {
      if (!holes) throw std::logic_error("eval: unexpected hole " + n.name);
      std::vector<word> args;
      args.reserve(n.args.size());
      for (const auto &a : n.args) args.push_back(run(a));
      word r = (*holes)(n.name, args, n.hole_out);
      if (r.width() != n.width) throw std::logic_error("eval: hole output width mismatch");
      return r;
    }
    default: {
      std::vector<word> args;
      args.reserve(n.args.size());
      for (const auto &a : n.args) args.push_back(run(a));
      return apply_op(n, args);
    }
    }
  }
};

} // namespace

word eval(const bv_expr &e, const valuation &v, const hole_eval_fn *holes, bool default_zero) {
  eval_ctx ctx{v, holes, default_zero, {}};
  return ctx.run(e);
}

cached_eval::cached_eval(bv_expr root, const valuation &v, bool default_zero)
    : root_(std::move(root)), vals_(v), default_zero_(default_zero) {
  has_holes_ = mark(root_);
  if (!has_holes_) fixed_.emplace(root_.get(), eval(root_, vals_, nullptr, default_zero_));
}

bool cached_eval::mark(const bv_expr &e) {
  auto it = depends_.find(e.get());
  if (it != depends_.end()) return it->second;
  bool dep = e->op == bv_op::hole;
  for (const auto &a : e->args) dep = mark(a) || dep;
  depends_.emplace(e.get(), dep);
  return dep;
}

word cached_eval::run_node(const bv_expr &e, const hole_eval_fn &holes,
                           std::map<const bv_node *, word> &memo) const {
  auto dep = depends_.find(e.get());
  if (dep == depends_.end() || !dep->second) {
    auto f = fixed_.find(e.get());
    if (f != fixed_.end()) return f->second;
    word r = eval(e, vals_, nullptr, default_zero_);
    fixed_.emplace(e.get(), r);
    return r;
  }
  auto it = memo.find(e.get());
  if (it != memo.end()) return it->second;
  word r(e->width, 0);
  if (e->op == bv_op::hole) {
    std::vector<word> args;
    args.reserve(e->args.size());
    for (const auto &a : e->args) args.push_back(run_node(a, holes, memo));
    r = holes(e->name, args, e->hole_out);
  } else {
    std::vector<word> args;
    args.reserve(e->args.size());
    for (const auto &a : e->args) args.push_back(run_node(a, holes, memo));
    r = apply_op(*e, args);
  }
  memo.emplace(e.get(), r);
  return r;
}

word cached_eval::run(const hole_eval_fn &holes) const {
  std::map<const bv_node *, word> memo;
  return run_node(root_, holes, memo);
}

void collect_vars(const bv_expr &e, std::map<std::string, unsigned> &out) {
  if (e->op == bv_op::var) out.emplace(e->name, e->width);
  for (const auto &a : e->args) collect_vars(a, out);
}

bool contains_hole(const bv_expr &e) {
  if (e->op == bv_op::hole) return true;
  for (const auto &a : e->args)
    if (contains_hole(a)) return true;
  return false;
}

namespace {

bv_expr rewrite(const bv_expr &e, std::unordered_map<const bv_node *, bv_expr> &memo,
                const std::function<bv_expr(const bv_expr &)> &leaf) {
  auto it = memo.find(e.get());
  if (it != memo.end()) return it->second;
  bv_expr r = leaf(e);
  if (!r) {
    bv_node n = *e;
    bool changed = false;
    for (auto &a : n.args) {
      bv_expr na = rewrite(a, memo, leaf);
      if (na != a) changed = true;
      a = na;
    }
    r = changed ? std::make_shared<bv_node>(std::move(n)) : e;
  }
  memo.emplace(e.get(), r);
  return r;
}

} // namespace

bv_expr substitute_holes(const bv_expr &e,
                         const std::function<bv_expr(const bv_node &)> &subst) {
  std::unordered_map<const bv_node *, bv_expr> memo;
  std::function<bv_expr(const bv_expr &)> leaf = [&](const bv_expr &n) -> bv_expr {
    if (n->op != bv_op::hole) return nullptr;
    // substitute in the hole's own arguments first
    bv_node copy = *n;
    for (auto &a : copy.args) a = substitute_holes(a, subst);
    return subst(copy);
  };
  return rewrite(e, memo, leaf);
}

bv_expr rename_vars(const bv_expr &e, const std::map<std::string, std::string> &map) {
  std::unordered_map<const bv_node *, bv_expr> memo;
  std::function<bv_expr(const bv_expr &)> leaf = [&](const bv_expr &n) -> bv_expr {
    if (n->op != bv_op::var) return nullptr;
    auto it = map.find(n->name);
    if (it == map.end()) return n;
    return mk_var(it->second, n->width);
  };
  return rewrite(e, memo, leaf);
}

bv_expr substitute_vars(const bv_expr &e, const std::map<std::string, bv_expr> &map) {
  std::unordered_map<const bv_node *, bv_expr> memo;
  std::function<bv_expr(const bv_expr &)> leaf = [&](const bv_expr &n) -> bv_expr {
    if (n->op != bv_op::var) return nullptr;
    auto it = map.find(n->name);
    if (it == map.end()) return n;
    if (it->second->width != n->width)
      throw std::logic_error("substitute_vars: width mismatch for " + n->name);
    return it->second;
  };
  return rewrite(e, memo, leaf);
}

namespace {

void print(const bv_expr &e, std::ostringstream &os) {
  const bv_node &n = *e;
  switch (n.op) {
  case bv_op::var: os << n.name; return;
  case bv_op::constant: os << n.cval; return;
  case bv_op::hole:
    os << n.name;
    if (n.hole_out) os << "." << n.hole_out;
    os << "(";
    for (size_t i = 0; i < n.args.size(); ++i) {
      if (i) os << ", ";
      print(n.args[i], os);
    }
    os << ")";
    return;
  default:
    os << "(" << op_name(n.op);
    if (n.op == bv_op::zext || n.op == bv_op::sext || n.op == bv_op::trunc)
      os << "." << n.width;
    for (const auto &a : n.args) {
      os << " ";
      print(a, os);
    }
    os << ")";
  }
}

} // namespace

std::string to_string(const bv_expr &e) {
  std::ostringstream os;
  print(e, os);
  return os.str();
}

} // namespace bvt
