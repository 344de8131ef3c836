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

#ifndef BVT_EXPR_HPP
#define BVT_EXPR_HPP

#include "bvt/word.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bvt {

// Quantifier-free bit-vector expression DAG. Boolean-valued nodes
// (comparisons, connectives) have width 1.
enum class bv_op : uint8_t {
  var,
  constant,
  hole, // named second-order slot; eliminated before bit-blasting
  add,
  sub,
  mul,
  udiv,
  sdiv,
  urem,
  srem,
  neg,
  bvand,
  bvor,
  bvxor,
  bvnot,
  shl,
  lshr,
  ashr,
  ult,
  ule,
  slt,
  sle,
  eq,
  ne,
  land,
  lor,
  lnot,
  implies,
  ite,
  zext,
  sext,
  trunc,
};

struct bv_node;
using bv_expr = std::shared_ptr<const bv_node>;

struct bv_node {
  bv_op op;
  unsigned width;
  uint64_t cval = 0;     // constant value
  std::string name;      // var or hole name
  unsigned hole_out = 0; // which output of a hole application
  std::vector<bv_expr> args;
};

const char *op_name(bv_op op);

bv_expr mk_var(const std::string &name, unsigned width);
bv_expr mk_const(const word &w);
bv_expr mk_const(unsigned width, uint64_t value);
bv_expr mk_bool(bool b);
// Application of the named second-order slot to concrete argument
// expressions; `out` selects one output of a multi-output program.
bv_expr mk_hole(const std::string &name, unsigned out_width,
                const std::vector<bv_expr> &args, unsigned out = 0);

bv_expr mk_binary(bv_op op, const bv_expr &a, const bv_expr &b);
bv_expr mk_unary(bv_op op, const bv_expr &a);
bv_expr mk_ite(const bv_expr &c, const bv_expr &t, const bv_expr &f);
bv_expr mk_zext(const bv_expr &a, unsigned width);
bv_expr mk_sext(const bv_expr &a, unsigned width);
bv_expr mk_trunc(const bv_expr &a, unsigned width);

bv_expr mk_and(const bv_expr &a, const bv_expr &b);
bv_expr mk_or(const bv_expr &a, const bv_expr &b);
bv_expr mk_not(const bv_expr &a);
bv_expr mk_implies(const bv_expr &a, const bv_expr &b);
bv_expr mk_eq(const bv_expr &a, const bv_expr &b);
bv_expr mk_conj(const std::vector<bv_expr> &xs); // empty -> true
bv_expr mk_disj(const std::vector<bv_expr> &xs); // empty -> false

using valuation = std::map<std::string, word>;

// Evaluates hole applications: (hole name, argument values, output index).
using hole_eval_fn = std::function<word(const std::string &, const std::vector<word> &, unsigned)>;

// Evaluate `e` under `v`. Unbound variables are a programming error unless
// `default_zero` is set, in which case they read as zero. Hole nodes require
// `holes`.
word eval(const bv_expr &e, const valuation &v, const hole_eval_fn *holes = nullptr,
          bool default_zero = false);

// Memoized evaluator for repeated evaluation of one DAG under one valuation
// with varying hole candidates: subtrees independent of holes are evaluated
// once and cached.
class cached_eval {
public:
  cached_eval(bv_expr root, const valuation &v, bool default_zero = true);
  word run(const hole_eval_fn &holes) const;
  bool has_holes() const { return has_holes_; }

private:
  bv_expr root_;
  valuation vals_;
  bool default_zero_;
  bool has_holes_ = false;
  mutable std::map<const bv_node *, word> fixed_; // hole-independent subvalues
  std::map<const bv_node *, bool> depends_;
  bool mark(const bv_expr &e);
  word run_node(const bv_expr &e, const hole_eval_fn &holes,
                std::map<const bv_node *, word> &memo) const;
};

// Collect the names and widths of all variables in `e`.
void collect_vars(const bv_expr &e, std::map<std::string, unsigned> &out);
bool contains_hole(const bv_expr &e);

// Replace hole applications via `subst`; returns a hole-free DAG when `subst`
// covers every hole.
bv_expr substitute_holes(const bv_expr &e,
                         const std::function<bv_expr(const bv_node &)> &subst);

// Rename variables according to `map` (identity for names not present).
bv_expr rename_vars(const bv_expr &e, const std::map<std::string, std::string> &map);

// Replace variables by expressions (identity for names not present).
bv_expr substitute_vars(const bv_expr &e, const std::map<std::string, bv_expr> &map);

std::string to_string(const bv_expr &e);

} // namespace bvt

#endif
