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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bvt/bitblast.hpp"

#include <random>

using namespace bvt;

namespace {

sat_result quick_solve(const bv_expr &e, valuation *model_out = nullptr) {
  auto [c, vm] = bitblast(e);
  sat_model m;
  sat_result r = solve_cdcl(c, m);
  if (r == sat_result::sat && model_out) *model_out = vm.decode_all(m);
  return r;
}

} // namespace

TEST_CASE("trivial propositional instances") {
  cnf c;
  int a = c.new_var(), b = c.new_var();
  c.add({a, b});
  c.add({-a});
  sat_model m;
  REQUIRE(solve_cdcl(c, m) == sat_result::sat);
  CHECK(m.value(b));
  CHECK_FALSE(m.value(a));

  cnf u;
  int x = u.new_var();
  u.add({x});
  u.add({-x});
  CHECK(solve_cdcl(u, m) == sat_result::unsat);
}

TEST_CASE("pigeonhole 4 into 3 is unsatisfiable") {
  cnf c;
  int var[4][3];
  for (auto &row : var)
    for (auto &v : row) v = c.new_var();
  for (auto &row : var) c.add({row[0], row[1], row[2]});
  for (int h = 0; h < 3; ++h)
    for (int p1 = 0; p1 < 4; ++p1)
      for (int p2 = p1 + 1; p2 < 4; ++p2) c.add({-var[p1][h], -var[p2][h]});
  sat_model m;
  CHECK(solve_cdcl(c, m) == sat_result::unsat);
}

TEST_CASE("random 3-sat agrees with brute force") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    int nv = 4 + int(rng() % 7);
    int nc = 3 + int(rng() % (2 * nv));
    cnf c;
    c.nvars = nv;
    for (int i = 0; i < nc; ++i) {
      std::vector<int> cl;
      for (int k = 0; k < 3; ++k) {
        int v = 1 + int(rng() % nv);
        cl.push_back(rng() % 2 ? v : -v);
      }
      c.add(cl);
    }
    bool brute_sat = false;
    for (uint32_t asg = 0; asg < (1u << nv) && !brute_sat; ++asg) {
      bool all = true;
      for (const auto &cl : c.clauses) {
        bool any = false;
        for (int l : cl) {
          int v = std::abs(l) - 1;
          bool val = (asg >> v) & 1;
          if ((l > 0) == val) any = true;
        }
        if (!any) all = false;
      }
      brute_sat = all;
    }
    sat_model m;
    sat_result r = solve_cdcl(c, m);
    REQUIRE(r == (brute_sat ? sat_result::sat : sat_result::unsat));
    if (r == sat_result::sat) {
      for (const auto &cl : c.clauses) {
        bool any = false;
        for (int l : cl)
          if ((l > 0) == m.value(std::abs(l))) any = true;
        CHECK(any);
      }
    }
  }
}

TEST_CASE("wraparound: x+1 == 0 at two bits has the model x = 3") {
  bv_expr x = mk_var("x", 2);
  bv_expr e = mk_eq(mk_binary(bv_op::add, x, mk_const(2, 1)), mk_const(2, 0));
  valuation model;
  REQUIRE(quick_solve(e, &model) == sat_result::sat);
  CHECK(model.at("x").bits() == 3);
}

TEST_CASE("x > 0 and x+1 > x is satisfiable but not valid at two bits") {
  bv_expr x = mk_var("x", 2);
  bv_expr gt0 = mk_binary(bv_op::ult, mk_const(2, 0), x);
  bv_expr incr = mk_binary(bv_op::ult, x, mk_binary(bv_op::add, x, mk_const(2, 1)));
  valuation model;
  REQUIRE(quick_solve(mk_and(gt0, incr), &model) == sat_result::sat);
  CHECK(model.at("x").bits() >= 1);

  // the universal claim fails: x = 3 is the counterexample
  valuation cex;
  REQUIRE(quick_solve(mk_not(incr), &cex) == sat_result::sat);
  CHECK(cex.at("x").bits() == 3);
}

TEST_CASE("constant false is unsatisfiable") {
  CHECK(quick_solve(mk_bool(false)) == sat_result::unsat);
}

TEST_CASE("3-bit powers of two are exactly 1, 2, 4") {
  bv_expr x = mk_var("x", 3);
  bv_expr pow2 =
      mk_eq(mk_binary(bv_op::bvand, x, mk_binary(bv_op::sub, x, mk_const(3, 1))), mk_const(3, 0));
  std::vector<bv_expr> cs = {pow2};
  for (uint64_t v : {0, 1, 2, 4})
    cs.push_back(mk_not(mk_eq(x, mk_const(3, v))));
  CHECK(quick_solve(mk_conj(cs)) == sat_result::unsat);

  // dropping one exclusion flips it
  std::vector<bv_expr> cs2(cs.begin(), cs.end() - 1);
  CHECK(quick_solve(mk_conj(cs2)) == sat_result::sat);
}

namespace {

// exhaustive circuit-vs-eval agreement for one binary operator
int check_binary_op(bv_op op, unsigned w) {
  int cases = 0;
  bv_expr x = mk_var("x", w), y = mk_var("y", w);
  bv_expr ap = mk_binary(op, x, y);
  unsigned rw = ap->width;
  bv_expr r = mk_var("r", rw);
  bv_expr probe = mk_and(mk_eq(r, ap), mk_bool(true));
  for (uint64_t a = 0; a <= word::mask(w); ++a)
    for (uint64_t b = 0; b <= word::mask(w); ++b) {
      valuation v{{"x", word(w, a)}, {"y", word(w, b)}};
      word expected = eval(ap, v);
      bv_expr grounded =
          mk_conj({mk_eq(x, mk_const(w, a)), mk_eq(y, mk_const(w, b)), probe});
      valuation model;
      REQUIRE(quick_solve(grounded, &model) == sat_result::sat);
      REQUIRE(model.at("r") == expected);
      ++cases;
    }
  return cases;
}

} // namespace

TEST_CASE("bit-blasting matches eval exhaustively at widths 1..3") {
  static const bv_op binops[] = {
      bv_op::add,  bv_op::sub,  bv_op::mul,  bv_op::udiv, bv_op::sdiv, bv_op::urem, bv_op::srem,
      bv_op::bvand, bv_op::bvor, bv_op::bvxor, bv_op::shl, bv_op::lshr, bv_op::ashr,
      bv_op::ult,  bv_op::ule,  bv_op::slt,  bv_op::sle,  bv_op::eq,   bv_op::ne};
  int total = 0;
  for (unsigned w = 1; w <= 3; ++w)
    for (bv_op op : binops) total += check_binary_op(op, w);
  CHECK(total == 3 * 0 + 19 * (4 + 16 + 64));
}

TEST_CASE("unary and ite circuits match eval exhaustively at width 3") {
  unsigned w = 3;
  bv_expr x = mk_var("x", w);
  for (bv_op op : {bv_op::neg, bv_op::bvnot}) {
    bv_expr ap = mk_unary(op, x);
    for (uint64_t a = 0; a <= word::mask(w); ++a) {
      valuation v{{"x", word(w, a)}};
      word expected = eval(ap, v);
      valuation model;
      bv_expr g = mk_conj({mk_eq(x, mk_const(w, a)), mk_eq(mk_var("r", w), ap)});
      REQUIRE(quick_solve(g, &model) == sat_result::sat);
      REQUIRE(model.at("r") == expected);
    }
  }
  bv_expr c = mk_var("c", 1), t = mk_var("t", w), f = mk_var("f", w);
  bv_expr it = mk_ite(c, t, f);
  for (uint64_t cv = 0; cv < 2; ++cv)
    for (uint64_t tv = 0; tv <= word::mask(w); ++tv)
      for (uint64_t fv = 0; fv <= word::mask(w); ++fv) {
        valuation v{{"c", word(1, cv)}, {"t", word(w, tv)}, {"f", word(w, fv)}};
        word expected = eval(it, v);
        valuation model;
        bv_expr g = mk_conj({mk_eq(c, mk_const(1, cv)), mk_eq(t, mk_const(w, tv)),
                             mk_eq(f, mk_const(w, fv)), mk_eq(mk_var("r", w), it)});
        REQUIRE(quick_solve(g, &model) == sat_result::sat);
        REQUIRE(model.at("r") == expected);
      }
}

namespace {

bv_expr random_dag(std::mt19937 &rng, const std::vector<bv_expr> &vars, unsigned w, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 3 == 0) return mk_const(w, rng() & word::mask(w));
    return vars[rng() % vars.size()];
  }
  static const bv_op ops[] = {bv_op::add,  bv_op::sub,  bv_op::mul,  bv_op::udiv, bv_op::sdiv,
                              bv_op::urem, bv_op::srem, bv_op::bvand, bv_op::bvor, bv_op::bvxor,
                              bv_op::shl,  bv_op::lshr, bv_op::ashr};
  bv_op op = ops[rng() % (sizeof(ops) / sizeof(ops[0]))];
  return mk_binary(op, random_dag(rng, vars, w, depth - 1), random_dag(rng, vars, w, depth - 1));
}

} // namespace

TEST_CASE("random constraint DAGs: satisfiable iff exhaustive evaluation says so") {
  std::mt19937 rng(20260810);
  for (int round = 0; round < 120; ++round) {
    unsigned w = 1 + rng() % 3;
    std::vector<bv_expr> vars = {mk_var("a", w), mk_var("b", w)};
    bv_expr lhs = random_dag(rng, vars, w, 3);
    bv_expr rhs = random_dag(rng, vars, w, 3);
    bv_op cmp = (rng() % 2) ? bv_op::ult : bv_op::eq;
    bv_expr e = mk_binary(cmp, lhs, rhs);

    bool exists = false;
    for (uint64_t a = 0; a <= word::mask(w) && !exists; ++a)
      for (uint64_t b = 0; b <= word::mask(w); ++b) {
        valuation v{{"a", word(w, a)}, {"b", word(w, b)}};
        if (eval(e, v).is_true()) {
          exists = true;
          break;
        }
      }

    valuation model;
    sat_result r = quick_solve(e, &model);
    REQUIRE(r == (exists ? sat_result::sat : sat_result::unsat));
    if (r == sat_result::sat) {
      // decoded model must satisfy the source expression
      valuation full = model;
      if (!full.count("a")) full.emplace("a", word(w, 0));
      if (!full.count("b")) full.emplace("b", word(w, 0));
      CHECK(eval(e, full).is_true());
    }
  }
}

TEST_CASE("solver is deterministic for a fixed seed") {
  bv_expr x = mk_var("x", 6), y = mk_var("y", 6);
  bv_expr e = mk_and(mk_binary(bv_op::ult, x, y),
                     mk_eq(mk_binary(bv_op::bvand, x, y), mk_const(6, 4)));
  valuation m1, m2;
  REQUIRE(quick_solve(e, &m1) == sat_result::sat);
  REQUIRE(quick_solve(e, &m2) == sat_result::sat);
  CHECK(m1.at("x") == m2.at("x"));
  CHECK(m1.at("y") == m2.at("y"));
}

TEST_CASE("dimacs round trip and output parsing") {
  cnf c;
  int a = c.new_var(), b = c.new_var();
  c.add({a, -b});
  c.add({b});
  std::string text = to_dimacs(c);
  CHECK(text.rfind("p cnf 2 2", 0) == 0);

  sat_model m;
  CHECK(parse_solver_output("s SATISFIABLE\nv 1 2 0\n", 2, m) == sat_result::sat);
  CHECK(m.value(1));
  CHECK(m.value(2));
  CHECK(parse_solver_output("s UNSATISFIABLE\n", 2, m) == sat_result::unsat);
  CHECK(parse_solver_output("SAT\n1 -2 0\n", 2, m) == sat_result::sat);
  CHECK(m.value(1));
  CHECK_FALSE(m.value(2));
  CHECK_THROWS_AS(parse_solver_output("hello\n", 2, m), std::runtime_error);
}

TEST_CASE("external solver escape hatch") {
  // a fake engine that reports a fixed model
  std::string script = "/tmp/bvt_fake_sat.sh";
  {
    FILE *f = fopen(script.c_str(), "w");
    REQUIRE(f);
    fputs("#!/bin/sh\necho 's SATISFIABLE'\necho 'v 1 -2 0'\n", f);
    fclose(f);
  }
  REQUIRE(system(("chmod +x " + script).c_str()) == 0);
  cnf c;
  int a = c.new_var(), b = c.new_var();
  c.add({a});
  c.add({a, -b});
  sat_model m;
  CHECK(run_external_sat("/bin/sh " + script, c, m) == sat_result::sat);
  CHECK(m.value(1));
  CHECK_FALSE(m.value(2));
}
