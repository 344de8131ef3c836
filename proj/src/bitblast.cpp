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

#include "bvt/bitblast.hpp"

#include <stdexcept>
#include <unordered_map>

namespace bvt {

namespace {

// Literals during blasting: 0 is unused; the sentinels below denote folded
// constants so gates can simplify before any clause is emitted.
constexpr int LIT_TRUE = INT32_MAX;
constexpr int LIT_FALSE = -INT32_MAX;

inline bool is_const(int l) { return l == LIT_TRUE || l == LIT_FALSE; }

struct blaster {
  cnf out;
  varmap vm;
  std::unordered_map<const bv_node *, std::vector<int>> cache;

  int fresh() { return out.new_var(); }

  int mk_not(int a) {
    if (a == LIT_TRUE) return LIT_FALSE;
    if (a == LIT_FALSE) return LIT_TRUE;
    return -a;
  }

  int mk_and(int a, int b) {
    if (a == LIT_FALSE || b == LIT_FALSE) return LIT_FALSE;
    if (a == LIT_TRUE) return b;
    if (b == LIT_TRUE) return a;
    if (a == b) return a;
    if (a == -b) return LIT_FALSE;
    int g = fresh();
    out.add({-g, a});
    out.add({-g, b});
    out.add({g, -a, -b});
    return g;
  }

  int mk_or(int a, int b) { return mk_not(mk_and(mk_not(a), mk_not(b))); }

  int mk_xor(int a, int b) {
    if (a == LIT_FALSE) return b;
    if (b == LIT_FALSE) return a;
    if (a == LIT_TRUE) return mk_not(b);
    if (b == LIT_TRUE) return mk_not(a);
    if (a == b) return LIT_FALSE;
    if (a == -b) return LIT_TRUE;
    int g = fresh();
    out.add({-g, a, b});
    out.add({-g, -a, -b});
    out.add({g, -a, b});
    out.add({g, a, -b});
    return g;
  }

  int mk_ite(int c, int t, int f) {
    if (c == LIT_TRUE) return t;
    if (c == LIT_FALSE) return f;
    if (t == f) return t;
    if (t == LIT_TRUE) return mk_or(c, f);
    if (t == LIT_FALSE) return mk_and(mk_not(c), f);
    if (f == LIT_TRUE) return mk_or(mk_not(c), t);
    if (f == LIT_FALSE) return mk_and(c, t);
    int g = fresh();
    out.add({-g, -c, t});
    out.add({g, -c, -t});
    out.add({-g, c, f});
    out.add({g, c, -f});
    return g;
  }

  void assert_lit(int a) {
    if (a == LIT_TRUE) return;
    if (a == LIT_FALSE) {
      out.add({}); // trivially unsatisfiable
      return;
    }
    out.add_unit(a);
  }

  std::vector<int> const_bits(unsigned w, uint64_t v) {
    std::vector<int> bits(w);
    for (unsigned i = 0; i < w; ++i) bits[i] = ((v >> i) & 1) ? LIT_TRUE : LIT_FALSE;
    return bits;
  }

  // --- word-level circuits -------------------------------------------------

  std::vector<int> add_bits(const std::vector<int> &a, const std::vector<int> &b, int cin) {
    std::vector<int> s(a.size());
    int c = cin;
    for (size_t i = 0; i < a.size(); ++i) {
      int axb = mk_xor(a[i], b[i]);
      s[i] = mk_xor(axb, c);
      c = mk_or(mk_and(a[i], b[i]), mk_and(axb, c));
    }
    return s;
  }

  std::vector<int> not_bits(const std::vector<int> &a) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mk_not(a[i]);
    return r;
  }

  std::vector<int> neg_bits(const std::vector<int> &a) {
    return add_bits(not_bits(a), const_bits(unsigned(a.size()), 0), LIT_TRUE);
  }

  std::vector<int> sub_bits(const std::vector<int> &a, const std::vector<int> &b) {
    return add_bits(a, not_bits(b), LIT_TRUE);
  }

  std::vector<int> mul_bits(const std::vector<int> &a, const std::vector<int> &b) {
    size_t w = a.size();
    std::vector<int> acc = const_bits(unsigned(w), 0);
    for (size_t i = 0; i < w; ++i) {
      std::vector<int> row(w, LIT_FALSE);
      for (size_t j = 0; i + j < w; ++j) row[i + j] = mk_and(b[j], a[i]);
      acc = add_bits(acc, row, LIT_FALSE);
    }
    return acc;
  }

  int ult_bit(const std::vector<int> &a, const std::vector<int> &b) {
    int lt = LIT_FALSE;
    for (size_t i = 0; i < a.size(); ++i) {
      int eq_i = mk_not(mk_xor(a[i], b[i]));
      lt = mk_or(mk_and(mk_not(a[i]), b[i]), mk_and(eq_i, lt));
    }
    return lt;
  }

  int ule_bit(const std::vector<int> &a, const std::vector<int> &b) {
    return mk_not(ult_bit(b, a));
  }

  int eq_bit(const std::vector<int> &a, const std::vector<int> &b) {
    int r = LIT_TRUE;
    for (size_t i = 0; i < a.size(); ++i) r = mk_and(r, mk_not(mk_xor(a[i], b[i])));
    return r;
  }

  std::vector<int> flip_sign(const std::vector<int> &a) {
    std::vector<int> r = a;
    r.back() = mk_not(r.back());
    return r;
  }

  std::vector<int> mux(int c, const std::vector<int> &t, const std::vector<int> &f) {
    std::vector<int> r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = mk_ite(c, t[i], f[i]);
    return r;
  }

  // Restoring division; returns {quotient, remainder}. Division by zero is
  // handled by the caller.
  std::pair<std::vector<int>, std::vector<int>> udivrem_bits(const std::vector<int> &a,
                                                             const std::vector<int> &b) {
    unsigned w = unsigned(a.size());
    std::vector<int> r = const_bits(w + 1, 0);
    std::vector<int> d(b);
    d.push_back(LIT_FALSE); // zext divisor to w+1 bits
    std::vector<int> q(w, LIT_FALSE);
    for (int i = int(w) - 1; i >= 0; --i) {
      // r = (r << 1) | a_i
      for (int j = int(w); j > 0; --j) r[j] = r[j - 1];
      r[0] = a[i];
      int ge = ule_bit(d, r);
      std::vector<int> rsub = sub_bits(r, d);
      r = mux(ge, rsub, r);
      q[i] = ge;
    }
    r.pop_back();
    return {q, r};
  }

  std::vector<int> shift_bits(const std::vector<int> &a, const std::vector<int> &amt, bv_op op) {
    unsigned w = unsigned(a.size());
    int fill_bit = (op == bv_op::ashr) ? a.back() : LIT_FALSE;
    std::vector<int> cur = a;
    for (unsigned stage = 0; (1u << stage) < w; ++stage) {
      unsigned k = 1u << stage;
      std::vector<int> shifted(w);
      for (unsigned i = 0; i < w; ++i) {
        if (op == bv_op::shl)
          shifted[i] = i >= k ? cur[i - k] : LIT_FALSE;
        else
          shifted[i] = i + k < w ? cur[i + k] : fill_bit;
      }
      cur = mux(amt[stage], shifted, cur);
    }
    // amounts >= width give 0 (shl/lshr) or the sign fill (ashr)
    int over = mk_not(ult_bit(amt, const_bits(w, w)));
    std::vector<int> fill(w, fill_bit);
    return mux(over, fill, cur);
  }

  // --- DAG traversal -------------------------------------------------------

  std::vector<int> blast(const bv_expr &e) {
    auto it = cache.find(e.get());
    if (it != cache.end()) return it->second;
    std::vector<int> r = compute(e);
    if (r.size() != e->width) throw std::logic_error("bitblast: width bug");
    cache.emplace(e.get(), r);
    return r;
  }

  std::vector<int> compute(const bv_expr &e) {
    const bv_node &n = *e;
    switch (n.op) {
    case bv_op::var: {
      auto f = vm.bits.find(n.name);
      if (f != vm.bits.end()) {
        if (f->second.size() != n.width) throw std::logic_error("bitblast: inconsistent width of " + n.name);
        return f->second;
      }
      std::vector<int> bits(n.width);
      for (auto &b : bits) b = fresh();
      vm.bits.emplace(n.name, bits);
      return bits;
    }
    case bv_op::constant: return const_bits(n.width, n.cval);
    case bv_op::hole: throw std::logic_error("bitblast: hole " + n.name + " not substituted");
    default: break;
    }

    std::vector<std::vector<int>> a;
    a.reserve(n.args.size());
    for (const auto &arg : n.args) a.push_back(blast(arg));

    switch (n.op) {
    case bv_op::add: return add_bits(a[0], a[1], LIT_FALSE);
    case bv_op::sub: return sub_bits(a[0], a[1]);
    case bv_op::neg: return neg_bits(a[0]);
    case bv_op::mul: return mul_bits(a[0], a[1]);
    case bv_op::bvand: {
      std::vector<int> r(n.width);
      for (unsigned i = 0; i < n.width; ++i) r[i] = mk_and(a[0][i], a[1][i]);
      return r;
    }
    case bv_op::bvor: {
      std::vector<int> r(n.width);
      for (unsigned i = 0; i < n.width; ++i) r[i] = mk_or(a[0][i], a[1][i]);
      return r;
    }
    case bv_op::bvxor: {
      std::vector<int> r(n.width);
      for (unsigned i = 0; i < n.width; ++i) r[i] = mk_xor(a[0][i], a[1][i]);
      return r;
    }
    case bv_op::bvnot: return not_bits(a[0]);
    case bv_op::shl:
    case bv_op::lshr:
    case bv_op::ashr: return shift_bits(a[0], a[1], n.op);
    case bv_op::udiv:
    case bv_op::urem: {
      auto [q, r] = udivrem_bits(a[0], a[1]);
      int dz = eq_bit(a[1], const_bits(n.width, 0));
      if (n.op == bv_op::udiv) return mux(dz, const_bits(n.width, word::mask(n.width)), q);
      return mux(dz, a[0], r);
    }
    case bv_op::sdiv:
    case bv_op::srem: {
      int sa = a[0].back(), sb = a[1].back();
      std::vector<int> ma = mux(sa, neg_bits(a[0]), a[0]);
      std::vector<int> mb = mux(sb, neg_bits(a[1]), a[1]);
      auto [q, r] = udivrem_bits(ma, mb);
      std::vector<int> sq = mux(mk_xor(sa, sb), neg_bits(q), q);
      std::vector<int> sr = mux(sa, neg_bits(r), r);
      int dz = eq_bit(a[1], const_bits(n.width, 0));
      if (n.op == bv_op::sdiv) return mux(dz, const_bits(n.width, word::mask(n.width)), sq);
      return mux(dz, a[0], sr);
    }
    case bv_op::ult: return {ult_bit(a[0], a[1])};
    case bv_op::ule: return {ule_bit(a[0], a[1])};
    case bv_op::slt: return {ult_bit(flip_sign(a[0]), flip_sign(a[1]))};
    case bv_op::sle: return {ule_bit(flip_sign(a[0]), flip_sign(a[1]))};
    case bv_op::eq: return {eq_bit(a[0], a[1])};
    case bv_op::ne: return {mk_not(eq_bit(a[0], a[1]))};
    case bv_op::land: return {mk_and(a[0][0], a[1][0])};
    case bv_op::lor: return {mk_or(a[0][0], a[1][0])};
    case bv_op::lnot: return {mk_not(a[0][0])};
    case bv_op::implies: return {mk_or(mk_not(a[0][0]), a[1][0])};
    case bv_op::ite: {
      std::vector<int> r(n.width);
      for (unsigned i = 0; i < n.width; ++i) r[i] = mk_ite(a[0][0], a[1][i], a[2][i]);
      return r;
    }
    case bv_op::zext: {
      std::vector<int> r = a[0];
      r.resize(n.width, LIT_FALSE);
      return r;
    }
    case bv_op::sext: {
      std::vector<int> r = a[0];
      r.resize(n.width, a[0].back());
      return r;
    }
    case bv_op::trunc: {
      std::vector<int> r = a[0];
      r.resize(n.width);
      return r;
    }
    default: throw std::logic_error("bitblast: unexpected op");
    }
  }
};

} // namespace

word varmap::decode(const std::string &name, const sat_model &m) const {
  auto it = bits.find(name);
  if (it == bits.end()) throw std::logic_error("varmap: unknown variable " + name);
  uint64_t v = 0;
  for (size_t i = 0; i < it->second.size(); ++i)
    if (m.value(it->second[i])) v |= uint64_t(1) << i;
  return word(unsigned(it->second.size()), v);
}

valuation varmap::decode_all(const sat_model &m) const {
  valuation v;
  for (const auto &[name, lits] : bits) v.emplace(name, decode(name, m));
  return v;
}

std::pair<cnf, varmap> bitblast(const bv_expr &e) {
  if (e->width != 1) throw std::logic_error("bitblast: constraint must be 1-bit");
  blaster b;
  std::vector<int> root = b.blast(e);
  b.assert_lit(root[0]);
  return {std::move(b.out), std::move(b.vm)};
}

} // namespace bvt
