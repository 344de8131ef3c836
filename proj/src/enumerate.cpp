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

#include "bvt/llang.hpp"

#include <random>
#include <unordered_map>

namespace bvt {

namespace {

// Mirror of interpret's per-instruction semantics.
word eval_l_op(l_opcode op, unsigned width, const word &a, const word &b, const word &c) {
  auto wa = a.width() == width ? a : zext(a, width);
  auto wb = b.width() == width ? b : zext(b, width);
  switch (op) {
  case l_opcode::add: return add(wa, wb);
  case l_opcode::sub: return sub(wa, wb);
  case l_opcode::mul: return mul(wa, wb);
  case l_opcode::divs: return sdiv(wa, wb);
  case l_opcode::neg: return neg(wa);
  case l_opcode::mods: return srem(wa, wb);
  case l_opcode::min: return smin(wa, wb);
  case l_opcode::max: return smax(wa, wb);
  case l_opcode::bvand: return bv_and(wa, wb);
  case l_opcode::bvor: return bv_or(wa, wb);
  case l_opcode::bvxor: return bv_xor(wa, wb);
  case l_opcode::lshr: return lshr(wa, wb);
  case l_opcode::ashr: return ashr(wa, wb);
  case l_opcode::shl: return shl(wa, wb);
  case l_opcode::bvnot: return bv_not(wa);
  case l_opcode::le: return ule(wa, wb);
  case l_opcode::lt: return ult(wa, wb);
  case l_opcode::sle: return sle(wa, wb);
  case l_opcode::slt: return slt(wa, wb);
  case l_opcode::eq: return eq(wa, wb);
  case l_opcode::neq: return ne(wa, wb);
  case l_opcode::implies: return word::from_bool(!a.is_true() || b.is_true());
  case l_opcode::ite: {
    auto wc = c.width() == width ? c : zext(c, width);
    return a.is_true() ? wb : wc;
  }
  }
  return word(width, 0);
}

struct term {
  bool leaf = true;
  l_operand op_leaf;     // when leaf
  l_opcode op{};         // when internal
  int32_t a = -1, b = -1, c = -1;
  uint32_t size = 0;     // tree size = instruction count when emitted
  bool boolish = false;  // every probe value is 0 or 1
};

uint64_t sig_hash(const std::vector<word> &sig) {
  uint64_t h = 1469598103934665603ull;
  for (const auto &w : sig) {
    h ^= w.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

struct l_enumerator::impl {
  enum_options opts;
  std::vector<std::vector<word>> probes; // each of size arity
  std::vector<term> terms;
  std::vector<std::vector<word>> sigs;   // zext-normalized value per probe
  std::unordered_map<uint64_t, std::vector<int32_t>> seen;
  std::vector<std::vector<int32_t>> levels; // term ids per size
  uint32_t cur_level = 0;
  size_t cur_index = 0;
  bool exhausted_all = false;

  explicit impl(enum_options o) : opts(std::move(o)) {
    build_probes();
    levels.resize(opts.max_size + 1);
    build_level0();
  }

  void build_probes() {
    if (!opts.probes.empty()) {
      probes = opts.probes;
      return;
    }
    unsigned w = opts.width, n = opts.arity;
    uint64_t space_bits = uint64_t(w) * n;
    if (space_bits <= 10) {
      uint64_t count = uint64_t(1) << space_bits;
      for (uint64_t pat = 0; pat < count; ++pat) {
        std::vector<word> tuple;
        uint64_t rest = pat;
        for (unsigned i = 0; i < n; ++i) {
          tuple.push_back(word(w, rest & word::mask(w)));
          rest >>= w;
        }
        probes.push_back(std::move(tuple));
      }
      return;
    }
    std::mt19937_64 rng(opts.seed * 0x9e3779b9ull + 17);
    auto corner = [&](uint64_t v) {
      std::vector<word> t(n, word(w, v));
      probes.push_back(t);
    };
    corner(0);
    corner(1);
    corner(word::mask(w));
    corner(uint64_t(1) << (w - 1));
    for (unsigned k = 0; k < 92; ++k) {
      std::vector<word> t;
      for (unsigned i = 0; i < n; ++i) t.push_back(word(w, rng()));
      probes.push_back(std::move(t));
    }
  }

  std::vector<word> leaf_sig(const l_operand &o) {
    std::vector<word> sig;
    sig.reserve(probes.size());
    for (const auto &tuple : probes) {
      word v = o.k == l_operand::kind::input ? tuple[o.value] : word(opts.width, o.value);
      sig.push_back(v.width() == opts.width ? v : zext(v, opts.width));
    }
    return sig;
  }

  bool all_binary(const std::vector<word> &sig) {
    for (const auto &w : sig)
      if (w.bits() > 1) return false;
    return true;
  }

  // Returns the id if the behavior is new, -1 otherwise.
  int32_t intern(term t, std::vector<word> sig) {
    uint64_t h = sig_hash(sig);
    auto &bucket = seen[h];
    for (int32_t id : bucket)
      if (sigs[id] == sig) return -1;
    t.boolish = all_binary(sig);
    int32_t id = int32_t(terms.size());
    terms.push_back(t);
    sigs.push_back(std::move(sig));
    bucket.push_back(id);
    levels[t.size].push_back(id);
    return id;
  }

  void build_level0() {
    for (unsigned i = 0; i < opts.arity; ++i) {
      term t;
      t.leaf = true;
      t.op_leaf = l_operand::input(i);
      t.size = 0;
      intern(t, leaf_sig(t.op_leaf));
    }
    std::vector<uint64_t> consts;
    unsigned w = opts.width;
    if (w <= 4) {
      for (uint64_t v = 0; v <= word::mask(w); ++v) consts.push_back(v);
    } else {
      consts = {0, 1, 2, w - 1, (uint64_t(1) << (w - 1)) - 1, uint64_t(1) << (w - 1),
                word::mask(w)};
    }
    for (const auto &e : opts.extra_constants) consts.push_back(e.bits() & word::mask(w));
    for (uint64_t v : consts) {
      term t;
      t.leaf = true;
      t.op_leaf = l_operand::constant(v);
      t.size = 0;
      intern(t, leaf_sig(t.op_leaf));
    }
  }

  void build_level(uint32_t n) {
    size_t budget = opts.level_cap;
    if (!probes.empty()) budget = std::min(budget, size_t(6'000'000) / probes.size() + 16);
    auto emit = [&](l_opcode op, int32_t a, int32_t b, int32_t c) {
      if (levels[n].size() >= budget) return;
      term t;
      t.leaf = false;
      t.op = op;
      t.a = a;
      t.b = b;
      t.c = c;
      t.size = n;
      std::vector<word> sig;
      sig.reserve(probes.size());
      unsigned w = opts.width;
      for (size_t pi = 0; pi < probes.size(); ++pi) {
        word va = sigs[a][pi];
        word vb = b >= 0 ? sigs[b][pi] : word(1, 0);
        word vc = c >= 0 ? sigs[c][pi] : word(1, 0);
        // boolean positions see the raw truth value; zext preserved it
        word r = eval_l_op(op, w, va, vb, vc);
        sig.push_back(r.width() == w ? r : zext(r, w));
      }
      intern(t, std::move(sig));
    };

    for (unsigned k = 0; k < l_num_opcodes; ++k) {
      l_opcode op = l_opcode(k);
      unsigned ar = l_opcode_arity(op);
      if (ar == 1) {
        for (int32_t a : levels[n - 1]) emit(op, a, -1, -1);
      } else if (ar == 2) {
        for (uint32_t sa = 0; sa + 1 <= n - 1; ++sa) {
          uint32_t sb = n - 1 - sa;
          if (sb > opts.max_size) continue;
          for (int32_t a : levels[sa])
            for (int32_t b : levels[sb]) {
              if (l_opcode_commutative(op) && a > b) continue;
              emit(op, a, b, -1);
            }
        }
      } else {
        for (uint32_t sa = 0; sa <= n - 1; ++sa)
          for (uint32_t sb = 0; sa + sb <= n - 1; ++sb) {
            uint32_t sc = n - 1 - sa - sb;
            for (int32_t a : levels[sa]) {
              // conditions are boolean-tested anyway; restrict to boolish
              // ones when the level is large to contain blowup
              if (!terms[a].boolish && levels[sa].size() > 64) continue;
              for (int32_t b : levels[sb])
                for (int32_t c : levels[sc]) {
                  if (b == c) continue; // ite with equal arms folds
                  emit(op, a, b, c);
                }
            }
          }
      }
    }
  }

  void emit_tree(int32_t id, l_program &p, l_operand &where) {
    const term &t = terms[id];
    if (t.leaf) {
      where = t.op_leaf;
      return;
    }
    l_instr ins{t.op, {}, {}, {}};
    emit_tree(t.a, p, ins.a);
    if (t.b >= 0) emit_tree(t.b, p, ins.b);
    if (t.c >= 0) emit_tree(t.c, p, ins.c);
    p.instrs.push_back(ins);
    where = l_operand::reg(p.instrs.size() - 1);
  }

  l_program to_program(int32_t id) {
    l_program p;
    p.width = opts.width;
    p.arity = opts.arity;
    l_operand out;
    emit_tree(id, p, out);
    p.outputs = {out};
    return p;
  }

  std::optional<l_program> next() {
    for (;;) {
      if (cur_level > opts.max_size) return std::nullopt;
      const auto &lvl = levels[cur_level];
      while (cur_index < lvl.size()) {
        int32_t id = lvl[cur_index++];
        if (opts.shape == l_shape::predicate && !terms[id].boolish) continue;
        return to_program(id);
      }
      ++cur_level;
      cur_index = 0;
      if (cur_level <= opts.max_size) build_level(cur_level);
    }
  }
};

l_enumerator::l_enumerator(enum_options opts) : impl_(new impl(std::move(opts))) {}
l_enumerator::~l_enumerator() = default;
l_enumerator::l_enumerator(l_enumerator &&) noexcept = default;
l_enumerator &l_enumerator::operator=(l_enumerator &&) noexcept = default;

std::optional<l_program> l_enumerator::next() { return impl_->next(); }

} // namespace bvt
