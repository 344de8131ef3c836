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

#include <sstream>
#include <stdexcept>

namespace bvt {

const char *l_opcode_name(l_opcode op) {
  switch (op) {
  case l_opcode::add: return "add";
  case l_opcode::sub: return "sub";
  case l_opcode::mul: return "mul";
  case l_opcode::divs: return "div";
  case l_opcode::neg: return "neg";
  case l_opcode::mods: return "mod";
  case l_opcode::min: return "min";
  case l_opcode::max: return "max";
  case l_opcode::bvand: return "and";
  case l_opcode::bvor: return "or";
  case l_opcode::bvxor: return "xor";
  case l_opcode::lshr: return "lshr";
  case l_opcode::ashr: return "ashr";
  case l_opcode::shl: return "shl";
  case l_opcode::bvnot: return "not";
  case l_opcode::le: return "le";
  case l_opcode::lt: return "lt";
  case l_opcode::sle: return "sle";
  case l_opcode::slt: return "slt";
  case l_opcode::eq: return "eq";
  case l_opcode::neq: return "neq";
  case l_opcode::implies: return "implies";
  case l_opcode::ite: return "ite";
  }
  return "?";
}

unsigned l_opcode_arity(l_opcode op) {
  switch (op) {
  case l_opcode::neg:
  case l_opcode::bvnot: return 1;
  case l_opcode::ite: return 3;
  default: return 2;
  }
}

bool l_opcode_boolean(l_opcode op) {
  switch (op) {
  case l_opcode::le:
  case l_opcode::lt:
  case l_opcode::sle:
  case l_opcode::slt:
  case l_opcode::eq:
  case l_opcode::neq:
  case l_opcode::implies: return true;
  default: return false;
  }
}

bool l_opcode_commutative(l_opcode op) {
  switch (op) {
  case l_opcode::add:
  case l_opcode::mul:
  case l_opcode::min:
  case l_opcode::max:
  case l_opcode::bvand:
  case l_opcode::bvor:
  case l_opcode::bvxor:
  case l_opcode::eq:
  case l_opcode::neq: return true;
  default: return false;
  }
}

l_program l_program::input_of(unsigned width, unsigned arity, unsigned idx) {
  l_program p;
  p.width = width;
  p.arity = arity;
  p.outputs = {l_operand::input(idx)};
  return p;
}

l_program l_program::constant_of(unsigned width, unsigned arity, uint64_t value) {
  l_program p;
  p.width = width;
  p.arity = arity;
  p.outputs = {l_operand::constant(value & word::mask(width))};
  return p;
}

namespace {

// Width of the raw value an operand denotes: 1 for boolean-producing
// instructions, the program width otherwise.
unsigned operand_raw_width(const l_program &p, const l_operand &o) {
  if (o.k == l_operand::kind::reg && l_opcode_boolean(p.instrs[o.value].op)) return 1;
  return p.width;
}

word coerce_word(const word &raw, unsigned width) {
  return raw.width() == width ? raw : zext(raw, width);
}

bool coerce_bool(const word &raw) { return raw.is_true(); }

word l_apply(l_opcode op, unsigned width, const word &ra, const word &rb, const word &rc) {
  word a = coerce_word(ra, width);
  word b = coerce_word(rb, width);
  switch (op) {
  case l_opcode::add: return add(a, b);
  case l_opcode::sub: return sub(a, b);
  case l_opcode::mul: return mul(a, b);
  case l_opcode::divs: return sdiv(a, b);
  case l_opcode::neg: return neg(a);
  case l_opcode::mods: return srem(a, b);
  case l_opcode::min: return smin(a, b);
  case l_opcode::max: return smax(a, b);
  case l_opcode::bvand: return bv_and(a, b);
  case l_opcode::bvor: return bv_or(a, b);
  case l_opcode::bvxor: return bv_xor(a, b);
  case l_opcode::lshr: return lshr(a, b);
  case l_opcode::ashr: return ashr(a, b);
  case l_opcode::shl: return shl(a, b);
  case l_opcode::bvnot: return bv_not(a);
  case l_opcode::le: return ule(a, b);
  case l_opcode::lt: return ult(a, b);
  case l_opcode::sle: return sle(a, b);
  case l_opcode::slt: return slt(a, b);
  case l_opcode::eq: return eq(a, b);
  case l_opcode::neq: return ne(a, b);
  case l_opcode::implies: return word::from_bool(!coerce_bool(ra) || coerce_bool(rb));
  case l_opcode::ite: return coerce_bool(ra) ? coerce_word(rb, width) : coerce_word(rc, width);
  }
  throw std::logic_error("l_apply: bad opcode");
}

} // namespace

std::vector<word> interpret(const l_program &p, const std::vector<word> &args) {
  if (args.size() != p.arity) throw std::logic_error("interpret: arity mismatch");
  std::vector<word> regs(p.instrs.size(), word(1, 0));

  auto read = [&](const l_operand &o) -> word {
    switch (o.k) {
    case l_operand::kind::constant: return word(p.width, o.value);
    case l_operand::kind::input: return args[o.value];
    case l_operand::kind::reg: return regs[o.value];
    }
    throw std::logic_error("interpret: bad operand");
  };

  for (size_t i = 0; i < p.instrs.size(); ++i) {
    const l_instr &ins = p.instrs[i];
    unsigned n = l_opcode_arity(ins.op);
    word a = read(ins.a);
    word b = n >= 2 ? read(ins.b) : word(1, 0);
    word c = n >= 3 ? read(ins.c) : word(1, 0);
    regs[i] = l_apply(ins.op, p.width, a, b, c);
  }

  std::vector<word> out;
  out.reserve(p.outputs.size());
  for (const auto &o : p.outputs) out.push_back(coerce_word(read(o), p.width));
  return out;
}

std::optional<std::string> validate(const l_program &p) {
  if (p.width < 1 || p.width > 64) return "word width out of range";
  if (p.outputs.empty()) return "no outputs";
  auto check_operand = [&](const l_operand &o, size_t pos) -> std::optional<std::string> {
    switch (o.k) {
    case l_operand::kind::constant:
      if (o.value > word::mask(p.width)) return "constant does not fit the word width";
      return std::nullopt;
    case l_operand::kind::input:
      if (o.value >= p.arity) return "input index out of range";
      return std::nullopt;
    case l_operand::kind::reg:
      if (o.value >= pos) return "forward reference";
      return std::nullopt;
    }
    return "bad operand kind";
  };
  for (size_t i = 0; i < p.instrs.size(); ++i) {
    const l_instr &ins = p.instrs[i];
    unsigned n = l_opcode_arity(ins.op);
    if (auto e = check_operand(ins.a, i)) return e;
    if (n >= 2)
      if (auto e = check_operand(ins.b, i)) return e;
    if (n >= 3)
      if (auto e = check_operand(ins.c, i)) return e;
  }
  for (const auto &o : p.outputs)
    if (auto e = check_operand(o, p.instrs.size())) return e;
  return std::nullopt;
}

std::vector<bv_expr> symbolize(const l_program &p, const std::vector<bv_expr> &args) {
  if (args.size() != p.arity) throw std::logic_error("symbolize: arity mismatch");
  for (const auto &a : args)
    if (a->width != p.width) throw std::logic_error("symbolize: argument width mismatch");

  std::vector<bv_expr> regs(p.instrs.size());

  auto read = [&](const l_operand &o) -> bv_expr {
    switch (o.k) {
    case l_operand::kind::constant: return mk_const(p.width, o.value);
    case l_operand::kind::input: return args[o.value];
    case l_operand::kind::reg: return regs[o.value];
    }
    throw std::logic_error("symbolize: bad operand");
  };
  auto as_word = [&](const bv_expr &e) { return mk_zext(e, p.width); };
  auto as_bool = [&](const bv_expr &e) {
    return e->width == 1 ? e : mk_binary(bv_op::ne, e, mk_const(e->width, 0));
  };

  for (size_t i = 0; i < p.instrs.size(); ++i) {
    const l_instr &ins = p.instrs[i];
    bv_expr a = read(ins.a);
    bv_expr b = l_opcode_arity(ins.op) >= 2 ? read(ins.b) : nullptr;
    switch (ins.op) {
    case l_opcode::add: regs[i] = mk_binary(bv_op::add, as_word(a), as_word(b)); break;
    case l_opcode::sub: regs[i] = mk_binary(bv_op::sub, as_word(a), as_word(b)); break;
    case l_opcode::mul: regs[i] = mk_binary(bv_op::mul, as_word(a), as_word(b)); break;
    case l_opcode::divs: regs[i] = mk_binary(bv_op::sdiv, as_word(a), as_word(b)); break;
    case l_opcode::neg: regs[i] = mk_unary(bv_op::neg, as_word(a)); break;
    case l_opcode::mods: regs[i] = mk_binary(bv_op::srem, as_word(a), as_word(b)); break;
    case l_opcode::min:
    case l_opcode::max: {
      bv_expr wa = as_word(a), wb = as_word(b);
      bv_expr c = mk_binary(bv_op::slt, wa, wb);
      regs[i] = ins.op == l_opcode::min ? mk_ite(c, wa, wb) : mk_ite(c, wb, wa);
      break;
    }
    case l_opcode::bvand: regs[i] = mk_binary(bv_op::bvand, as_word(a), as_word(b)); break;
    case l_opcode::bvor: regs[i] = mk_binary(bv_op::bvor, as_word(a), as_word(b)); break;
    case l_opcode::bvxor: regs[i] = mk_binary(bv_op::bvxor, as_word(a), as_word(b)); break;
    case l_opcode::lshr: regs[i] = mk_binary(bv_op::lshr, as_word(a), as_word(b)); break;
    case l_opcode::ashr: regs[i] = mk_binary(bv_op::ashr, as_word(a), as_word(b)); break;
    case l_opcode::shl: regs[i] = mk_binary(bv_op::shl, as_word(a), as_word(b)); break;
    case l_opcode::bvnot: regs[i] = mk_unary(bv_op::bvnot, as_word(a)); break;
    case l_opcode::le: regs[i] = mk_binary(bv_op::ule, as_word(a), as_word(b)); break;
    case l_opcode::lt: regs[i] = mk_binary(bv_op::ult, as_word(a), as_word(b)); break;
    case l_opcode::sle: regs[i] = mk_binary(bv_op::sle, as_word(a), as_word(b)); break;
    case l_opcode::slt: regs[i] = mk_binary(bv_op::slt, as_word(a), as_word(b)); break;
    case l_opcode::eq: regs[i] = mk_binary(bv_op::eq, as_word(a), as_word(b)); break;
    case l_opcode::neq: regs[i] = mk_binary(bv_op::ne, as_word(a), as_word(b)); break;
    case l_opcode::implies: regs[i] = mk_implies(as_bool(a), as_bool(b)); break;
    case l_opcode::ite: {
      bv_expr c = read(ins.c);
      regs[i] = mk_ite(as_bool(a), as_word(b), as_word(c));
      break;
    }
    }
  }

  std::vector<bv_expr> out;
  out.reserve(p.outputs.size());
  for (const auto &o : p.outputs) out.push_back(as_word(read(o)));
  return out;
}

namespace {

std::string operand_text(const l_operand &o) {
  switch (o.k) {
  case l_operand::kind::constant: return std::to_string(o.value);
  case l_operand::kind::input: return "in" + std::to_string(o.value);
  case l_operand::kind::reg: return "r" + std::to_string(o.value);
  }
  return "?";
}

l_operand parse_operand(const std::string &tok) {
  if (tok.rfind("in", 0) == 0) return l_operand::input(std::stoull(tok.substr(2)));
  if (tok[0] == 'r') return l_operand::reg(std::stoull(tok.substr(1)));
  return l_operand::constant(std::stoull(tok, nullptr, 0));
}

} // namespace

std::string to_text(const l_program &p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.instrs.size(); ++i) {
    const l_instr &ins = p.instrs[i];
    os << "r" << i << " = " << l_opcode_name(ins.op) << " " << operand_text(ins.a);
    if (l_opcode_arity(ins.op) >= 2) os << ", " << operand_text(ins.b);
    if (l_opcode_arity(ins.op) >= 3) os << ", " << operand_text(ins.c);
    os << "\n";
  }
  os << "out";
  for (size_t i = 0; i < p.outputs.size(); ++i)
    os << (i ? ", " : " ") << operand_text(p.outputs[i]);
  os << "\n";
  return os.str();
}

l_program parse_l_program(const std::string &text, unsigned width, unsigned arity) {
  l_program p;
  p.width = width;
  p.arity = arity;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    // normalize separators
    for (auto &ch : line)
      if (ch == ',' || ch == '=') ch = ' ';
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "out") {
      while (ls >> tok) p.outputs.push_back(parse_operand(tok));
      continue;
    }
    if (tok[0] != 'r') throw std::runtime_error("bad instruction line: " + line);
    std::string opname;
    if (!(ls >> opname)) throw std::runtime_error("missing opcode: " + line);
    std::optional<l_opcode> op;
    for (unsigned k = 0; k < l_num_opcodes; ++k)
      if (opname == l_opcode_name(l_opcode(k))) op = l_opcode(k);
    if (!op) throw std::runtime_error("unknown opcode: " + opname);
    l_instr ins{*op, {}, {}, {}};
    std::vector<l_operand> ops;
    while (ls >> tok) ops.push_back(parse_operand(tok));
    if (ops.size() != l_opcode_arity(*op))
      throw std::runtime_error("operand count mismatch: " + line);
    ins.a = ops[0];
    if (ops.size() >= 2) ins.b = ops[1];
    if (ops.size() >= 3) ins.c = ops[2];
    p.instrs.push_back(ins);
  }
  if (auto err = validate(p)) throw std::runtime_error("invalid program: " + *err);
  return p;
}

} // namespace bvt
