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

#ifndef BVT_LLANG_HPP
#define BVT_LLANG_HPP

#include "bvt/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvt {

// Straight-line proof language: every synthesized predicate, ranking
// function, recurrence set and Skolem choice is one of these programs.
enum class l_opcode : uint8_t {
  add, sub, mul, divs, neg, mods, min, max,
  bvand, bvor, bvxor, lshr, ashr, shl, bvnot,
  le, lt, sle, slt, eq, neq,
  implies, ite,
};

constexpr unsigned l_num_opcodes = 23;

const char *l_opcode_name(l_opcode op);
unsigned l_opcode_arity(l_opcode op);
bool l_opcode_boolean(l_opcode op);     // produces a 1-bit value
bool l_opcode_commutative(l_opcode op);

struct l_operand {
  enum class kind : uint8_t { constant, input, reg };
  kind k = kind::constant;
  uint64_t value = 0; // constant bits, input index, or instruction index

  static l_operand constant(uint64_t v) { return {kind::constant, v}; }
  static l_operand input(uint64_t i) { return {kind::input, i}; }
  static l_operand reg(uint64_t i) { return {kind::reg, i}; }
  bool operator==(const l_operand &) const = default;
};

struct l_instr {
  l_opcode op;
  l_operand a, b, c;

  bool operator==(const l_instr &) const = default;
};

struct l_program {
  unsigned width = 8;
  unsigned arity = 0;
  std::vector<l_instr> instrs;
  std::vector<l_operand> outputs;

  bool operator==(const l_program &) const = default;
  size_t size() const { return instrs.size(); }

  // Convenience constructors for common witnesses.
  static l_program input_of(unsigned width, unsigned arity, unsigned idx);
  static l_program constant_of(unsigned width, unsigned arity, uint64_t value);
};

// Sequential evaluation; 1-bit comparison results are zero-extended when
// consumed as words, and words are tested against zero in boolean positions.
std::vector<word> interpret(const l_program &p, const std::vector<word> &args);

// First structural violation, or nullopt if well formed.
std::optional<std::string> validate(const l_program &p);

// Embeds the program over symbolic arguments; coherent with interpret.
std::vector<bv_expr> symbolize(const l_program &p, const std::vector<bv_expr> &args);

// One instruction per line (`r3 = add r1, in0`), then `out r3, in0`.
std::string to_text(const l_program &p);
l_program parse_l_program(const std::string &text, unsigned width, unsigned arity);

// --- size-bounded enumeration ----------------------------------------------

enum class l_shape { function, predicate };

struct enum_options {
  unsigned width = 8;
  unsigned arity = 1;
  unsigned max_size = 3;
  l_shape shape = l_shape::function;
  std::vector<word> extra_constants;
  unsigned seed = 1;
  // cap on distinct behaviors kept per size level (memory guard)
  size_t level_cap = 60000;
  // explicit behavior probe tuples; when empty, probes default to the whole
  // input space (small widths) or a fixed pseudorandom sample
  std::vector<std::vector<word>> probes;
};

// Streams well-formed canonical-form programs of at most max_size
// instructions, in nondecreasing size order, one representative per distinct
// behavior. Behaviors are distinguished exactly when the input space is
// small, otherwise on a fixed pseudorandom sample.
class l_enumerator {
public:
  explicit l_enumerator(enum_options opts);
  ~l_enumerator();
  l_enumerator(l_enumerator &&) noexcept;
  l_enumerator &operator=(l_enumerator &&) noexcept;

  std::optional<l_program> next();

  struct impl;

private:
  std::unique_ptr<impl> impl_;
};

} // namespace bvt

#endif
