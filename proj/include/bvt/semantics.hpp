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

#ifndef BVT_SEMANTICS_HPP
#define BVT_SEMANTICS_HPP

#include "bvt/expr.hpp"

#include <optional>
#include <vector>

namespace bvt {

struct var_info {
  std::string name;
  unsigned width = 8;
  bool is_signed = false;

  bool operator==(const var_info &) const = default;
};

using var_list = std::vector<var_info>;

// Program state: one word per declared variable, in declaration order.
using state = std::vector<word>;

struct input_sym {
  std::string name;
  unsigned width = 8;

  bool operator==(const input_sym &) const = default;
};

// Transition relation in functional form: one update expression per program
// variable over the current-state variables and fresh nondeterministic input
// symbols. T(s, s') holds iff some input valuation maps s to s'.
struct transition {
  std::vector<bv_expr> updates;
  std::vector<input_sym> inputs;

  bool is_identity_shape() const { return inputs.empty(); }
};

transition identity_transition(const var_list &vars);

valuation state_to_valuation(const var_list &vars, const state &s);
state valuation_to_state(const var_list &vars, const valuation &v);

// Applies the update expressions under a concrete input assignment.
state apply_transition(const transition &t, const var_list &vars, const state &s,
                       const valuation &inputs);

// All successors of `s`, enumerating every nondet input valuation. Total
// input bits must stay small; intended for oracle widths.
std::vector<state> step(const transition &t, const var_list &vars, const state &s);

// True iff every input valuation yields the same successor from every state
// (decided by a validity check when nondet inputs are present).
bool is_deterministic(const transition &t, const var_list &vars);

uint64_t pack_state(const var_list &vars, const state &s);
state unpack_state(const var_list &vars, uint64_t bits);
unsigned total_state_bits(const var_list &vars);

} // namespace bvt

#endif
