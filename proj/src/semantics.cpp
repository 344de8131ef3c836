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

#include "bvt/semantics.hpp"
#include "bvt/bitblast.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvt {

transition identity_transition(const var_list &vars) {
  transition t;
  for (const auto &v : vars) t.updates.push_back(mk_var(v.name, v.width));
  return t;
}

valuation state_to_valuation(const var_list &vars, const state &s) {
  valuation v;
  for (size_t i = 0; i < vars.size(); ++i) v.emplace(vars[i].name, s[i]);
  return v;
}

state valuation_to_state(const var_list &vars, const valuation &v) {
  state s;
  s.reserve(vars.size());
  for (const auto &var : vars) {
    auto it = v.find(var.name);
    s.push_back(it == v.end() ? word(var.width, 0) : it->second);
  }
  return s;
}

state apply_transition(const transition &t, const var_list &vars, const state &s,
                       const valuation &inputs) {
  valuation env = state_to_valuation(vars, s);
  for (const auto &[k, w] : inputs) env[k] = w;
  state out;
  out.reserve(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) out.push_back(eval(t.updates[i], env));
  return out;
}

std::vector<state> step(const transition &t, const var_list &vars, const state &s) {
  unsigned total_bits = 0;
  for (const auto &in : t.inputs) total_bits += in.width;
  if (total_bits > 20) throw std::runtime_error("step: nondet input space too large to enumerate");

  std::vector<state> out;
  uint64_t count = uint64_t(1) << total_bits;
  for (uint64_t pattern = 0; pattern < count; ++pattern) {
    valuation inputs;
    uint64_t rest = pattern;
    for (const auto &in : t.inputs) {
      inputs.emplace(in.name, word(in.width, rest & word::mask(in.width)));
      rest >>= in.width;
    }
    state succ = apply_transition(t, vars, s, inputs);
    if (std::find(out.begin(), out.end(), succ) == out.end()) out.push_back(succ);
  }
  return out;
}

bool is_deterministic(const transition &t, const var_list &vars) {
  if (t.inputs.empty()) return true;

  // validity check: two input valuations that disagree on some update
  std::map<std::string, std::string> ren_a, ren_b;
  for (const auto &in : t.inputs) {
    ren_a.emplace(in.name, in.name + "#a");
    ren_b.emplace(in.name, in.name + "#b");
  }
  bv_expr differs = mk_bool(false);
  for (const auto &u : t.updates) {
    bv_expr ua = rename_vars(u, ren_a);
    bv_expr ub = rename_vars(u, ren_b);
    differs = mk_or(differs, mk_binary(bv_op::ne, ua, ub));
  }
  auto [c, vm] = bitblast(differs);
  sat_model m;
  switch (solve(c, m)) {
  case sat_result::unsat: return true;
  case sat_result::sat: return false;
  case sat_result::interrupted: throw std::runtime_error("is_deterministic: solver interrupted");
  }
  return false;
}

unsigned total_state_bits(const var_list &vars) {
  unsigned n = 0;
  for (const auto &v : vars) n += v.width;
  return n;
}

uint64_t pack_state(const var_list &vars, const state &s) {
  uint64_t bits = 0;
  unsigned shift = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    bits |= s[i].bits() << shift;
    shift += vars[i].width;
  }
  return bits;
}

state unpack_state(const var_list &vars, uint64_t bits) {
  state s;
  s.reserve(vars.size());
  for (const auto &v : vars) {
    s.push_back(word(v.width, bits & word::mask(v.width)));
    bits >>= v.width;
  }
  return s;
}

} // namespace bvt
