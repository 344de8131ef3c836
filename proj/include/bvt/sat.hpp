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

#ifndef BVT_SAT_HPP
#define BVT_SAT_HPP

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

namespace bvt {

// Propositional CNF. Variables are positive integers; literals are nonzero
// integers with sign for polarity.
struct cnf {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;

  int new_var() { return ++nvars; }
  void add(std::vector<int> c) { clauses.push_back(std::move(c)); }
  void add_unit(int l) { clauses.push_back({l}); }
};

struct sat_model {
  std::vector<int8_t> assign; // index 1..nvars; 0/1; unassigned default 0

  bool value(int var) const {
    return var < int(assign.size()) ? assign[var] != 0 : false;
  }
};

enum class sat_result { sat, unsat, interrupted };

struct sat_limits {
  uint64_t max_conflicts = UINT64_MAX;
  const std::atomic<bool> *cancel = nullptr;
  unsigned seed = 0;
};

// Conflict-driven clause learning solver: two-watched literals, first-UIP
// learning with minimization, VSIDS branching, phase saving, Luby restarts,
// activity-based learned clause reduction. Deterministic for a fixed seed.
sat_result solve_cdcl(const cnf &c, sat_model &out, const sat_limits &lim = {});

// Dispatches to an external engine when `external_command` (or the
// BVT_EXTERNAL_SAT environment variable) is set, otherwise to solve_cdcl.
struct solver_options {
  std::string external_command;
  sat_limits limits;
};

sat_result solve(const cnf &c, sat_model &out, const solver_options &opts = {});

// Standard clause text exchange.
std::string to_dimacs(const cnf &c);
// Parses "s SATISFIABLE"/"v ..." style output as well as the bare
// "SAT\n<lits>" style; throws std::runtime_error on an unrecognizable reply.
sat_result parse_solver_output(const std::string &text, int nvars, sat_model &out);
sat_result run_external_sat(const std::string &command, const cnf &c, sat_model &out);

} // namespace bvt

#endif
