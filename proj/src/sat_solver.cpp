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

#include "bvt/sat.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bvt {

namespace {

// Internal literal encoding: variable v (1-based) with polarity p maps to
// 2*v + p, where p = 1 means negated.
using ilit = uint32_t;

inline ilit to_ilit(int ext) {
  int v = ext > 0 ? ext : -ext;
  return ilit(v) * 2 + (ext < 0 ? 1 : 0);
}
inline ilit neg_lit(ilit l) { return l ^ 1; }
inline uint32_t lit_var(ilit l) { return l >> 1; }
inline bool lit_sign(ilit l) { return l & 1; }

enum : int8_t { UNASSIGNED = -1, FALSE = 0, TRUE = 1 };

struct clause {
  std::vector<ilit> lits;
  double activity = 0.0;
  bool learned = false;
};

struct watch {
  uint32_t cref;
  ilit blocker;
};

struct cdcl {
  std::vector<clause> clauses;
  std::vector<std::vector<watch>> watches; // indexed by ilit
  std::vector<int8_t> value;               // per var
  std::vector<int8_t> phase;               // saved phase per var
  std::vector<uint32_t> level;             // per var
  std::vector<int32_t> reason;             // clause ref per var, -1 if decision
  std::vector<ilit> trail;
  std::vector<uint32_t> trail_lim;
  size_t qhead = 0;

  std::vector<double> activity;
  double var_inc = 1.0;
  double cla_inc = 1.0;
  static constexpr double var_decay = 1.0 / 0.95;
  static constexpr double cla_decay = 1.0 / 0.999;

  // order heap (binary max-heap on activity, ties by smaller var index)
  std::vector<uint32_t> heap;
  std::vector<int32_t> heap_pos;

  std::vector<uint8_t> seen;
  uint32_t nvars = 0;
  uint64_t conflicts = 0;
  uint64_t learned_count = 0;
  bool ok = true;

  void init(uint32_t n) {
    nvars = n;
    watches.assign(2 * n + 2, {});
    value.assign(n + 1, UNASSIGNED);
    phase.assign(n + 1, FALSE);
    level.assign(n + 1, 0);
    reason.assign(n + 1, -1);
    activity.assign(n + 1, 0.0);
    heap_pos.assign(n + 1, -1);
    seen.assign(n + 1, 0);
    for (uint32_t v = 1; v <= n; ++v) heap_insert(v);
  }

  bool heap_less(uint32_t a, uint32_t b) const {
    if (activity[a] != activity[b]) return activity[a] < activity[b];
    return a > b;
  }

  void heap_up(size_t i) {
    uint32_t v = heap[i];
    while (i > 0) {
      size_t p = (i - 1) / 2;
      if (!heap_less(heap[p], v)) break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = int32_t(i);
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = int32_t(i);
  }

  void heap_down(size_t i) {
    uint32_t v = heap[i];
    size_t n = heap.size();
    for (;;) {
      size_t c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && heap_less(heap[c], heap[c + 1])) ++c;
      if (!heap_less(v, heap[c])) break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = int32_t(i);
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = int32_t(i);
  }

  void heap_insert(uint32_t v) {
    if (heap_pos[v] >= 0) return;
    heap.push_back(v);
    heap_pos[v] = int32_t(heap.size() - 1);
    heap_up(heap.size() - 1);
  }

  uint32_t heap_pop() {
    uint32_t v = heap[0];
    heap_pos[v] = -1;
    heap[0] = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap_pos[heap[0]] = 0;
      heap_down(0);
    }
    return v;
  }

  void bump_var(uint32_t v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (auto &a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(size_t(heap_pos[v]));
  }

  void bump_clause(clause &c) {
    c.activity += cla_inc;
    if (c.activity > 1e20) {
      for (auto &cl : clauses)
        if (cl.learned) cl.activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  int8_t lit_value(ilit l) const {
    int8_t v = value[lit_var(l)];
    if (v == UNASSIGNED) return UNASSIGNED;
    return lit_sign(l) ? int8_t(1 - v) : v;
  }

  uint32_t decision_level() const { return uint32_t(trail_lim.size()); }

  void enqueue(ilit l, int32_t from) {
    uint32_t v = lit_var(l);
    value[v] = lit_sign(l) ? FALSE : TRUE;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(l);
  }

  void attach(uint32_t cref) {
    const clause &c = clauses[cref];
    watches[neg_lit(c.lits[0])].push_back({cref, c.lits[1]});
    watches[neg_lit(c.lits[1])].push_back({cref, c.lits[0]});
  }

  // Returns conflicting clause ref or -1.
  int32_t propagate() {
    while (qhead < trail.size()) {
      ilit p = trail[qhead++];
      auto &ws = watches[p];
      size_t i = 0, j = 0;
      while (i < ws.size()) {
        watch w = ws[i];
        if (lit_value(w.blocker) == TRUE) {
          ws[j++] = ws[i++];
          continue;
        }
        clause &c = clauses[w.cref];
        ilit false_lit = neg_lit(p);
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        ilit first = c.lits[0];
        if (first != w.blocker && lit_value(first) == TRUE) {
          ws[j++] = {w.cref, first};
          ++i;
          continue;
        }
        bool found = false;
        for (size_t k = 2; k < c.lits.size(); ++k) {
          if (lit_value(c.lits[k]) != FALSE) {
            std::swap(c.lits[1], c.lits[k]);
            watches[neg_lit(c.lits[1])].push_back({w.cref, first});
            found = true;
            break;
          }
        }
        if (found) {
          ++i;
          continue;
        }
        // unit or conflict
        ws[j++] = {w.cref, first};
        ++i;
        if (lit_value(first) == FALSE) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead = trail.size();
          return int32_t(w.cref);
        }
        enqueue(first, int32_t(w.cref));
      }
      ws.resize(j);
    }
    return -1;
  }

  void analyze(int32_t confl, std::vector<ilit> &learnt, uint32_t &bt_level) {
    learnt.clear();
    learnt.push_back(0); // slot for the asserting literal
    std::vector<uint32_t> to_clear;
    int path = 0;
    ilit p = 0;
    size_t idx = trail.size();
    int32_t cur = confl;
    do {
      clause &c = clauses[cur];
      if (c.learned) bump_clause(c);
      for (size_t k = (p == 0 ? 0 : 1); k < c.lits.size(); ++k) {
        ilit q = c.lits[k];
        uint32_t v = lit_var(q);
        if (!seen[v] && level[v] > 0) {
          seen[v] = 1;
          to_clear.push_back(v);
          bump_var(v);
          if (level[v] >= decision_level())
            ++path;
          else
            learnt.push_back(q);
        }
      }
      while (!seen[lit_var(trail[--idx])]) {}
      p = trail[idx];
      cur = reason[lit_var(p)];
      seen[lit_var(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = neg_lit(p);

    // clause minimization: drop literals implied by the rest
    size_t j = 1;
    for (size_t i = 1; i < learnt.size(); ++i) {
      uint32_t v = lit_var(learnt[i]);
      int32_t r = reason[v];
      bool redundant = false;
      if (r >= 0) {
        redundant = true;
        for (const ilit q : clauses[r].lits) {
          uint32_t qv = lit_var(q);
          if (qv == v) continue;
          if (!seen[qv] && level[qv] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) learnt[j++] = learnt[i];
    }
    learnt.resize(j);

    for (uint32_t v : to_clear) seen[v] = 0;

    if (learnt.size() == 1) {
      bt_level = 0;
    } else {
      size_t max_i = 1;
      for (size_t i = 2; i < learnt.size(); ++i)
        if (level[lit_var(learnt[i])] > level[lit_var(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level[lit_var(learnt[1])];
    }
  }

  void backtrack(uint32_t lvl) {
    if (decision_level() <= lvl) return;
    for (size_t i = trail.size(); i > trail_lim[lvl];) {
      --i;
      uint32_t v = lit_var(trail[i]);
      phase[v] = value[v];
      value[v] = UNASSIGNED;
      heap_insert(v);
    }
    trail.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  void reduce_db() {
    std::vector<uint32_t> learned_refs;
    for (uint32_t i = 0; i < clauses.size(); ++i)
      if (clauses[i].learned && clauses[i].lits.size() > 2) learned_refs.push_back(i);
    if (learned_refs.size() < 64) return;
    std::sort(learned_refs.begin(), learned_refs.end(), [&](uint32_t a, uint32_t b) {
      return clauses[a].activity < clauses[b].activity;
    });
    std::vector<uint8_t> locked(clauses.size(), 0);
    for (uint32_t v = 1; v <= nvars; ++v)
      if (value[v] != UNASSIGNED && reason[v] >= 0) locked[reason[v]] = 1;
    std::vector<uint8_t> dead(clauses.size(), 0);
    size_t limit = learned_refs.size() / 2;
    for (size_t i = 0; i < limit; ++i)
      if (!locked[learned_refs[i]]) dead[learned_refs[i]] = 1;
    // rebuild watches without dead clauses
    for (auto &ws : watches) {
      size_t j = 0;
      for (size_t i = 0; i < ws.size(); ++i)
        if (!dead[ws[i].cref]) ws[j++] = ws[i];
      ws.resize(j);
    }
    for (uint32_t i = 0; i < clauses.size(); ++i)
      if (dead[i]) clauses[i].lits.clear();
  }

  static uint64_t luby(uint64_t i) {
    // the classic reluctant-doubling sequence 1 1 2 1 1 2 4 ...
    uint64_t k = 1;
    while ((uint64_t(1) << k) - 1 < i + 1) ++k;
    while ((uint64_t(1) << k) - 1 != i + 1) {
      --k;
      i -= (uint64_t(1) << k) - 1;
    }
    return uint64_t(1) << (k - 1);
  }

  sat_result run(const cnf &in, sat_model &out, const sat_limits &lim) {
    init(uint32_t(in.nvars));
    for (const auto &cl : in.clauses) {
      std::vector<ilit> lits;
      lits.reserve(cl.size());
      for (int l : cl) {
        assert(l != 0 && std::abs(l) <= in.nvars);
        lits.push_back(to_ilit(l));
      }
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      bool taut = false;
      for (size_t i = 0; i + 1 < lits.size(); ++i)
        if (lits[i + 1] == neg_lit(lits[i])) taut = true;
      if (taut) continue;
      if (lits.empty()) return sat_result::unsat;
      if (lits.size() == 1) {
        int8_t v = lit_value(lits[0]);
        if (v == FALSE) return sat_result::unsat;
        if (v == UNASSIGNED) enqueue(lits[0], -1);
        continue;
      }
      clauses.push_back({std::move(lits), 0.0, false});
      attach(uint32_t(clauses.size() - 1));
    }
    if (propagate() >= 0) return sat_result::unsat;

    std::vector<ilit> learnt;
    uint64_t restart_round = 0;
    uint64_t restart_budget = 32 * luby(restart_round);
    uint64_t conflicts_at_restart = 0;
    uint64_t reduce_at = 4096;

    for (;;) {
      int32_t confl = propagate();
      if (confl >= 0) {
        ++conflicts;
        if (decision_level() == 0) return sat_result::unsat;
        uint32_t bt = 0;
        analyze(confl, learnt, bt);
        backtrack(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses.push_back({learnt, cla_inc, true});
          ++learned_count;
          attach(uint32_t(clauses.size() - 1));
          enqueue(learnt[0], int32_t(clauses.size() - 1));
        }
        var_inc *= var_decay;
        cla_inc *= cla_decay;
        if (conflicts >= lim.max_conflicts) return sat_result::interrupted;
        if ((conflicts & 0x3f) == 0 && lim.cancel && lim.cancel->load(std::memory_order_relaxed))
          return sat_result::interrupted;
        if (learned_count >= reduce_at) {
          reduce_db();
          reduce_at += 2048;
        }
      } else {
        if (conflicts - conflicts_at_restart >= restart_budget) {
          conflicts_at_restart = conflicts;
          restart_budget = 32 * luby(++restart_round);
          backtrack(0);
          continue;
        }
        // pick a branch variable
        uint32_t next = 0;
        while (!heap.empty()) {
          uint32_t v = heap_pop();
          if (value[v] == UNASSIGNED) {
            next = v;
            break;
          }
        }
        if (next == 0) {
          out.assign.assign(nvars + 1, 0);
          for (uint32_t v = 1; v <= nvars; ++v) out.assign[v] = value[v] == TRUE ? 1 : 0;
          return sat_result::sat;
        }
        trail_lim.push_back(uint32_t(trail.size()));
        ilit dec = next * 2 + (phase[next] == TRUE ? 0 : 1);
        enqueue(dec, -1);
      }
    }
  }
};

} // namespace

sat_result solve_cdcl(const cnf &c, sat_model &out, const sat_limits &lim) {
  cdcl solver;
  return solver.run(c, out, lim);
}

sat_result solve(const cnf &c, sat_model &out, const solver_options &opts) {
  std::string cmd = opts.external_command;
  if (cmd.empty()) {
    if (const char *env = std::getenv("BVT_EXTERNAL_SAT")) cmd = env;
  }
  if (!cmd.empty()) return run_external_sat(cmd, c, out);
  return solve_cdcl(c, out, opts.limits);
}

std::string to_dimacs(const cnf &c) {
  std::ostringstream os;
  os << "p cnf " << c.nvars << " " << c.clauses.size() << "\n";
  for (const auto &cl : c.clauses) {
    for (int l : cl) os << l << " ";
    os << "0\n";
  }
  return os.str();
}

sat_result parse_solver_output(const std::string &text, int nvars, sat_model &out) {
  out.assign.assign(nvars + 1, 0);
  std::istringstream is(text);
  std::string line;
  bool sat_seen = false, unsat_seen = false, any_model = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "s") {
      ls >> tok;
    }
    if (tok == "SATISFIABLE" || tok == "SAT" || tok == "sat") {
      sat_seen = true;
      continue;
    }
    if (tok == "UNSATISFIABLE" || tok == "UNSAT" || tok == "unsat") {
      unsat_seen = true;
      continue;
    }
    if (tok == "v" || tok == "V") {
      int l;
      while (ls >> l)
        if (l != 0 && std::abs(l) <= nvars) {
          out.assign[std::abs(l)] = l > 0 ? 1 : 0;
          any_model = true;
        }
      continue;
    }
    // bare integer model line (minisat output-file style)
    try {
      size_t pos = 0;
      int l = std::stoi(tok, &pos);
      if (pos == tok.size()) {
        do {
          if (l != 0 && std::abs(l) <= nvars) {
            out.assign[std::abs(l)] = l > 0 ? 1 : 0;
            any_model = true;
          }
        } while (ls >> l);
      }
    } catch (const std::exception &) {
      // unknown line, ignore
    }
  }
  if (unsat_seen) return sat_result::unsat;
  if (sat_seen || any_model) return sat_result::sat;
  throw std::runtime_error("external solver produced no recognizable verdict");
}

sat_result run_external_sat(const std::string &command, const cnf &c, sat_model &out) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path file = dir / ("bvt_sat_" + std::to_string(::getpid()) + "_" +
                         std::to_string(reinterpret_cast<uintptr_t>(&c) & 0xffff) + ".cnf");
  {
    std::ofstream os(file);
    os << to_dimacs(c);
  }
  std::string cmdline = command + " " + file.string() + " 2>/dev/null";
  FILE *pipe = ::popen(cmdline.c_str(), "r");
  if (!pipe) {
    fs::remove(file);
    throw std::runtime_error("cannot run external solver: " + command);
  }
  std::string text;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  ::pclose(pipe);
  fs::remove(file);
  return parse_solver_output(text, c.nvars, out);
}

} // namespace bvt
