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

#ifndef BVT_BITBLAST_HPP
#define BVT_BITBLAST_HPP

#include "bvt/expr.hpp"
#include "bvt/sat.hpp"

namespace bvt {

// Maps named bit-vector variables to their propositional bits (LSB first).
struct varmap {
  std::map<std::string, std::vector<int>> bits;

  word decode(const std::string &name, const sat_model &m) const;
  valuation decode_all(const sat_model &m) const;
};

// Tseitin-encode the 1-bit constraint `e` into an equisatisfiable CNF.
// The expression must be hole-free.
std::pair<cnf, varmap> bitblast(const bv_expr &e);

} // namespace bvt

#endif
