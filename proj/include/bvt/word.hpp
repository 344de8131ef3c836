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

#ifndef BVT_WORD_HPP
#define BVT_WORD_HPP

#include <cassert>
#include <cstdint>
#include <string>

namespace bvt {

// A fixed-width bit pattern, 1..64 bits. All arithmetic is modulo 2^width;
// the signed view is two's complement.
class word {
public:
  word() = default;
  word(unsigned width, uint64_t bits) : width_(width), bits_(bits & mask(width)) {
    assert(width >= 1 && width <= 64);
  }

  unsigned width() const { return width_; }
  uint64_t bits() const { return bits_; }

  static uint64_t mask(unsigned width) {
    return width >= 64 ? ~uint64_t(0) : (uint64_t(1) << width) - 1;
  }

  bool sign_bit() const { return (bits_ >> (width_ - 1)) & 1; }

  // Value under the two's complement interpretation.
  int64_t as_signed() const {
    if (width_ == 64 || !sign_bit())
      return static_cast<int64_t>(bits_);
    return static_cast<int64_t>(bits_ - (uint64_t(1) << width_));
  }

  uint64_t as_unsigned() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_true() const { return bits_ != 0; }

  static word zero(unsigned w) { return word(w, 0); }
  static word one(unsigned w) { return word(w, 1); }
  static word all_ones(unsigned w) { return word(w, mask(w)); }
  static word min_signed(unsigned w) { return word(w, uint64_t(1) << (w - 1)); }
  static word max_signed(unsigned w) { return word(w, mask(w) >> 1); }
  static word from_bool(bool b) { return word(1, b ? 1 : 0); }

  bool operator==(const word &o) const { return width_ == o.width_ && bits_ == o.bits_; }
  bool operator!=(const word &o) const { return !(*this == o); }

  std::string str() const { return std::to_string(bits_) + "@" + std::to_string(width_); }

private:
  unsigned width_ = 1;
  uint64_t bits_ = 0;
};

inline void check_same_width(const word &a, const word &b) {
  assert(a.width() == b.width() && "operand width mismatch");
  (void)a; (void)b;
}

inline word add(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() + b.bits());
}

inline word sub(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() - b.bits());
}

inline word mul(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() * b.bits());
}

inline word neg(const word &a) { return word(a.width(), ~a.bits() + 1); }
inline word bv_not(const word &a) { return word(a.width(), ~a.bits()); }

inline word bv_and(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() & b.bits());
}

inline word bv_or(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() | b.bits());
}

inline word bv_xor(const word &a, const word &b) {
  check_same_width(a, b);
  return word(a.width(), a.bits() ^ b.bits());
}

// Division by zero yields all-ones; modulo by zero yields the dividend.
inline word udiv(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.is_zero()) return word::all_ones(a.width());
  return word(a.width(), a.bits() / b.bits());
}

inline word urem(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.is_zero()) return a;
  return word(a.width(), a.bits() % b.bits());
}

// Signed division truncates toward zero; remainder takes the dividend's sign.
inline word sdiv(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.is_zero()) return word::all_ones(a.width());
  word ma = a.sign_bit() ? neg(a) : a;
  word mb = b.sign_bit() ? neg(b) : b;
  word q(a.width(), ma.bits() / mb.bits());
  return (a.sign_bit() != b.sign_bit()) ? neg(q) : q;
}

inline word srem(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.is_zero()) return a;
  word ma = a.sign_bit() ? neg(a) : a;
  word mb = b.sign_bit() ? neg(b) : b;
  word r(a.width(), ma.bits() % mb.bits());
  return a.sign_bit() ? neg(r) : r;
}

// Shift amounts are interpreted as unsigned; amounts >= width saturate to
// 0 (shl/lshr) or to the sign fill (ashr).
inline word shl(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.as_unsigned() >= a.width()) return word::zero(a.width());
  return word(a.width(), a.bits() << b.as_unsigned());
}

inline word lshr(const word &a, const word &b) {
  check_same_width(a, b);
  if (b.as_unsigned() >= a.width()) return word::zero(a.width());
  return word(a.width(), a.bits() >> b.as_unsigned());
}

inline word ashr(const word &a, const word &b) {
  check_same_width(a, b);
  uint64_t fill = a.sign_bit() ? word::mask(a.width()) : 0;
  if (b.as_unsigned() >= a.width()) return word(a.width(), fill);
  unsigned n = unsigned(b.as_unsigned());
  uint64_t lo = a.bits() >> n;
  uint64_t hi = a.sign_bit() ? (word::mask(a.width()) & ~(word::mask(a.width()) >> n)) : 0;
  return word(a.width(), lo | hi);
}

inline word ult(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.bits() < b.bits());
}

inline word ule(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.bits() <= b.bits());
}

inline word slt(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.as_signed() < b.as_signed());
}

inline word sle(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.as_signed() <= b.as_signed());
}

inline word eq(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.bits() == b.bits());
}

inline word ne(const word &a, const word &b) {
  check_same_width(a, b);
  return word::from_bool(a.bits() != b.bits());
}

inline word smin(const word &a, const word &b) { return slt(a, b).is_true() ? a : b; }
inline word smax(const word &a, const word &b) { return slt(a, b).is_true() ? b : a; }

inline word zext(const word &a, unsigned w) {
  assert(w >= a.width());
  return word(w, a.bits());
}

inline word sext(const word &a, unsigned w) {
  assert(w >= a.width());
  if (!a.sign_bit()) return word(w, a.bits());
  return word(w, a.bits() | (word::mask(w) & ~word::mask(a.width())));
}

inline word trunc(const word &a, unsigned w) {
  assert(w <= a.width());
  return word(w, a.bits());
}

} // namespace bvt

#endif
