// Copyright 2026 The Authors.
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

#ifndef LPM_SETS_HPP
#define LPM_SETS_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lpm/error.hpp"

namespace lpm {

// Subsets of a ground set {1..n} are machine-word bitmasks: element e is
// bit e-1. Ground sets larger than 64 are rejected where they are built.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }

constexpr bool contains(Mask s, int e) { return (s >> (e - 1)) & 1; }

inline int set_size(Mask s) { return std::popcount(s); }

inline Mask make_set(std::initializer_list<int> elems) {
  Mask s = 0;
  for (int e : elems) s |= element_bit(e);
  return s;
}

inline std::vector<int> set_elements(Mask s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline std::string set_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

template <typename F>
void for_each_element(Mask s, F&& fn) {
  while (s) {
    fn(std::countr_zero(s) + 1);
    s &= s - 1;
  }
}

/// Visits every subset of `universe`, including the empty set and
/// `universe` itself, in increasing numeric order of the mask.
template <typename F>
void for_each_subset(Mask universe, F&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;
  }
}

/// Visits every subset of {1..n} of the given size (Gosper's hack).
template <typename F>
void for_each_subset_of_size(int n, int size, F&& fn) {
  if (size < 0 || size > n) return;
  if (size == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = full_mask(n);
  Mask s = full_mask(size);
  while (s <= limit) {
    fn(s);
    Mask low = s & (~s + 1);
    Mask ripple = s + low;
    if (ripple > limit || ripple == 0) break;
    s = ripple | (((s ^ ripple) >> 2) / low);
  }
}

/// Places the i-th lowest bit of `x` at the position of the i-th lowest
/// set bit of `frame` (a portable pdep).
inline Mask spread_bits(Mask x, Mask frame) {
  Mask out = 0;
  while (x && frame) {
    Mask slot = frame & (~frame + 1);
    if (x & 1) out |= slot;
    x >>= 1;
    frame &= frame - 1;
  }
  return out;
}

/// Inverse of spread_bits: extracts the bits of `x` that sit on set bits
/// of `frame` and packs them into the low positions (a portable pext).
inline Mask squeeze_bits(Mask x, Mask frame) {
  Mask out = 0;
  int pos = 0;
  while (frame) {
    Mask slot = frame & (~frame + 1);
    if (x & slot) out |= Mask{1} << pos;
    ++pos;
    frame &= frame - 1;
  }
  return out;
}

inline void require_subset(Mask X, Mask ground, const char* who) {
  if (X & ~ground) {
    throw PreconditionError(std::string(who) + ": element " +
                            std::to_string(std::countr_zero(X & ~ground) + 1) +
                            " is outside the ground set");
  }
}

}  // namespace lpm

#endif  // LPM_SETS_HPP
