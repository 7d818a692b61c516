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

#ifndef LPM_STRUCTURE_HPP
#define LPM_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/matroid.hpp"
#include "lpm/sets.hpp"
#include "lpm/transversal.hpp"

namespace lpm {

// Formula-level structure queries for strong LPMs. Each closed form below
// is equivalent to the corresponding rank-oracle computation; the test
// suite proves the equivalences exhaustively at small sizes.

/// rank {1..j} = number of N-steps of q among the first j steps.
inline int rank_prefix(const StrongLpm& M, int j) {
  if (j < 0 || j > M.n()) {
    throw PreconditionError("rank_prefix: index " + std::to_string(j) +
                            " out of range [0, " + std::to_string(M.n()) + "]");
  }
  return M.pair().q.north_prefix(j);
}

/// j is a loop iff its step is forced east: h_p(j-1) = h_q(j).
inline bool is_loop_fast(const StrongLpm& M, int j) {
  if (j < 1 || j > M.n()) {
    throw PreconditionError("is_loop_fast: element out of range");
  }
  return M.pair().p.north_prefix(j - 1) == M.pair().q.north_prefix(j);
}

/// j is a coloop iff its step is forced north: h_p(j) = h_q(j-1) + 1.
/// (This is the loop test in the path-level dual.)
inline bool is_coloop_fast(const StrongLpm& M, int j) {
  if (j < 1 || j > M.n()) {
    throw PreconditionError("is_coloop_fast: element out of range");
  }
  return M.pair().p.north_prefix(j) == M.pair().q.north_prefix(j - 1) + 1;
}

inline Mask loops_fast(const StrongLpm& M) {
  Mask out = 0;
  for (int j = 1; j <= M.n(); ++j) {
    if (is_loop_fast(M, j)) out |= element_bit(j);
  }
  return out;
}

inline Mask coloops_fast(const StrongLpm& M) {
  Mask out = 0;
  for (int j = 1; j <= M.n(); ++j) {
    if (is_coloop_fast(M, j)) out |= element_bit(j);
  }
  return out;
}

/// j and k (j < k) are parallel iff their steps live in a common corridor
/// one step wide: h_p(j-1) = h_p(k-1) = h_q(j) - 1 = h_q(k) - 1.
/// Loops fail the equalities, so no separate loop guard is needed.
inline bool is_parallel_fast(const StrongLpm& M, int j, int k) {
  if (j < 1 || k <= j || k > M.n()) {
    throw PreconditionError("is_parallel_fast: need 1 <= j < k <= n");
  }
  const auto& p = M.pair().p;
  const auto& q = M.pair().q;
  const int a = p.north_prefix(j - 1);
  return a == p.north_prefix(k - 1) && a == q.north_prefix(j) - 1 &&
         a == q.north_prefix(k) - 1;
}

inline std::vector<std::pair<int, int>> parallel_pairs_fast(
    const StrongLpm& M) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= M.n(); ++j) {
    for (int k = j + 1; k <= M.n(); ++k) {
      if (is_parallel_fast(M, j, k)) out.emplace_back(j, k);
    }
  }
  return out;
}

/// No loops and no parallel pairs.
inline bool is_simple_fast(const StrongLpm& M) {
  return loops_fast(M) == 0 && parallel_pairs_fast(M).empty();
}

/// Oracle-checked witness that {1..j-1} is a flat and that adding any
/// k >= j raises its rank by one.
struct PrefixFlatWitness {
  int j = 0;
  Mask flat = 0;
  int flat_rank = 0;
  /// (k, rank of flat + {k}) for every k >= j.
  std::vector<std::pair<int, int>> extensions;
};

inline PrefixFlatWitness prefix_is_flat(const StrongLpm& M, int j) {
  if (j < 1 || j > M.n()) {
    throw PreconditionError("prefix_is_flat: element out of range");
  }
  Mask loop_set = loops_fast(M);
  if (loop_set != 0) {
    throw PreconditionError("prefix_is_flat: matroid has a loop (element " +
                            std::to_string(std::countr_zero(loop_set) + 1) +
                            ")");
  }
  if (!M.pair().q.is_north(j)) {
    throw PreconditionError("prefix_is_flat: step " + std::to_string(j) +
                            " of q is E, expected N");
  }
  PrefixFlatWitness w;
  w.j = j;
  w.flat = full_mask(j - 1);
  w.flat_rank = M.rank_of(w.flat);
  for (int k = j; k <= M.n(); ++k) {
    const int rk = M.rank_of(w.flat | element_bit(k));
    if (rk != w.flat_rank + 1) {
      throw Error("prefix flat check failed at k=" + std::to_string(k));
    }
    w.extensions.emplace_back(k, rk);
  }
  // All extensions raise the rank, so nothing outside {1..j-1} is in its
  // closure: the prefix is a flat.
  return w;
}

/// The coline {1..j2-1} of a simple strong LPM, where j1 > j2 are the two
/// largest N-positions of the upper path q, together with its copoints:
/// the prefix copoint {1..j1-1} (multiple iff j1 - j2 >= 2) and the
/// simple copoints {1..j2-1} + {k} for k >= j1.
struct WesternColineResult {
  int j1 = 0;
  int j2 = 0;
  Mask coline = 0;
  Mask prefix_copoint = 0;
  CopointKind prefix_copoint_kind = CopointKind::simple;
  std::vector<Mask> eastern_simple_copoints;
};

inline void require_simple_rank2(const StrongLpm& M, const char* who) {
  Mask loop_set = loops_fast(M);
  if (loop_set != 0) {
    throw PreconditionError(std::string(who) + ": matroid has a loop (element " +
                            std::to_string(std::countr_zero(loop_set) + 1) +
                            ")");
  }
  auto parallels = parallel_pairs_fast(M);
  if (!parallels.empty()) {
    throw PreconditionError(std::string(who) + ": matroid has parallel elements (" +
                            std::to_string(parallels.front().first) + "," +
                            std::to_string(parallels.front().second) + ")");
  }
  if (M.rank_total() < 2) {
    throw PreconditionError(std::string(who) + ": rank " +
                            std::to_string(M.rank_total()) + " < 2");
  }
}

inline WesternColineResult western_coline(const StrongLpm& M,
                                          Validation level = Validation::fast) {
  require_simple_rank2(M, "western_coline");
  WesternColineResult res;
  for (int j = M.n(); j >= 1; --j) {
    if (!M.pair().q.is_north(j)) continue;
    if (res.j1 == 0) {
      res.j1 = j;
    } else {
      res.j2 = j;
      break;
    }
  }
  res.coline = full_mask(res.j2 - 1);
  res.prefix_copoint = full_mask(res.j1 - 1);
  res.prefix_copoint_kind =
      res.j1 - res.j2 >= 2 ? CopointKind::multiple : CopointKind::simple;
  for (int k = res.j1; k <= M.n(); ++k) {
    res.eastern_simple_copoints.push_back(res.coline | element_bit(k));
  }
  if (level == Validation::oracle) {
    RankOracle O = oracle_from(M);
    const int r = O.rank_full();
    auto check_copoint = [&](Mask Y) {
      if (O.rank(Y) != r - 1 || closure(O, Y) != Y) {
        throw Error("western coline invariant failed for copoint " +
                    set_to_string(Y));
      }
    };
    if (O.rank(res.coline) != r - 2 || closure(O, res.coline) != res.coline) {
      throw Error("western coline invariant failed for " +
                  set_to_string(res.coline));
    }
    check_copoint(res.prefix_copoint);
    for (Mask Y : res.eastern_simple_copoints) check_copoint(Y);
  }
  return res;
}

/// A coline of M with strictly more simple than multiple copoints,
/// computed by case analysis on j1 = max N-position of q:
///   (a) j1 < n: the western coline;
///   (b) j1 = n and some other coloop e1 exists: {1..n-1} minus e1;
///   (c) j1 = n is the only coloop: contract it by truncating the last
///       step of both paths, recurse, and lift the result by adding n.
/// Requires a simple matroid of rank >= 2.
inline Mask quite_simple_coline(const StrongLpm& M) {
  require_simple_rank2(M, "quite_simple_coline");
  const int n = M.n();
  if (!M.pair().q.is_north(n)) {
    return western_coline(M).coline;  // case (a)
  }
  // j1 = n, so n is a coloop.
  Mask others = coloops_fast(M) & ~element_bit(n);
  if (others != 0) {
    const int e1 = std::countr_zero(others) + 1;  // smallest such coloop
    return full_mask(n - 1) & ~element_bit(e1);  // case (b)
  }
  // Case (c): q_n = N forces p_n = N (common endpoints), so dropping the
  // last step of both paths contracts the coloop n.
  std::string pw = M.pair().p.word();
  std::string qw = M.pair().q.word();
  pw.pop_back();
  qw.pop_back();
  StrongLpm truncated{PathPair(LatticePath(std::move(pw)), LatticePath(std::move(qw)))};
  return quite_simple_coline(truncated) | element_bit(n);
}

/// The strong LPM presentation of the rank-2 uniform matroid on `size`
/// elements: lower path E..ENN, upper path NNE..E.
inline StrongLpm rank2_lpm(int size) {
  if (size < 2) {
    throw PreconditionError("rank2_lpm: size " + std::to_string(size) +
                            " < 2");
  }
  std::string pw(static_cast<std::size_t>(size), 'E');
  std::string qw(static_cast<std::size_t>(size), 'E');
  pw[static_cast<std::size_t>(size - 2)] = 'N';
  pw[static_cast<std::size_t>(size - 1)] = 'N';
  qw[0] = 'N';
  qw[1] = 'N';
  return StrongLpm(PathPair(LatticePath(std::move(pw)), LatticePath(std::move(qw))));
}

}  // namespace lpm

#endif  // LPM_STRUCTURE_HPP
