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

#ifndef LPM_REFERENCE_HPP
#define LPM_REFERENCE_HPP

// Brute-force reference implementations. These are the independent test
// oracles for the production algorithms: they scan all 2^n subsets or all
// 2^n words and never share code with the paths they check.

#include <algorithm>
#include <optional>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"
#include "lpm/represent.hpp"
#include "lpm/sets.hpp"

namespace lpm::reference {

/// Filters all 2^n words by the precedes predicate.
inline std::vector<LatticePath> enumerate_between_brute(const PathPair& pair) {
  std::vector<LatticePath> out;
  for (const LatticePath& r : all_paths(pair.length())) {
    if (r.norths() == pair.norths() && precedes(pair.p, r) &&
        precedes(r, pair.q)) {
      out.push_back(r);
    }
  }
  return out;
}

inline bool independent_from_bases(Mask X, const std::vector<Mask>& bases) {
  for (Mask B : bases) {
    if ((X & ~B) == 0) return true;
  }
  return false;
}

inline int rank_from_bases(Mask X, const std::vector<Mask>& bases) {
  int best = 0;
  for (Mask B : bases) best = std::max(best, set_size(X & B));
  return best;
}

/// All maximal independent sets, via the rank function alone.
inline std::vector<Mask> brute_bases(const RankOracle& O) {
  const int r = O.rank_full();
  std::vector<Mask> out;
  for_each_subset(O.ground(), [&](Mask X) {
    if (set_size(X) == r && O.rank(X) == r) out.push_back(X);
  });
  return out;
}

/// All closed sets, by scanning every subset.
inline std::vector<Mask> brute_flats(const RankOracle& O) {
  std::vector<Mask> out;
  for_each_subset(O.ground(), [&](Mask X) {
    const int rx = O.rank(X);
    bool closed = true;
    for_each_element(O.ground() & ~X, [&](int e) {
      if (O.rank(X | element_bit(e)) == rx) closed = false;
    });
    if (closed) out.push_back(X);
  });
  return out;
}

inline std::vector<Mask> brute_flats_of_rank(const RankOracle& O, int k) {
  std::vector<Mask> out;
  for (Mask F : brute_flats(O)) {
    if (O.rank(F) == k) out.push_back(F);
  }
  return out;
}

inline std::vector<Mask> brute_copoints(const RankOracle& O) {
  return brute_flats_of_rank(O, O.rank_full() - 1);
}

inline std::vector<Mask> brute_colines(const RankOracle& O) {
  return brute_flats_of_rank(O, O.rank_full() - 2);
}

/// Full rank-axiom scan: normalized, bounded by cardinality, unit
/// increasing, monotone, submodular. Exponential in pairs of subsets, so
/// keep n small.
inline bool rank_axioms_hold(const RankOracle& O) {
  if (O.rank(0) != 0) return false;
  bool ok = true;
  for_each_subset(O.ground(), [&](Mask X) {
    if (!ok) return;
    const int rx = O.rank(X);
    if (rx < 0 || rx > set_size(X)) ok = false;
    for_each_element(O.ground() & ~X, [&](int e) {
      const int re = O.rank(X | element_bit(e));
      if (re < rx || re > rx + 1) ok = false;
    });
  });
  if (!ok) return false;
  for_each_subset(O.ground(), [&](Mask X) {
    if (!ok) return;
    for_each_subset(O.ground(), [&](Mask Y) {
      if (!ok) return;
      if (O.rank(X | Y) + O.rank(X & Y) > O.rank(X) + O.rank(Y)) ok = false;
    });
  });
  return ok;
}

/// Seeded submodularity spot check for larger ground sets.
inline bool rank_axioms_spot(const RankOracle& O, std::uint64_t seed,
                             int trials) {
  SplitMix64 g(seed);
  for (int t = 0; t < trials; ++t) {
    const Mask X = g.next() & O.ground();
    const Mask Y = g.next() & O.ground();
    if (O.rank(X | Y) + O.rank(X & Y) > O.rank(X) + O.rank(Y)) return false;
    if ((X & ~Y) == 0 && O.rank(X) > O.rank(Y)) return false;
  }
  return true;
}

/// Exhaustive search for a bounding pair presenting the given base family.
inline std::optional<PathPair> find_lpm_with_bases(
    const std::vector<Mask>& bases, int n) {
  std::vector<Mask> want = bases;
  std::sort(want.begin(), want.end());
  for (const PathPair& pair : all_valid_pairs(n)) {
    if (StrongLpm(pair).bases() == want) return pair;
  }
  return std::nullopt;
}

}  // namespace lpm::reference

#endif  // LPM_REFERENCE_HPP
