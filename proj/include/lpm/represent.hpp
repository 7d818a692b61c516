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

#ifndef LPM_REPRESENT_HPP
#define LPM_REPRESENT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/matroid.hpp"
#include "lpm/rational.hpp"
#include "lpm/sets.hpp"
#include "lpm/transversal.hpp"

namespace lpm {

/// Deterministic 64-bit generator; identical output on every platform,
/// which keeps seeded reports byte-identical.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// Mixes a base seed with an instance coordinate, for sweeps where all
/// randomness must flow from one seed flag.
inline std::uint64_t instance_seed(std::uint64_t base, int n, std::uint64_t index) {
  SplitMix64 g(base ^ (static_cast<std::uint64_t>(n) << 48) ^ index);
  return g.next();
}

/// An exact rational matrix realizing a strong LPM: entry (i,j) may be
/// nonzero only when j lies in the level interval A_i, and the rank of
/// every checked column subset equals the matroid rank.
struct RationalRepresentation {
  StrongLpm lpm;
  RatMatrix matrix;  // rank_total() x n
  std::uint64_t seed = 0;
  bool verified = false;
};

/// First subset (if any) where the column rank disagrees with the matroid
/// rank. Checks all 2^n subsets when n <= 14; beyond that it checks all
/// singletons and pairs, all circuits (when enumerable within budget),
/// all copoint complements, and 10,000 seeded random subsets.
inline std::optional<Mask> verify_representation(const RatMatrix& mat,
                                                 const StrongLpm& M,
                                                 std::uint64_t seed = 0) {
  const int n = M.n();
  auto bad = [&](Mask X) { return column_rank(mat, X) != M.rank_of(X); };
  if (n <= 14) {
    std::optional<Mask> failing;
    for_each_subset(M.ground(), [&](Mask X) {
      if (!failing && bad(X)) failing = X;
    });
    return failing;
  }
  for (int e = 1; e <= n; ++e) {
    if (bad(element_bit(e))) return element_bit(e);
    for (int f = e + 1; f <= n; ++f) {
      if (bad(element_bit(e) | element_bit(f))) {
        return element_bit(e) | element_bit(f);
      }
    }
  }
  // Circuits: minimal dependent sets, all of size <= rank + 1. Enumerated
  // only while the candidate count stays within budget.
  const int r = M.rank_total();
  double candidates = 0;
  {
    double c = 1;
    for (int s = 1; s <= r + 1; ++s) {
      c = c * (n - s + 1) / s;
      candidates += c;
    }
  }
  if (candidates < 4e6) {
    std::optional<Mask> failing;
    for (int s = 2; s <= r + 1 && !failing; ++s) {
      for_each_subset_of_size(n, s, [&](Mask X) {
        if (failing) return;
        if (M.rank_of(X) == s) return;  // independent
        bool minimal = true;
        for_each_element(X, [&](int e) {
          Mask Y = X & ~element_bit(e);
          if (M.rank_of(Y) != set_size(Y)) minimal = false;
        });
        if (minimal && bad(X)) failing = X;
      });
    }
    if (failing) return failing;
  }
  if (n <= 20) {
    RankOracle O = oracle_from(M);
    for (Mask H : copoints(O)) {
      if (bad(M.ground() & ~H)) return M.ground() & ~H;
    }
  }
  SplitMix64 g(seed ^ 0xC0FFEE5EEDull);
  for (int t = 0; t < 10000; ++t) {
    Mask X = g.next() & M.ground();
    if (bad(X)) return X;
  }
  return std::nullopt;
}

/// Seeded generic representation on the presentation pattern: entries are
/// uniform integers in [1, 2^20] drawn row-major, verified, reseeding
/// deterministically (seed+1) up to 32 attempts. A failed draw is
/// reported, never silently accepted.
inline RationalRepresentation synthesize_representation(const StrongLpm& M,
                                                        std::uint64_t seed) {
  std::optional<Mask> last_failure;
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    const std::uint64_t s = seed + attempt;
    SplitMix64 g(s);
    RatMatrix mat(static_cast<std::size_t>(M.rank_total()),
                  std::vector<Rat>(static_cast<std::size_t>(M.n()), Rat(0)));
    for (int i = 1; i <= M.rank_total(); ++i) {
      for (int j = M.lo(i); j <= M.hi(i); ++j) {
        const std::uint64_t draw = 1 + (g.next() & ((1ull << 20) - 1));
        mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
            Rat(static_cast<long long>(draw));
      }
    }
    last_failure = verify_representation(mat, M, s);
    if (!last_failure) {
      return RationalRepresentation{M, std::move(mat), s, true};
    }
  }
  throw RepresentationError(
      "representation verification exhausted after 32 reseeds; last failing "
      "subset " +
      set_to_string(*last_failure));
}

/// Wraps an explicitly given matrix, verifying it against the matroid.
inline RationalRepresentation representation_from_matrix(const StrongLpm& M,
                                                         RatMatrix mat) {
  if (rows_of(mat) != M.rank_total() || (M.rank_total() > 0 && cols_of(mat) != M.n())) {
    throw RepresentationError("representation matrix has wrong shape");
  }
  if (auto failing = verify_representation(mat, M)) {
    throw RepresentationError("matrix does not realize the matroid; rank of " +
                              set_to_string(*failing) + " disagrees");
  }
  return RationalRepresentation{M, std::move(mat), 0, true};
}

/// Columns selected by `keep`, in order.
inline RatMatrix restrict_columns(const RatMatrix& a, Mask keep) {
  RatMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (int j : set_elements(keep)) {
      out[r].push_back(a[r][static_cast<std::size_t>(j - 1)]);
    }
  }
  return out;
}

/// Linear contraction of the columns in C: eliminate so the span of C's
/// columns is carried by a set of pivot rows, then drop those rows and the
/// C columns. The remaining columns represent the contraction minor on the
/// surviving elements (order preserved).
inline RatMatrix contract_columns(RatMatrix a, Mask contracted) {
  const int m = rows_of(a);
  const int n = cols_of(a);
  std::vector<bool> used_row(static_cast<std::size_t>(m), false);
  for (int j : set_elements(contracted)) {
    const std::size_t col = static_cast<std::size_t>(j - 1);
    int piv = -1;
    for (int r = 0; r < m; ++r) {
      if (!used_row[static_cast<std::size_t>(r)] && a[static_cast<std::size_t>(r)][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;  // dependent on earlier contracted columns
    used_row[static_cast<std::size_t>(piv)] = true;
    const Rat lead = a[static_cast<std::size_t>(piv)][col];
    for (int r = 0; r < m; ++r) {
      if (r == piv) continue;
      const Rat f = a[static_cast<std::size_t>(r)][col] / lead;
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)];
      }
    }
  }
  RatMatrix out;
  for (int r = 0; r < m; ++r) {
    if (used_row[static_cast<std::size_t>(r)]) continue;
    std::vector<Rat> row;
    for (int c = 0; c < n; ++c) {
      if (contains(contracted, c + 1)) continue;
      row.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// Representation of the minor (contract C, delete D), rows compressed to
/// a full-row-rank basis. Surviving columns keep their relative order,
/// matching the order-preserving relabeling of minor oracles.
inline RatMatrix minor_representation(const RatMatrix& a, Mask deleted,
                                      Mask contracted, int n) {
  RatMatrix quotient = contract_columns(a, contracted);
  const Mask survivors_of_contraction = full_mask(n) & ~contracted;
  const Mask keep_after = squeeze_bits(full_mask(n) & ~(deleted | contracted),
                                       survivors_of_contraction);
  return compress_rows(restrict_columns(quotient, keep_after));
}

}  // namespace lpm

#endif  // LPM_REPRESENT_HPP
