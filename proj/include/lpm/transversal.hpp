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

#ifndef LPM_TRANSVERSAL_HPP
#define LPM_TRANSVERSAL_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/sets.hpp"

namespace lpm {

/// How much cross-checking constructors and structural operations do.
/// `oracle` re-derives results from first principles where an exhaustive
/// check is affordable and throws on any disagreement.
enum class Validation { fast, oracle };

/// Level sets computed from the defining property directly: A_i collects
/// every j such that some path r between p and q takes its i-th N-step at
/// step j. Exponential; used to validate the closed-form intervals.
inline std::vector<Mask> presentation_by_enumeration(const PathPair& pair) {
  std::vector<Mask> levels(static_cast<std::size_t>(pair.norths()), 0);
  for (const LatticePath& r : enumerate_between(pair)) {
    int seen = 0;
    for (int j = 1; j <= r.length(); ++j) {
      if (r.is_north(j)) {
        levels[static_cast<std::size_t>(seen)] |= element_bit(j);
        ++seen;
      }
    }
  }
  return levels;
}

/// The transversal matroid M[p,q] presented by the level sets A_1..A_m on
/// the ground set {1..n}, n = |p|. Each A_i is the contiguous interval
/// [position of i-th N in q, position of i-th N in p]; equivalently
/// A_i = {j : h_p(j-1) < i <= h_q(j)}. Independence is decided by maximum
/// bipartite matching between elements and levels (augmenting paths).
class StrongLpm {
 public:
  explicit StrongLpm(PathPair pair, Validation level = Validation::fast)
      : pair_(std::move(pair)),
        n_(pair_.length()),
        m_(pair_.norths()) {
    if (n_ > kMaxGround) {
      throw PreconditionError("ground set larger than " +
                              std::to_string(kMaxGround) + " is not supported");
    }
    lo_.resize(static_cast<std::size_t>(m_));
    hi_.resize(static_cast<std::size_t>(m_));
    int ip = 0, iq = 0;
    for (int j = 1; j <= n_; ++j) {
      if (pair_.q.is_north(j)) lo_[static_cast<std::size_t>(iq++)] = j;
      if (pair_.p.is_north(j)) hi_[static_cast<std::size_t>(ip++)] = j;
    }
    // Feasible level range of element j: h_p(j-1) < i <= h_q(j).
    level_lo_.resize(static_cast<std::size_t>(n_) + 1);
    level_hi_.resize(static_cast<std::size_t>(n_) + 1);
    for (int j = 1; j <= n_; ++j) {
      level_lo_[static_cast<std::size_t>(j)] = pair_.p.north_prefix(j - 1) + 1;
      level_hi_[static_cast<std::size_t>(j)] = pair_.q.north_prefix(j);
    }
    if (level == Validation::oracle && n_ <= 10) {
      const std::vector<Mask> reference = presentation_by_enumeration(pair_);
      for (int i = 1; i <= m_; ++i) {
        Mask interval = 0;
        for (int j = lo(i); j <= hi(i); ++j) interval |= element_bit(j);
        if (interval != reference[static_cast<std::size_t>(i - 1)]) {
          throw Error("presentation interval A_" + std::to_string(i) +
                      " disagrees with the path-enumeration semantics");
        }
      }
    }
  }

  int n() const { return n_; }
  /// Number of level sets; equals the rank of the whole ground set.
  int rank_total() const { return m_; }
  const PathPair& pair() const { return pair_; }
  Mask ground() const { return full_mask(n_); }

  /// 1-based interval bounds of A_i.
  int lo(int i) const { return lo_[static_cast<std::size_t>(i - 1)]; }
  int hi(int i) const { return hi_[static_cast<std::size_t>(i - 1)]; }
  bool in_level(int j, int i) const { return lo(i) <= j && j <= hi(i); }

  std::vector<std::pair<int, int>> level_intervals() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int i = 1; i <= m_; ++i) out.emplace_back(lo(i), hi(i));
    return out;
  }

  bool is_independent(Mask X) const {
    require_subset(X, ground(), "is_independent");
    MatchState st;
    Mask rest = X;
    while (rest) {
      int e = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      Mask visited = 0;
      if (!augment(e, visited, st)) return false;
    }
    return true;
  }

  /// Size of a maximum matching between X and the level sets.
  int rank_of(Mask X) const {
    require_subset(X, ground(), "rank");
    MatchState st;
    int matched = 0;
    Mask rest = X;
    while (rest) {
      int e = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      Mask visited = 0;
      if (augment(e, visited, st)) ++matched;
    }
    return matched;
  }

  /// The base family via the path bijection, deduplicated and sorted by
  /// increasing bitmask. Intended for desk scale.
  std::vector<Mask> bases() const {
    std::vector<Mask> out;
    for (const LatticePath& r : enumerate_between(pair_)) {
      out.push_back(path_to_base(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct MatchState {
    std::array<int, kMaxGround> element_of_level;  // 0 = unmatched
    MatchState() { element_of_level.fill(0); }
  };

  bool augment(int e, Mask& visited_levels, MatchState& st) const {
    const int a = level_lo_[static_cast<std::size_t>(e)];
    const int b = level_hi_[static_cast<std::size_t>(e)];
    for (int i = a; i <= b; ++i) {
      const Mask bit = Mask{1} << (i - 1);
      if (visited_levels & bit) continue;
      visited_levels |= bit;
      int& owner = st.element_of_level[static_cast<std::size_t>(i - 1)];
      if (owner == 0 || augment(owner, visited_levels, st)) {
        owner = e;
        return true;
      }
    }
    return false;
  }

  PathPair pair_;
  int n_;
  int m_;
  std::vector<int> lo_, hi_;
  std::vector<int> level_lo_, level_hi_;
};

inline StrongLpm build_lpm(const PathPair& pair,
                           Validation level = Validation::fast) {
  return StrongLpm(pair, level);
}

/// Text rendering of the presentation staircase: one row per level set
/// (top level first), each interval drawn at horizontal offset j - i so
/// the picture matches the lattice diagram of the corridor.
inline std::string corridor_diagram(const StrongLpm& M) {
  if (M.rank_total() == 0) return "(rank 0: no level sets)\n";
  int cell = M.n() >= 10 ? 3 : 2;
  std::string out;
  for (int i = M.rank_total(); i >= 1; --i) {
    std::string row(static_cast<std::size_t>((M.lo(i) - i) * cell), ' ');
    for (int j = M.lo(i); j <= M.hi(i); ++j) {
      std::string label = std::to_string(j);
      row += std::string(static_cast<std::size_t>(cell) - label.size(), ' ');
      row += label;
    }
    out += "A_" + std::to_string(i) + " |" + row + "\n";
  }
  return out;
}

}  // namespace lpm

#endif  // LPM_TRANSVERSAL_HPP
