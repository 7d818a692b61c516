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

#ifndef LPM_LATTICE_PATH_HPP
#define LPM_LATTICE_PATH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/sets.hpp"

namespace lpm {

/// A lattice path: a word over {N, E}. Immutable. The north-prefix
/// function h(k) = number of N-steps among the first k steps is cached at
/// construction; h(0) = 0 and h(k) - h(k-1) is 0 or 1.
class LatticePath {
 public:
  LatticePath() : steps_(), north_prefix_(1, 0) {}

  explicit LatticePath(std::string word) : steps_(std::move(word)) {
    north_prefix_.resize(steps_.size() + 1);
    north_prefix_[0] = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      char c = steps_[i];
      if (c != 'N' && c != 'E') {
        throw ParseError("invalid symbol '" + std::string(1, c) +
                         "' at position " + std::to_string(i + 1) +
                         " (expected 'N' or 'E')");
      }
      north_prefix_[i + 1] = north_prefix_[i] + (c == 'N' ? 1 : 0);
    }
  }

  int length() const { return static_cast<int>(steps_.size()); }

  /// Total number of N-steps, h(n).
  int norths() const { return north_prefix_.back(); }

  /// 1-based step access.
  char step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }
  bool is_north(int i) const { return step(i) == 'N'; }

  /// h(k) for 0 <= k <= n.
  int north_prefix(int k) const {
    return north_prefix_[static_cast<std::size_t>(k)];
  }

  const std::string& word() const { return steps_; }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::string steps_;
  std::vector<int> north_prefix_;
};

inline LatticePath parse_path(std::string_view text) {
  return LatticePath(std::string(text));
}

/// p precedes q: p is south of q (h_p(k) <= h_q(k) for all k) and the two
/// paths have common endpoints (h_p(n) = h_q(n)). Lengths must match.
inline bool precedes(const LatticePath& p, const LatticePath& q) {
  if (p.length() != q.length()) {
    throw InvalidPairError("path length mismatch: " +
                           std::to_string(p.length()) + " vs " +
                           std::to_string(q.length()));
  }
  const int n = p.length();
  if (p.north_prefix(n) != q.north_prefix(n)) return false;
  for (int k = 1; k < n; ++k) {
    if (p.north_prefix(k) > q.north_prefix(k)) return false;
  }
  return true;
}

/// A validated bounding pair p precedes q.
struct PathPair {
  LatticePath p;
  LatticePath q;

  PathPair(LatticePath lower, LatticePath upper)
      : p(std::move(lower)), q(std::move(upper)) {
    if (p.length() != q.length()) {
      throw InvalidPairError("path length mismatch: " +
                             std::to_string(p.length()) + " vs " +
                             std::to_string(q.length()));
    }
    if (p.north_prefix(p.length()) != q.north_prefix(q.length())) {
      throw InvalidPairError("p and q do not have common endpoints");
    }
    if (!precedes(p, q)) {
      throw InvalidPairError("p not south of q");
    }
  }

  int length() const { return p.length(); }
  int norths() const { return p.norths(); }
};

/// All paths r with p <= r <= q, in lexicographic word order (E < N).
/// DFS over steps with corridor pruning: a prefix with h norths extends by
/// a step to h' iff h_p(k+1) <= h' <= h_q(k+1); every branch kept this way
/// completes to at least one valid path, so the cost is output-sensitive.
inline std::vector<LatticePath> enumerate_between(const PathPair& pair) {
  const int n = pair.length();
  std::vector<LatticePath> out;
  std::string word(static_cast<std::size_t>(n), 'E');
  // Iterative DFS; state = (position, norths so far, next step to try).
  struct Frame {
    int h;
    char next;  // 'E' then 'N' then done
  };
  std::vector<Frame> stack;
  stack.push_back({0, 'E'});
  while (!stack.empty()) {
    int k = static_cast<int>(stack.size()) - 1;  // steps placed so far
    if (k == n) {
      out.emplace_back(word);
      stack.pop_back();
      continue;
    }
    Frame& f = stack.back();
    if (f.next == 'E') {
      f.next = 'N';
      int h = f.h;
      if (pair.p.north_prefix(k + 1) <= h && h <= pair.q.north_prefix(k + 1)) {
        word[static_cast<std::size_t>(k)] = 'E';
        stack.push_back({h, 'E'});
      }
    } else if (f.next == 'N') {
      f.next = 0;
      int h = f.h + 1;
      if (pair.p.north_prefix(k + 1) <= h && h <= pair.q.north_prefix(k + 1)) {
        word[static_cast<std::size_t>(k)] = 'N';
        stack.push_back({h, 'E'});
      }
    } else {
      stack.pop_back();
    }
  }
  return out;
}

/// |P[p,q]| by a prefix-count dynamic program over the corridor
/// h_p(k) <= h <= h_q(k), without materializing the paths.
inline std::uint64_t count_between(const PathPair& pair) {
  const int n = pair.length();
  const int m = pair.norths();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k) {
    const int lo = pair.p.north_prefix(k);
    const int hi = pair.q.north_prefix(k);
    for (int h = hi; h >= lo; --h) {
      std::uint64_t total = ways[static_cast<std::size_t>(h)];
      if (h > 0) {
        std::uint64_t with_north = ways[static_cast<std::size_t>(h - 1)];
        if (__builtin_add_overflow(total, with_north, &total)) {
          throw Error("count_between: path count exceeds 64 bits");
        }
      }
      ways[static_cast<std::size_t>(h)] = total;
    }
    if (lo > 0) {
      for (int h = 0; h < lo; ++h) ways[static_cast<std::size_t>(h)] = 0;
    }
  }
  return ways[static_cast<std::size_t>(m)];
}

/// The base associated with a path: the set of positions of its N-steps.
inline Mask path_to_base(const LatticePath& r) {
  if (r.length() > kMaxGround) {
    throw PreconditionError("path_to_base: length beyond " +
                            std::to_string(kMaxGround));
  }
  Mask b = 0;
  for (int j = 1; j <= r.length(); ++j) {
    if (r.is_north(j)) b |= element_bit(j);
  }
  return b;
}

/// Inverse of path_to_base at fixed length n.
inline LatticePath base_to_path(Mask base, int n) {
  if (n < 0 || n > kMaxGround) {
    throw PreconditionError("base_to_path: invalid length " +
                            std::to_string(n));
  }
  require_subset(base, full_mask(n), "base_to_path");
  std::string word(static_cast<std::size_t>(n), 'E');
  for_each_element(base, [&](int j) { word[static_cast<std::size_t>(j - 1)] = 'N'; });
  return LatticePath(std::move(word));
}

/// All 2^n words of length n in lexicographic order (E < N).
inline std::vector<LatticePath> all_paths(int n) {
  std::vector<LatticePath> out;
  out.reserve(std::size_t{1} << n);
  std::string word(static_cast<std::size_t>(n), 'E');
  // Counting in binary with E=0, N=1 on positions read left to right
  // yields lexicographic order.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) {
      word[static_cast<std::size_t>(i)] =
          (code >> (n - 1 - i)) & 1 ? 'N' : 'E';
    }
    out.emplace_back(word);
  }
  return out;
}

/// Every valid pair p <= q of length n, ordered lexicographically by
/// (p.word, q.word). The position in this list is the canonical instance
/// index used to derive per-instance seeds.
inline std::vector<PathPair> all_valid_pairs(int n) {
  std::vector<PathPair> out;
  const std::vector<LatticePath> paths = all_paths(n);
  for (const LatticePath& p : paths) {
    for (const LatticePath& q : paths) {
      if (p.norths() == q.norths() && precedes(p, q)) out.emplace_back(p, q);
    }
  }
  return out;
}

}  // namespace lpm

#endif  // LPM_LATTICE_PATH_HPP
