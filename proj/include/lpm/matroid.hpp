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

#ifndef LPM_MATROID_HPP
#define LPM_MATROID_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/sets.hpp"
#include "lpm/transversal.hpp"

namespace lpm {

/// A matroid given by its rank function on bitmask subsets of {1..n}.
/// Everything structural below is generic over this type; the function is
/// expected to satisfy the rank axioms (enforced by property tests, not
/// at construction).
struct RankOracle {
  int n = 0;
  std::function<int(Mask)> rank;

  Mask ground() const { return full_mask(n); }
  int rank_full() const { return rank(ground()); }
};

/// Oracle view of a strong LPM (shares the matroid by value; copies are
/// cheap and keep the oracle self-contained).
inline RankOracle oracle_from(const StrongLpm& M) {
  auto shared = std::make_shared<const StrongLpm>(M);
  return RankOracle{shared->n(),
                    [shared](Mask X) { return shared->rank_of(X); }};
}

inline Mask closure(const RankOracle& O, Mask X) {
  require_subset(X, O.ground(), "closure");
  const int rx = O.rank(X);
  Mask cl = X;
  for_each_element(O.ground() & ~X, [&](int e) {
    if (O.rank(X | element_bit(e)) == rx) cl |= element_bit(e);
  });
  return cl;
}

inline Mask loops(const RankOracle& O) {
  Mask out = 0;
  for_each_element(O.ground(), [&](int e) {
    if (O.rank(element_bit(e)) == 0) out |= element_bit(e);
  });
  return out;
}

inline Mask coloops(const RankOracle& O) {
  Mask out = 0;
  const int r = O.rank_full();
  for_each_element(O.ground(), [&](int e) {
    if (O.rank(O.ground() & ~element_bit(e)) == r - 1) out |= element_bit(e);
  });
  return out;
}

/// Pairs {j,k} of non-loops with rank {j,k} = 1, j < k.
inline std::vector<std::pair<int, int>> parallel_pairs(const RankOracle& O) {
  std::vector<std::pair<int, int>> out;
  const Mask nonloops = O.ground() & ~loops(O);
  const std::vector<int> elems = set_elements(nonloops);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (O.rank(element_bit(elems[a]) | element_bit(elems[b])) == 1) {
        out.emplace_back(elems[a], elems[b]);
      }
    }
  }
  return out;
}

/// Flats grouped by rank, level k holding the closed sets of rank k.
/// Built by closure ascent from cl(empty), not by scanning all subsets.
inline std::vector<std::vector<Mask>> flats_by_rank(const RankOracle& O) {
  std::vector<std::vector<Mask>> levels;
  const int r = O.rank_full();
  std::set<Mask> current{closure(O, 0)};
  levels.emplace_back(current.begin(), current.end());
  for (int k = 0; k < r; ++k) {
    std::set<Mask> next;
    for (Mask F : current) {
      for_each_element(O.ground() & ~F, [&](int e) {
        next.insert(closure(O, F | element_bit(e)));
      });
    }
    current = std::move(next);
    levels.emplace_back(current.begin(), current.end());
  }
  return levels;
}

/// Hyperplanes: closed sets of rank r-1, sorted by mask.
inline std::vector<Mask> copoints(const RankOracle& O) {
  std::vector<std::vector<Mask>> levels = flats_by_rank(O);
  if (levels.size() < 2) return {};
  return levels[levels.size() - 2];
}

enum class CopointKind { simple, multiple };

/// A coline with its copoints classified: copoint Y on W is simple when
/// |Y \ W| = 1, multiple otherwise; the coline is quite simple when the
/// simple copoints on it outnumber the multiple ones.
struct ColineReport {
  Mask coline = 0;
  std::vector<std::pair<Mask, CopointKind>> copoints;
  int simple_count = 0;
  int multiple_count = 0;
  bool quite_simple = false;
};

/// Classifies the copoints on a coline W. W must be a closed set of rank
/// r-2. The copoints on W are the closures of W + one element; they
/// partition the complement of W.
inline ColineReport coline_report(const RankOracle& O, Mask W) {
  require_subset(W, O.ground(), "coline_report");
  const int r = O.rank_full();
  if (O.rank(W) != r - 2) {
    throw PreconditionError("coline_report: set has rank " +
                            std::to_string(O.rank(W)) + ", expected " +
                            std::to_string(r - 2));
  }
  if (closure(O, W) != W) {
    throw PreconditionError("coline_report: set " + set_to_string(W) +
                            " is not closed");
  }
  ColineReport rep;
  rep.coline = W;
  std::set<Mask> seen;
  for_each_element(O.ground() & ~W, [&](int e) {
    seen.insert(closure(O, W | element_bit(e)));
  });
  for (Mask Y : seen) {
    CopointKind kind =
        set_size(Y & ~W) == 1 ? CopointKind::simple : CopointKind::multiple;
    rep.copoints.emplace_back(Y, kind);
    (kind == CopointKind::simple ? rep.simple_count : rep.multiple_count)++;
  }
  rep.quite_simple = rep.simple_count > rep.multiple_count;
  return rep;
}

struct ColineScan {
  std::vector<ColineReport> colines;
  bool rank_deficient = false;  // rank < 2: there are no colines
};

/// Every coline (closed set of rank r-2) with its classified copoints.
inline ColineScan colines(const RankOracle& O) {
  ColineScan scan;
  if (O.rank_full() < 2) {
    scan.rank_deficient = true;
    return scan;
  }
  std::vector<std::vector<Mask>> levels = flats_by_rank(O);
  for (Mask W : levels[levels.size() - 3]) {
    scan.colines.push_back(coline_report(O, W));
  }
  return scan;
}

inline RankOracle dual(const RankOracle& O) {
  const int r = O.rank_full();
  const Mask ground = O.ground();
  auto base = O.rank;
  return RankOracle{O.n, [base, r, ground](Mask X) {
                      return set_size(X) + base(ground & ~X) - r;
                    }};
}

/// Restriction to ground \ S; survivors are relabeled order-preservingly
/// to {1..n-|S|}.
inline RankOracle deletion(const RankOracle& O, Mask S) {
  require_subset(S, O.ground(), "deletion");
  const Mask keep = O.ground() & ~S;
  auto base = O.rank;
  return RankOracle{set_size(keep), [base, keep](Mask X) {
                      return base(spread_bits(X, keep));
                    }};
}

/// Contraction of S; survivors are relabeled order-preservingly.
inline RankOracle contraction(const RankOracle& O, Mask S) {
  require_subset(S, O.ground(), "contraction");
  const Mask keep = O.ground() & ~S;
  const int rs = O.rank(S);
  auto base = O.rank;
  return RankOracle{set_size(keep), [base, keep, S, rs](Mask X) {
                      return base(spread_bits(X, keep) | S) - rs;
                    }};
}

/// Direct sum; the second ground set is relabeled to {n1+1 .. n1+n2}.
inline RankOracle direct_sum(const RankOracle& A, const RankOracle& B) {
  if (A.n + B.n > kMaxGround) {
    throw PreconditionError("direct_sum: combined ground set exceeds " +
                            std::to_string(kMaxGround));
  }
  const int n1 = A.n;
  const Mask g1 = A.ground();
  auto ra = A.rank;
  auto rb = B.rank;
  return RankOracle{A.n + B.n, [ra, rb, g1, n1](Mask X) {
                      return ra(X & g1) + rb(X >> n1);
                    }};
}

/// Loop removal plus parallel-class collapse. Keeps the least-index
/// representative of each parallel class.
struct Simplification {
  RankOracle oracle;
  /// old element -> old representative element; 0 for loops.
  std::vector<int> representative;
  /// old element -> id in the simplified ground set; 0 if dropped.
  std::vector<int> new_id;
  /// new id -> old representative element.
  std::vector<int> kept;
};

inline Simplification simplify(const RankOracle& O) {
  const Mask loop_set = loops(O);
  std::vector<int> representative(static_cast<std::size_t>(O.n) + 1, 0);
  std::vector<int> reps;
  for_each_element(O.ground() & ~loop_set, [&](int e) {
    for (int r : reps) {
      if (O.rank(element_bit(r) | element_bit(e)) == 1) {
        representative[static_cast<std::size_t>(e)] = r;
        return;
      }
    }
    reps.push_back(e);
    representative[static_cast<std::size_t>(e)] = e;
  });
  Mask keep = 0;
  for (int r : reps) keep |= element_bit(r);
  Simplification out{deletion(O, O.ground() & ~keep), std::move(representative),
                     std::vector<int>(static_cast<std::size_t>(O.n) + 1, 0),
                     std::vector<int>{0}};
  int next = 0;
  for (int r : reps) {
    out.new_id[static_cast<std::size_t>(r)] = ++next;
    out.kept.push_back(r);
  }
  // Non-representatives map through their representative.
  for (int e = 1; e <= O.n; ++e) {
    int r = out.representative[static_cast<std::size_t>(e)];
    if (r != 0) out.new_id[static_cast<std::size_t>(e)] = out.new_id[static_cast<std::size_t>(r)];
  }
  return out;
}

/// Path-level dual: swap N and E in both paths and exchange their roles.
/// Complementing a base complements its N-step set, and swapping reverses
/// the south-of order, so the result presents the dual matroid (checked
/// against the rank-level dual by tests rather than assumed).
inline StrongLpm lpm_dual_paths(const StrongLpm& M) {
  auto swap_word = [](const std::string& w) {
    std::string out = w;
    for (char& c : out) c = (c == 'N') ? 'E' : 'N';
    return out;
  };
  LatticePath new_p(swap_word(M.pair().q.word()));
  LatticePath new_q(swap_word(M.pair().p.word()));
  return StrongLpm(PathPair(std::move(new_p), std::move(new_q)));
}

/// Path-level direct sum: concatenate the bounding paths. Paths through
/// the combined corridor are forced through the common endpoint, so the
/// base family is the product family.
inline StrongLpm lpm_concat(const StrongLpm& A, const StrongLpm& B) {
  LatticePath new_p(A.pair().p.word() + B.pair().p.word());
  LatticePath new_q(A.pair().q.word() + B.pair().q.word());
  return StrongLpm(PathPair(std::move(new_p), std::move(new_q)));
}

}  // namespace lpm

#endif  // LPM_MATROID_HPP
