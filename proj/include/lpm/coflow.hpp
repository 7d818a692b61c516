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

#ifndef LPM_COFLOW_HPP
#define LPM_COFLOW_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/matroid.hpp"
#include "lpm/rational.hpp"
#include "lpm/represent.hpp"
#include "lpm/sets.hpp"
#include "lpm/structure.hpp"
#include "lpm/transversal.hpp"

namespace lpm {

/// One representative cocircuit per copoint H: the sign pattern of the
/// (projectively unique) linear functional vanishing on the columns of H.
/// The functional is stored primitive with its last nonzero coefficient
/// positive, which fixes the representative deterministically.
struct SignedCocircuit {
  Mask copoint = 0;
  Mask support = 0;   // complement of the copoint
  Mask positive = 0;
  Mask negative = 0;
  std::vector<Int> functional;

  std::vector<int> characteristic(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for_each_element(positive, [&](int e) { out[static_cast<std::size_t>(e - 1)] = 1; });
    for_each_element(negative, [&](int e) { out[static_cast<std::size_t>(e - 1)] = -1; });
    return out;
  }
};

/// Extracts the signed cocircuits of a representation with full row rank,
/// one per given copoint. Throws RepresentationError if a functional
/// vanishes off its copoint (degenerate matrix).
inline std::vector<SignedCocircuit> signed_cocircuits(
    const RatMatrix& rep, const std::vector<Mask>& cps, int n) {
  const int m = rows_of(rep);
  std::vector<SignedCocircuit> out;
  out.reserve(cps.size());
  for (Mask H : cps) {
    // Kernel of the transposed copoint columns: y with y . col_j = 0 for
    // every j in H.
    RatMatrix system;
    for (int j : set_elements(H)) {
      std::vector<Rat> row(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        row[static_cast<std::size_t>(i)] =
            rep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      }
      system.push_back(std::move(row));
    }
    if (system.empty()) system.emplace_back(static_cast<std::size_t>(m), Rat(0));
    std::vector<std::vector<Rat>> kernel = kernel_basis(std::move(system));
    if (kernel.size() != 1) {
      throw RepresentationError(
          "copoint " + set_to_string(H) + " does not determine a unique "
          "functional (kernel dimension " + std::to_string(kernel.size()) + ")");
    }
    SignedCocircuit c;
    c.copoint = H;
    c.functional = primitive_integer(kernel.front());
    for (int e = 1; e <= n; ++e) {
      if (contains(H, e)) continue;
      Rat value = 0;
      for (int i = 0; i < m; ++i) {
        value += Rat(c.functional[static_cast<std::size_t>(i)]) *
                 rep[static_cast<std::size_t>(i)][static_cast<std::size_t>(e - 1)];
      }
      if (value > 0) {
        c.positive |= element_bit(e);
      } else if (value < 0) {
        c.negative |= element_bit(e);
      } else {
        throw RepresentationError("functional of copoint " + set_to_string(H) +
                                  " vanishes at element " + std::to_string(e) +
                                  " outside it");
      }
    }
    c.support = c.positive | c.negative;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<SignedCocircuit> signed_cocircuits(
    const RationalRepresentation& R) {
  RankOracle O = oracle_from(R.lpm);
  return signed_cocircuits(R.matrix, copoints(O), R.lpm.n());
}

/// The integer lattice generated by the characteristic vectors of the
/// signed cocircuits (one representative per copoint; negations add
/// nothing to the span).
struct CoflowLattice {
  int n = 0;
  std::vector<SignedCocircuit> cocircuits;
  std::vector<std::vector<int>> characteristic;
  ColumnHnf hnf;
};

inline CoflowLattice make_coflow_lattice(std::vector<SignedCocircuit> cocircuits,
                                         int n) {
  CoflowLattice L;
  L.n = n;
  L.cocircuits = std::move(cocircuits);
  std::vector<std::vector<Int>> cols;
  for (const SignedCocircuit& c : L.cocircuits) {
    L.characteristic.push_back(c.characteristic(n));
    std::vector<Int> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = L.characteristic.back()[static_cast<std::size_t>(i)];
    cols.push_back(std::move(col));
  }
  L.hnf = column_hnf(std::move(cols), n);
  return L;
}

inline CoflowLattice coflow_lattice(const RationalRepresentation& R) {
  return make_coflow_lattice(signed_cocircuits(R), R.lpm.n());
}

/// An integer vector in the coflow lattice together with the coefficient
/// witness over the cocircuit list.
struct Coflow {
  std::vector<int> values;
  std::vector<Int> coefficients;
};

struct CoflowWitness {
  bool member = false;
  std::vector<Int> coefficients;
};

/// Decides lattice membership by the Hermite-normal-form solve; returns
/// the coefficient witness when the vector is a coflow.
inline CoflowWitness is_coflow(const std::vector<int>& F,
                               const CoflowLattice& L) {
  std::vector<Int> f(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) f[i] = F[i];
  if (auto coeff = hnf_solve(L.hnf, f)) {
    return CoflowWitness{true, std::move(*coeff)};
  }
  return CoflowWitness{false, {}};
}

// Witness vectors are compared entrywise under 0 < 1 < -1 < 2 < -2 < ...
// (magnitude first, positive before negative), lexicographically over the
// elements, after normalizing the global sign so the first nonzero entry
// is positive; the lattice is closed under negation, so the normalization
// never loses a witness.
inline int entry_order_key(int v) {
  return v == 0 ? 0 : 2 * std::abs(v) - (v > 0 ? 1 : 0);
}

inline bool vector_order_less(const std::vector<int>& a,
                              const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int ka = entry_order_key(a[i]);
    const int kb = entry_order_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

inline void canonicalize_sign(std::vector<int>& F) {
  for (int v : F) {
    if (v > 0) return;
    if (v < 0) break;
  }
  for (int& v : F) v = -v;
}

/// First {0,+-1} vector with exactly one or two nonzero entries that lies
/// in the lattice, in the documented witness order; nothing if none exists.
inline std::optional<Coflow> small_support_coflow(const CoflowLattice& L) {
  std::vector<std::vector<int>> candidates;
  for (int j = 1; j <= L.n; ++j) {
    std::vector<int> v(static_cast<std::size_t>(L.n), 0);
    v[static_cast<std::size_t>(j - 1)] = 1;
    candidates.push_back(v);
    for (int k = j + 1; k <= L.n; ++k) {
      for (int sk : {1, -1}) {
        std::vector<int> w = v;
        w[static_cast<std::size_t>(k - 1)] = sk;
        candidates.push_back(std::move(w));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), vector_order_less);
  for (std::vector<int>& F : candidates) {
    CoflowWitness w = is_coflow(F, L);
    if (w.member) return Coflow{std::move(F), std::move(w.coefficients)};
  }
  return std::nullopt;
}

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a - q * b < 0) q -= 1;  // b > 0 here
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a - q * b > 0) q += 1;
  return q;
}

}  // namespace detail

/// Complete deterministic search of the lattice box {f : 0 < |f(e)| <=
/// bound}: coefficients are enumerated in the triangular order given by
/// the HNF pivots, pruning each row as soon as it is finalized. Returns
/// the least candidate in the documented witness order.
inline std::optional<std::vector<int>> bounded_nowhere_zero(
    const ColumnHnf& h, int n, int bound) {
  if (n == 0) return std::vector<int>{};
  const int k = static_cast<int>(h.basis.size());
  if (k == 0) return std::nullopt;
  if (h.pivot_rows.front() != 0) return std::nullopt;  // leading rows stay zero
  std::optional<std::vector<int>> best;
  std::vector<Int> value(static_cast<std::size_t>(n), Int(0));
  auto consider = [&](const std::vector<Int>& v) {
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] =
          static_cast<int>(v[static_cast<std::size_t>(i)].convert_to<long long>());
    }
    canonicalize_sign(f);
    if (!best || vector_order_less(f, *best)) best = std::move(f);
  };
  auto rows_ok = [&](const std::vector<Int>& v, int from, int to) {
    for (int r = from; r < to; ++r) {
      const Int& x = v[static_cast<std::size_t>(r)];
      if (x == 0 || x > bound || x < -bound) return false;
    }
    return true;
  };
  // Recursive lambda over pivot columns.
  auto dfs = [&](auto&& self, int i, std::vector<Int>& v) -> void {
    if (i == k) {
      consider(v);
      return;
    }
    const int row = h.pivot_rows[static_cast<std::size_t>(i)];
    const int next = i + 1 < k ? h.pivot_rows[static_cast<std::size_t>(i + 1)] : n;
    const Int& pivot = h.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
    const Int lo = detail::ceil_div(Int(-bound) - v[static_cast<std::size_t>(row)], pivot);
    const Int hi = detail::floor_div(Int(bound) - v[static_cast<std::size_t>(row)], pivot);
    for (Int c = lo; c <= hi; ++c) {
      std::vector<Int> w = v;
      if (c != 0) {
        for (int r = row; r < n; ++r) {
          w[static_cast<std::size_t>(r)] +=
              c * h.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        }
      }
      if (rows_ok(w, row, next)) self(self, i + 1, w);
    }
  };
  dfs(dfs, 0, value);
  return best;
}

/// A machine-checkable 3-colorability certificate: a nowhere-zero coflow
/// with entries in {+-1, +-2}, its lattice-membership coefficients, and
/// the verified flags.
struct ThreeColorCertificate {
  std::vector<int> coflow;
  std::vector<Int> coefficients;
  int max_abs = 0;
  bool verified = false;
};

namespace detail {

inline std::string falsification_artifact(const StrongLpm& M,
                                          std::uint64_t seed,
                                          const std::string& search) {
  return std::string("{\"p\":\"") + M.pair().p.word() + "\",\"q\":\"" +
         M.pair().q.word() + "\",\"seed\":" + std::to_string(seed) +
         ",\"search\":\"" + search + "\"}";
}

}  // namespace detail

inline ThreeColorCertificate nowhere_zero_3_coflow(
    const StrongLpm& M, const RationalRepresentation& R) {
  if (loops_fast(M) != 0) {
    throw UndefinedError("nowhere-zero coflow undefined: matroid has a loop");
  }
  CoflowLattice L = coflow_lattice(R);
  std::optional<std::vector<int>> F = bounded_nowhere_zero(L.hnf, M.n(), 2);
  if (!F) {
    throw FalsificationError(
        "no nowhere-zero coflow with entries in {-2,-1,1,2} exists for this "
        "orientation",
        detail::falsification_artifact(M, R.seed,
                                       "complete box search, bound 2"));
  }
  ThreeColorCertificate cert;
  cert.coflow = std::move(*F);
  CoflowWitness w = is_coflow(cert.coflow, L);
  if (!w.member) {
    throw Error("internal: search result failed membership re-verification");
  }
  cert.coefficients = std::move(w.coefficients);
  for (int v : cert.coflow) cert.max_abs = std::max(cert.max_abs, std::abs(v));
  cert.verified = true;
  return cert;
}

/// Whether a nowhere-zero coflow with |F(e)| <= k-1 exists.
inline bool chromatic_upper(const StrongLpm& M, const RationalRepresentation& R,
                            int k) {
  if (loops_fast(M) != 0) {
    throw UndefinedError("chromatic number undefined on loops");
  }
  if (M.n() == 0) return true;
  if (k < 2) return false;
  CoflowLattice L = coflow_lattice(R);
  return bounded_nowhere_zero(L.hnf, M.n(), k - 1).has_value();
}

/// Least k >= 2 admitting a nowhere-zero coflow with entries below k in
/// magnitude.
inline int chromatic_number(const StrongLpm& M,
                            const RationalRepresentation& R) {
  if (loops_fast(M) != 0) {
    throw UndefinedError("chromatic number undefined on loops");
  }
  CoflowLattice L = coflow_lattice(R);
  for (int k = 2; k <= 2 * M.n() + 2; ++k) {
    if (M.n() == 0 || bounded_nowhere_zero(L.hnf, M.n(), k - 1)) return k;
  }
  throw FalsificationError(
      "no nowhere-zero coflow found up to bound " + std::to_string(2 * M.n() + 1),
      detail::falsification_artifact(M, R.seed, "chromatic number search"));
}

/// Verifies a quite simple coline's local consequence: some {0,+-1} coflow
/// with exactly one or two nonzero entries exists. W must be (the caller's
/// verified) quite simple coline in the simplification of M; this is
/// re-checked here. Exhaustion of the bounded candidate set is a theory
/// violation and throws.
inline Coflow qsc_local_coflow(const StrongLpm& M,
                               const RationalRepresentation& R, Mask W) {
  RankOracle O = oracle_from(M);
  Simplification S = simplify(O);
  Mask W_image = 0;
  for_each_element(W, [&](int e) {
    const int id = S.new_id[static_cast<std::size_t>(e)];
    if (id != 0) W_image |= element_bit(id);
  });
  ColineReport report = coline_report(S.oracle, W_image);
  if (!report.quite_simple) {
    throw PreconditionError("qsc_local_coflow: " + set_to_string(W) +
                            " is not a quite simple coline of the "
                            "simplification");
  }
  CoflowLattice L = coflow_lattice(R);
  if (auto found = small_support_coflow(L)) return *found;
  throw FalsificationError(
      "no {0,+-1} coflow with one or two nonzero entries exists despite a "
      "quite simple coline",
      detail::falsification_artifact(M, R.seed, "1-2 support search"));
}

/// Per-minor record of the generalized-series-parallel check.
struct GspMinorRecord {
  Mask deleted = 0;
  Mask contracted = 0;
  int minor_size = 0;
  int simple_size = 0;
  std::vector<int> coflow;
};

struct GspReport {
  bool all_pass = false;
  int minors_total = 0;
  int nontrivial_checked = 0;
  int trivial_skipped = 0;
  std::vector<GspMinorRecord> records;
};

/// Enumerates every minor (disjoint delete/contract pairs, both in
/// increasing mask order), simplifies it, and finds a {0,+-1} coflow with
/// one or two nonzero entries in the induced representation of each
/// nonempty simplification. A failing minor throws FalsificationError.
inline GspReport gsp_check(const StrongLpm& M, const RationalRepresentation& R,
                           int budget = 10) {
  if (M.n() > budget) {
    throw PreconditionError("gsp_check: n = " + std::to_string(M.n()) +
                            " exceeds budget " + std::to_string(budget));
  }
  GspReport report;
  RankOracle O = oracle_from(M);
  const Mask ground = M.ground();
  for_each_subset(ground, [&](Mask D) {
    for_each_subset(ground & ~D, [&](Mask C) {
      ++report.minors_total;
      RankOracle after_contraction = contraction(O, C);
      const Mask survivors = ground & ~C;
      RankOracle minor = deletion(after_contraction, squeeze_bits(D, survivors));
      Simplification S = simplify(minor);
      if (S.oracle.n == 0) {
        ++report.trivial_skipped;
        return;
      }
      ++report.nontrivial_checked;
      RatMatrix minor_rep = minor_representation(R.matrix, D, C, M.n());
      Mask kept_mask = 0;
      for (std::size_t i = 1; i < S.kept.size(); ++i) {
        kept_mask |= element_bit(S.kept[i]);
      }
      RatMatrix simple_rep =
          compress_rows(restrict_columns(minor_rep, kept_mask));
      CoflowLattice L = make_coflow_lattice(
          signed_cocircuits(simple_rep, copoints(S.oracle), S.oracle.n),
          S.oracle.n);
      std::optional<Coflow> found = small_support_coflow(L);
      if (!found) {
        throw FalsificationError(
            "minor (delete " + set_to_string(D) + ", contract " +
                set_to_string(C) + ") admits no 1-2 support {0,+-1} coflow",
            detail::falsification_artifact(M, R.seed, "gsp minor sweep"));
      }
      report.records.push_back(GspMinorRecord{D, C, minor.n, S.oracle.n,
                                              std::move(found->values)});
    });
  });
  report.all_pass = true;
  return report;
}

}  // namespace lpm

#endif  // LPM_COFLOW_HPP
