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

#ifndef LPM_RATIONAL_HPP
#define LPM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/sets.hpp"

namespace lpm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Row-major matrix with exact rational entries.
using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

inline int rows_of(const RatMatrix& a) { return static_cast<int>(a.size()); }
inline int cols_of(const RatMatrix& a) {
  return a.empty() ? 0 : static_cast<int>(a.front().size());
}

/// Rank by fraction-free (Bareiss) elimination; destroys its copy.
inline int bareiss_rank(IntMatrix a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 0;
  const int k = static_cast<int>(a.front().size());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < k && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
    auto& pivot_row = a[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < m; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Int head = row[static_cast<std::size_t>(col)];
      if (head == 0 && prev == 1) continue;
      for (int c = col + 1; c < k; ++c) {
        row[static_cast<std::size_t>(c)] =
            (pivot_row[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)] -
             head * pivot_row[static_cast<std::size_t>(c)]) /
            prev;
      }
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = pivot_row[static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

/// Scales each rational column by the positive lcm of its denominators
/// (rank-preserving) and returns the integer matrix of selected columns.
inline IntMatrix integer_columns(const RatMatrix& a, Mask cols) {
  const int m = rows_of(a);
  const std::vector<int> picked = set_elements(cols);
  IntMatrix out(static_cast<std::size_t>(m),
                std::vector<Int>(picked.size(), Int(0)));
  for (std::size_t idx = 0; idx < picked.size(); ++idx) {
    const int j = picked[idx] - 1;
    Int scale = 1;
    for (int r = 0; r < m; ++r) {
      scale = boost::multiprecision::lcm(
          scale, denominator(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]));
    }
    for (int r = 0; r < m; ++r) {
      const Rat& x = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(r)][idx] =
          numerator(x) * (scale / denominator(x));
    }
  }
  return out;
}

/// Rank of the selected columns of a rational matrix.
inline int column_rank(const RatMatrix& a, Mask cols) {
  if (cols == 0 || rows_of(a) == 0) return 0;
  return bareiss_rank(integer_columns(a, cols));
}

/// In-place reduced row echelon form; returns the pivot column indices.
inline std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  const int m = rows_of(a);
  const int k = cols_of(a);
  int row = 0;
  for (int col = 0; col < k && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(row)]);
    const Rat lead = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int c = col; c < k; ++c) {
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= lead;
    }
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c < k; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Row-space basis: the nonzero rows of the RREF. Row operations do not
/// change the matroid of the columns, so this is the canonical full-row-rank
/// representation of the same matroid.
inline RatMatrix compress_rows(RatMatrix a) {
  const std::vector<int> pivots = rref(a);
  a.resize(pivots.size());
  return a;
}

/// Basis of {x : a x = 0}. Standard back-substitution from the RREF with
/// one free variable set to 1 per basis vector, in free-column order.
inline std::vector<std::vector<Rat>> kernel_basis(RatMatrix a) {
  const int k = cols_of(a);
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(k), Rat(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] =
          -a[r][static_cast<std::size_t>(f)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Primitive integer vector proportional to v, with the last nonzero
/// entry positive. Throws on the zero vector.
inline std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int scale = 1;
  for (const Rat& x : v) scale = boost::multiprecision::lcm(scale, denominator(x));
  std::vector<Int> out(v.size(), Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (scale / denominator(v[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g == 0) throw Error("primitive_integer: zero vector");
  int last_nonzero = -1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] /= g;
    if (out[i] != 0) last_nonzero = static_cast<int>(i);
  }
  if (out[static_cast<std::size_t>(last_nonzero)] < 0) {
    for (Int& x : out) x = -x;
  }
  return out;
}

/// Column-style Hermite normal form of an integer column family, with the
/// unimodular transform tracked so lattice memberships can be expressed
/// over the original columns.
struct ColumnHnf {
  int n = 0;              // vector length (rows)
  int original_cols = 0;  // columns of the input family
  /// Lattice basis: one column per pivot, pivot rows strictly increasing,
  /// pivot entries positive, entries left of a pivot reduced mod pivot.
  std::vector<std::vector<Int>> basis;
  std::vector<int> pivot_rows;  // 0-based
  /// transform[j] = the original-column coefficients of basis column j.
  std::vector<std::vector<Int>> transform;
};

inline ColumnHnf column_hnf(std::vector<std::vector<Int>> cols, int n) {
  ColumnHnf out;
  out.n = n;
  out.original_cols = static_cast<int>(cols.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Int>> u(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    u[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(k), Int(0));
    u[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
  }
  int pc = 0;  // established pivots
  for (int row = 0; row < n && pc < k; ++row) {
    // Collapse all active columns with a nonzero in this row to one.
    while (true) {
      int best = -1, other = -1;
      for (int j = pc; j < k; ++j) {
        const Int& v = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
        if (v == 0) continue;
        if (best < 0) {
          best = j;
        } else {
          // keep the smaller magnitude as the reducer
          if (boost::multiprecision::abs(v) <
              boost::multiprecision::abs(
                  cols[static_cast<std::size_t>(best)][static_cast<std::size_t>(row)])) {
            other = best;
            best = j;
          } else {
            other = j;
          }
          break;
        }
      }
      if (other < 0) break;
      const Int q = cols[static_cast<std::size_t>(other)][static_cast<std::size_t>(row)] /
                    cols[static_cast<std::size_t>(best)][static_cast<std::size_t>(row)];
      for (int r = 0; r < n; ++r) {
        cols[static_cast<std::size_t>(other)][static_cast<std::size_t>(r)] -=
            q * cols[static_cast<std::size_t>(best)][static_cast<std::size_t>(r)];
      }
      for (int r = 0; r < k; ++r) {
        u[static_cast<std::size_t>(other)][static_cast<std::size_t>(r)] -=
            q * u[static_cast<std::size_t>(best)][static_cast<std::size_t>(r)];
      }
    }
    int j = -1;
    for (int jj = pc; jj < k; ++jj) {
      if (cols[static_cast<std::size_t>(jj)][static_cast<std::size_t>(row)] != 0) {
        j = jj;
        break;
      }
    }
    if (j < 0) continue;
    std::swap(cols[static_cast<std::size_t>(j)], cols[static_cast<std::size_t>(pc)]);
    std::swap(u[static_cast<std::size_t>(j)], u[static_cast<std::size_t>(pc)]);
    if (cols[static_cast<std::size_t>(pc)][static_cast<std::size_t>(row)] < 0) {
      for (Int& x : cols[static_cast<std::size_t>(pc)]) x = -x;
      for (Int& x : u[static_cast<std::size_t>(pc)]) x = -x;
    }
    // Reduce earlier columns at this pivot row for a canonical form.
    const Int& pivot = cols[static_cast<std::size_t>(pc)][static_cast<std::size_t>(row)];
    for (int jj = 0; jj < pc; ++jj) {
      Int v = cols[static_cast<std::size_t>(jj)][static_cast<std::size_t>(row)];
      Int q = v / pivot;
      if (v - q * pivot < 0) q -= 1;  // floor division: keep remainder in [0, pivot)
      if (q == 0) continue;
      for (int r = 0; r < n; ++r) {
        cols[static_cast<std::size_t>(jj)][static_cast<std::size_t>(r)] -=
            q * cols[static_cast<std::size_t>(pc)][static_cast<std::size_t>(r)];
      }
      for (int r = 0; r < k; ++r) {
        u[static_cast<std::size_t>(jj)][static_cast<std::size_t>(r)] -=
            q * u[static_cast<std::size_t>(pc)][static_cast<std::size_t>(r)];
      }
    }
    out.pivot_rows.push_back(row);
    ++pc;
  }
  out.basis.assign(cols.begin(), cols.begin() + pc);
  out.transform.assign(u.begin(), u.begin() + pc);
  return out;
}

/// Solves basis * c = f over the integers by forward substitution on the
/// pivot rows. Returns the coefficients over the ORIGINAL column family,
/// or nothing if f is outside the lattice.
inline std::optional<std::vector<Int>> hnf_solve(const ColumnHnf& h,
                                                 const std::vector<Int>& f) {
  std::vector<Int> residual = f;
  std::vector<Int> c(h.basis.size(), Int(0));
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    const int row = h.pivot_rows[i];
    const Int& pivot = h.basis[i][static_cast<std::size_t>(row)];
    const Int& want = residual[static_cast<std::size_t>(row)];
    if (want % pivot != 0) return std::nullopt;
    c[i] = want / pivot;
    if (c[i] != 0) {
      for (int r = row; r < h.n; ++r) {
        residual[static_cast<std::size_t>(r)] -=
            c[i] * h.basis[i][static_cast<std::size_t>(r)];
      }
    }
  }
  for (const Int& x : residual) {
    if (x != 0) return std::nullopt;
  }
  std::vector<Int> coeff(static_cast<std::size_t>(h.original_cols), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < h.original_cols; ++j) {
      coeff[static_cast<std::size_t>(j)] +=
          c[i] * h.transform[i][static_cast<std::size_t>(j)];
    }
  }
  return coeff;
}

}  // namespace lpm

#endif  // LPM_RATIONAL_HPP
