#pragma once

// Upper-triangular matrix classes attached to d-ascent sequences.
//
// Rows and columns are indexed 0..m; dim = m+1 and dim = 0 is the empty
// matrix.  A d-matrix (d >= 1) is 0-1 upper triangular, has at least d-1
// zeros between ones in a column, no zero columns, and satisfies
// rmax c_j > rmin c_{j-1} - d for every column j >= 1.  The map mx sends a
// d-ascent sequence to the matrix whose column j collects the rows a_k for
// a_k in factor j of the d-ascent factorization; it is a bijection onto the
// d-matrices with n ones.  The d = 0 analogue factors at every ascent and
// lands in nonnegative-integer matrices instead.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

struct BinMatrix {
  int dim = 0;                         // rows/cols; 0 encodes the empty matrix
  std::vector<std::vector<int>> rows;  // row-major, nonnegative entries

  static BinMatrix zero(int dim) {
    BinMatrix m;
    m.dim = dim;
    m.rows.assign(dim, std::vector<int>(dim, 0));
    return m;
  }

  int at(int i, int j) const { return rows[i][j]; }
  int& at(int i, int j) { return rows[i][j]; }

  bool operator==(const BinMatrix&) const = default;
};

// Smallest and largest row index of a nonzero entry of column j, or nullopt
// for a zero column.
inline std::optional<std::pair<int, int>> rmin_rmax(const BinMatrix& M, int j) {
  if (j < 0 || j >= M.dim) throw precondition_error("rmin_rmax: column index out of range");
  int lo = -1, hi = -1;
  for (int i = 0; i < M.dim; ++i) {
    if (M.at(i, j) != 0) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  if (lo < 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

inline bool is_upper_triangular(const BinMatrix& M) {
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < i; ++j)
      if (M.at(i, j) != 0) return false;
  return true;
}

inline bool has_nonnegative_entries(const BinMatrix& M) {
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j)
      if (M.at(i, j) < 0) return false;
  return true;
}

inline bool is_d_matrix(const BinMatrix& M, int d) {
  if (d < 1) throw precondition_error("is_d_matrix: requires d >= 1");
  if (!is_upper_triangular(M)) return false;
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j)
      if (M.at(i, j) != 0 && M.at(i, j) != 1) return false;
  // (M2): consecutive ones in a column are at least d rows apart.
  for (int j = 0; j < M.dim; ++j) {
    int prev = -1;
    for (int i = 0; i < M.dim; ++i) {
      if (M.at(i, j) == 1) {
        if (prev >= 0 && i - prev - 1 < d - 1) return false;
        prev = i;
      }
    }
  }
  // (M3): no zero columns and the column-linking inequality.
  std::optional<std::pair<int, int>> prev = std::nullopt;
  for (int j = 0; j < M.dim; ++j) {
    auto mm = rmin_rmax(M, j);
    if (!mm) return false;
    if (j > 0 && !(mm->second > prev->first - d)) return false;
    prev = mm;
  }
  return true;
}

// (Ma) + (Mb): nonnegative integer entries, upper triangular, no zero
// columns, rmax c_j > rmin c_{j-1}.
inline bool is_asc_matrix_Mb(const BinMatrix& M) {
  if (!is_upper_triangular(M) || !has_nonnegative_entries(M)) return false;
  std::optional<std::pair<int, int>> prev = std::nullopt;
  for (int j = 0; j < M.dim; ++j) {
    auto mm = rmin_rmax(M, j);
    if (!mm) return false;
    if (j > 0 && !(mm->second > prev->first)) return false;
    prev = mm;
  }
  return true;
}

// (Ma) + (Mc): nonnegative integer entries, upper triangular, no zero rows
// or columns.
inline bool is_dp_matrix(const BinMatrix& M) {
  if (!is_upper_triangular(M) || !has_nonnegative_entries(M)) return false;
  for (int j = 0; j < M.dim; ++j)
    if (!rmin_rmax(M, j)) return false;
  for (int i = 0; i < M.dim; ++i) {
    bool nonzero = false;
    for (int j = 0; j < M.dim; ++j) nonzero = nonzero || M.at(i, j) != 0;
    if (!nonzero) return false;
  }
  return true;
}

namespace detail {

// Shared accumulation rule: column j of the image collects E_{a_k, j} for
// the entries a_k lying in factor j.
inline BinMatrix accumulate_matrix(const IntSeq& alpha, const std::vector<IntSeq>& factors) {
  BinMatrix M = BinMatrix::zero(static_cast<int>(factors.size()));
  size_t k = 0;
  for (size_t j = 0; j < factors.size(); ++j)
    for (size_t t = 0; t < factors[j].size(); ++t, ++k) M.at(alpha[k], static_cast<int>(j)) += 1;
  return M;
}

}  // namespace detail

inline BinMatrix seq_to_matrix(const IntSeq& alpha, int d) {
  if (d < 1) throw precondition_error("seq_to_matrix: requires d >= 1");
  if (!is_d_ascent_sequence(alpha, d))
    throw precondition_error("seq_to_matrix: input is not a d-ascent sequence");
  return detail::accumulate_matrix(alpha, d_ascent_factorization(alpha, d));
}

// d = 0 variant: factors are maximal weakly decreasing runs, entries may
// exceed one.
inline BinMatrix seq_to_matrix_d0(const IntSeq& alpha) {
  if (!is_d_ascent_sequence(alpha, 0))
    throw precondition_error("seq_to_matrix_d0: input is not an ascent sequence");
  return detail::accumulate_matrix(alpha, d_ascent_factorization(alpha, 0));
}

// Inverse of seq_to_matrix: column j, read top to bottom, is factor j in the
// order it was written (factors strictly decrease with gaps >= d).
inline IntSeq matrix_to_seq(const BinMatrix& M, int d) {
  if (!is_d_matrix(M, d)) throw precondition_error("matrix_to_seq: input is not a d-matrix");
  IntSeq alpha;
  for (int j = 0; j < M.dim; ++j)
    for (int i = M.dim - 1; i >= 0; --i)
      if (M.at(i, j) == 1) alpha.push_back(i);
  return alpha;
}

inline std::vector<BinMatrix> enumerate_dMtx(int n, int d) {
  std::vector<BinMatrix> out;
  for_each_dA(n, d, [&](const IntSeq& a) { out.push_back(seq_to_matrix(a, d)); });
  return out;
}

namespace detail {

// All 0-1 upper-triangular matrices of the given dimension with exactly
// `ones` ones, visited by placing ones on the lexicographic cell list.
template <class F>
void place_ones(BinMatrix& M, const std::vector<std::pair<int, int>>& cells, size_t from,
                int ones, F& emit) {
  if (ones == 0) {
    emit(const_cast<const BinMatrix&>(M));
    return;
  }
  if (cells.size() - from < static_cast<size_t>(ones)) return;
  for (size_t c = from; c + ones <= cells.size(); ++c) {
    M.at(cells[c].first, cells[c].second) = 1;
    place_ones(M, cells, c + 1, ones - 1, emit);
    M.at(cells[c].first, cells[c].second) = 0;
  }
}

// All upper-triangular matrices with nonnegative entries summing to `total`.
template <class F>
void place_sum(BinMatrix& M, const std::vector<std::pair<int, int>>& cells, size_t at, int total,
               F& emit) {
  if (at == cells.size()) {
    if (total == 0) emit(const_cast<const BinMatrix&>(M));
    return;
  }
  for (int v = 0; v <= total; ++v) {
    M.at(cells[at].first, cells[at].second) = v;
    place_sum(M, cells, at + 1, total - v, emit);
  }
  M.at(cells[at].first, cells[at].second) = 0;
}

inline std::vector<std::pair<int, int>> upper_cells(int dim) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) cells.emplace_back(i, j);
  return cells;
}

}  // namespace detail

// Generate-and-filter enumeration of the matrix classes, independent of the
// sequence-side maps.  A matrix with n ones (or entry sum n) and no zero
// column has at most n columns, so dimensions range over 0..n.
template <class F>
void for_each_upper01_with_ones(int n, F emit) {
  if (n == 0) {
    BinMatrix empty;
    emit(const_cast<const BinMatrix&>(empty));
    return;
  }
  for (int dim = 1; dim <= n; ++dim) {
    BinMatrix M = BinMatrix::zero(dim);
    auto cells = detail::upper_cells(dim);
    detail::place_ones(M, cells, 0, n, emit);
  }
}

template <class F>
void for_each_upper_with_sum(int n, F emit) {
  if (n == 0) {
    BinMatrix empty;
    emit(const_cast<const BinMatrix&>(empty));
    return;
  }
  for (int dim = 1; dim <= n; ++dim) {
    BinMatrix M = BinMatrix::zero(dim);
    auto cells = detail::upper_cells(dim);
    detail::place_sum(M, cells, 0, n, emit);
  }
}

inline std::int64_t count_dMtx_direct(int n, int d) {
  if (d < 1) throw precondition_error("count_dMtx_direct: requires d >= 1");
  std::int64_t c = 0;
  for_each_upper01_with_ones(n, [&](const BinMatrix& M) {
    if (is_d_matrix(M, d)) c = checked_add(c, 1);
  });
  return c;
}

inline std::int64_t count_Mtx_direct(int n) {
  std::int64_t c = 0;
  for_each_upper_with_sum(n, [&](const BinMatrix& M) {
    if (is_asc_matrix_Mb(M)) c = checked_add(c, 1);
  });
  return c;
}

inline std::int64_t count_MtxPrime_direct(int n) {
  std::int64_t c = 0;
  for_each_upper_with_sum(n, [&](const BinMatrix& M) {
    if (is_dp_matrix(M)) c = checked_add(c, 1);
  });
  return c;
}

}  // namespace dasc
