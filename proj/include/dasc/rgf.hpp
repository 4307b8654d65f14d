#pragma once

// Restricted growth functions: r_1 = 0 and r_{k+1} <= 1 + max(rho_k).
// They encode set partitions of [n], so there are Bell-number many.
//
// rp sends an RGF to the factorial poset with i <_P j iff max(rho_i) < r_j
// and is a bijection onto the special P_3-free factorial posets; its inverse
// reads r_k = 0 for minimal k and max(rho_{M(k)}) + 1 otherwise.  Two more
// classical encodings are included: the value-class permutation (landing in
// the avoiders of the vincular pattern 23|1) and the consecutive-index 0-1
// matrix.

#include <cstdint>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/matrices.hpp"
#include "dasc/permpat.hpp"
#include "dasc/posets.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

inline bool is_rgf(const IntSeq& rho) {
  if (rho.empty()) return true;
  if (rho[0] != 0) return false;
  int mx = 0;
  for (size_t k = 1; k < rho.size(); ++k) {
    if (rho[k] < 0 || rho[k] > mx + 1) return false;
    mx = rho[k] > mx ? rho[k] : mx;
  }
  return true;
}

namespace detail {

template <class F>
void extend_rgf(IntSeq& cur, int n, int mx, F& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(const_cast<const IntSeq&>(cur));
    return;
  }
  if (cur.empty()) {
    cur.push_back(0);
    extend_rgf(cur, n, 0, emit);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= mx + 1; ++x) {
    cur.push_back(x);
    extend_rgf(cur, n, x > mx ? x : mx, emit);
    cur.pop_back();
  }
}

}  // namespace detail

template <class F>
void for_each_RGF(int n, F emit) {
  if (n < 0) throw precondition_error("for_each_RGF: n must be nonnegative");
  IntSeq cur;
  cur.reserve(n);
  detail::extend_rgf(cur, n, 0, emit);
}

inline std::vector<IntSeq> enumerate_RGF(int n) {
  std::vector<IntSeq> out;
  for_each_RGF(n, [&](const IntSeq& r) { out.push_back(r); });
  return out;
}

inline std::int64_t count_RGF(int n) {
  std::int64_t c = 0;
  for_each_RGF(n, [&](const IntSeq&) { c = checked_add(c, 1); });
  return c;
}

inline FactorialPoset rp(const IntSeq& rho) {
  if (!is_rgf(rho)) throw precondition_error("rp: input is not a restricted growth function");
  const int n = static_cast<int>(rho.size());
  std::vector<int> prefix_max(n, 0);
  for (int k = 1; k < n; ++k) prefix_max[k] = rho[k] > prefix_max[k - 1] ? rho[k] : prefix_max[k - 1];
  // Prefix maxima weakly increase, so {i : max(rho_i) < r_j} = [m_j].
  std::vector<int> downmax(n, 0);
  for (int j = 0; j < n; ++j) {
    int m = 0;
    while (m < n && prefix_max[m] < rho[j]) ++m;
    downmax[j] = m;
  }
  return make_factorial_poset(std::move(downmax));
}

inline IntSeq rp_inverse(const FactorialPoset& P) {
  const int n = P.size();
  IntSeq rho;
  int mx = 0;
  std::vector<int> prefix_max;
  for (int k = 1; k <= n; ++k) {
    const int m = P.downmax[k - 1];
    rho.push_back(m == 0 ? 0 : prefix_max[m - 1] + 1);
    mx = k == 1 ? 0 : (rho.back() > mx ? rho.back() : mx);
    prefix_max.push_back(mx);
  }
  if (!is_rgf(rho) || !(rp(rho) == P))
    throw precondition_error("rp_inverse: poset is not special P_3-free");
  return rho;
}

// For each value v = 0,1,2,... in turn, append the positions carrying v in
// decreasing order.  The image avoids the vincular pattern 23|1.
inline Perm claesson_perm(const IntSeq& rho) {
  if (!is_rgf(rho)) throw precondition_error("claesson_perm: input is not a restricted growth function");
  const int n = static_cast<int>(rho.size());
  int mx = -1;
  for (int r : rho) mx = r > mx ? r : mx;
  Perm pi;
  pi.reserve(n);
  for (int v = 0; v <= mx; ++v)
    for (int p = n; p >= 1; --p)
      if (rho[p - 1] == v) pi.push_back(p);
  return pi;
}

inline BivincularPattern claesson_pattern() { return BivincularPattern{{2, 3, 1}, {2}, {}}; }

// n x n strictly upper-triangular 0-1 matrix with rows and columns indexed
// by [n] (unlike the 0-indexed d-matrices): each adjacent pair of positions
// inside a value class contributes a one.
inline BinMatrix rgf_to_binmatrix(const IntSeq& rho) {
  if (!is_rgf(rho)) throw precondition_error("rgf_to_binmatrix: input is not a restricted growth function");
  const int n = static_cast<int>(rho.size());
  BinMatrix M = BinMatrix::zero(n);
  int mx = -1;
  for (int r : rho) mx = r > mx ? r : mx;
  for (int v = 0; v <= mx; ++v) {
    int prev = 0;
    for (int p = 1; p <= n; ++p) {
      if (rho[p - 1] != v) continue;
      if (prev > 0) M.at(prev - 1, p - 1) = 1;
      prev = p;
    }
  }
  return M;
}

}  // namespace dasc
