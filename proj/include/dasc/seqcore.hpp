#pragma once

// d-ascent statistics and the sequence families built on them.
//
// For a sequence a_1 a_2 ... a_n of nonnegative integers and d >= 0,
//   dAsc = { k in [n-1] | a_{k+1} > a_k - d },
// which specializes to ascents (d = 0) and weak ascents (d = 1).
// A d-ascent sequence starts with 0 and each entry exceeds the d-ascent
// count of the preceding prefix by at most one.  A d-increasing sequence
// has every index a d-ascent.

#include <cstdint>
#include <utility>
#include <vector>

#include "dasc/core.hpp"

namespace dasc {

// 1-based positions k with a_{k+1} > a_k - d.
inline std::vector<int> d_ascent_set(const IntSeq& alpha, int d) {
  std::vector<int> out;
  for (int k = 1; k < static_cast<int>(alpha.size()); ++k)
    if (alpha[k] > alpha[k - 1] - d) out.push_back(k);
  return out;
}

inline int d_ascent_number(const IntSeq& alpha, int d) {
  int c = 0;
  for (size_t k = 1; k < alpha.size(); ++k) c += alpha[k] > alpha[k - 1] - d;
  return c;
}

inline bool is_d_ascent_sequence(const IntSeq& alpha, int d) {
  if (alpha.empty()) return true;
  if (alpha[0] != 0) return false;
  int dasc = 0;  // d-ascent count of the prefix ending at k-1
  for (size_t k = 1; k < alpha.size(); ++k) {
    if (alpha[k] < 0 || alpha[k] > 1 + dasc) return false;
    dasc += alpha[k] > alpha[k - 1] - d;
  }
  return true;
}

namespace detail {

template <class F>
void extend_dA(IntSeq& cur, int n, int d, int dasc, F& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(const_cast<const IntSeq&>(cur));
    return;
  }
  if (cur.empty()) {
    cur.push_back(0);
    extend_dA(cur, n, d, 0, emit);
    cur.pop_back();
    return;
  }
  const int last = cur.back();
  for (int x = 0; x <= dasc + 1; ++x) {
    cur.push_back(x);
    extend_dA(cur, n, d, dasc + (x > last - d), emit);
    cur.pop_back();
  }
}

}  // namespace detail

// Visits every element of dA_n in lexicographic order.
template <class F>
void for_each_dA(int n, int d, F emit) {
  if (n < 0 || d < 0) throw precondition_error("for_each_dA: n and d must be nonnegative");
  IntSeq cur;
  cur.reserve(n);
  detail::extend_dA(cur, n, d, 0, emit);
}

inline std::vector<IntSeq> enumerate_dA(int n, int d) {
  std::vector<IntSeq> out;
  for_each_dA(n, d, [&](const IntSeq& a) { out.push_back(a); });
  return out;
}

// Counts by depth-first search without materializing the list.
inline std::int64_t count_dA(int n, int d) {
  std::int64_t c = 0;
  for_each_dA(n, d, [&](const IntSeq&) { c = checked_add(c, 1); });
  return c;
}

// Inversion sequences: 0 <= a_k < k.
inline bool is_inversion_sequence(const IntSeq& alpha) {
  for (size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] < 0 || alpha[i] > static_cast<int>(i)) return false;
  return true;
}

namespace detail {

template <class F>
void extend_I(IntSeq& cur, int n, F& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(const_cast<const IntSeq&>(cur));
    return;
  }
  const int k = static_cast<int>(cur.size());  // next value allowed in [0, k]
  for (int x = 0; x <= k; ++x) {
    cur.push_back(x);
    extend_I(cur, n, emit);
    cur.pop_back();
  }
}

}  // namespace detail

template <class F>
void for_each_I(int n, F emit) {
  if (n < 0) throw precondition_error("for_each_I: n must be nonnegative");
  IntSeq cur;
  cur.reserve(n);
  detail::extend_I(cur, n, emit);
}

inline std::vector<IntSeq> enumerate_I(int n) {
  std::vector<IntSeq> out;
  for_each_I(n, [&](const IntSeq& a) { out.push_back(a); });
  return out;
}

// n! inversion sequences exist.
inline std::int64_t count_I(int n) {
  std::int64_t c = 1;
  for (int k = 2; k <= n; ++k) c = checked_mul(c, k);
  return c;
}

// Every index in [n-1] is a d-ascent.
inline bool is_d_increasing(const IntSeq& alpha, int d) {
  for (size_t k = 1; k < alpha.size(); ++k)
    if (!(alpha[k] > alpha[k - 1] - d)) return false;
  return true;
}

// Membership in dI_n: a_1 = 0 and a_k - d < a_{k+1} <= k.
inline bool is_dI_member(const IntSeq& alpha, int d) {
  if (alpha.empty()) return true;
  if (alpha[0] != 0) return false;
  for (size_t k = 1; k < alpha.size(); ++k) {
    if (alpha[k] < 0) return false;
    if (alpha[k] <= alpha[k - 1] - d || alpha[k] > static_cast<int>(k)) return false;
  }
  return true;
}

namespace detail {

template <class F>
void extend_dI(IntSeq& cur, int n, int d, F& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(const_cast<const IntSeq&>(cur));
    return;
  }
  if (cur.empty()) {
    cur.push_back(0);
    extend_dI(cur, n, d, emit);
    cur.pop_back();
    return;
  }
  const int k = static_cast<int>(cur.size());
  const int lo = cur.back() - d + 1 > 0 ? cur.back() - d + 1 : 0;
  for (int x = lo; x <= k; ++x) {
    cur.push_back(x);
    extend_dI(cur, n, d, emit);
    cur.pop_back();
  }
}

}  // namespace detail

template <class F>
void for_each_dI(int n, int d, F emit) {
  if (n < 0 || d < 0) throw precondition_error("for_each_dI: n and d must be nonnegative");
  IntSeq cur;
  cur.reserve(n);
  detail::extend_dI(cur, n, d, emit);
}

inline std::vector<IntSeq> enumerate_dI(int n, int d) {
  std::vector<IntSeq> out;
  for_each_dI(n, d, [&](const IntSeq& a) { out.push_back(a); });
  return out;
}

inline std::int64_t count_dI(int n, int d) {
  std::int64_t c = 0;
  for_each_dI(n, d, [&](const IntSeq&) { c = checked_add(c, 1); });
  return c;
}

// Splits alpha after every d-ascent into maximal d-ascent-free factors.
// Factor indexing starts at 0; the empty sequence has no factors.
inline std::vector<IntSeq> d_ascent_factorization(const IntSeq& alpha, int d) {
  std::vector<IntSeq> factors;
  IntSeq cur;
  for (size_t k = 0; k < alpha.size(); ++k) {
    cur.push_back(alpha[k]);
    if (k + 1 < alpha.size() && alpha[k + 1] > alpha[k] - d) {
      factors.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) factors.push_back(std::move(cur));
  return factors;
}

}  // namespace dasc
