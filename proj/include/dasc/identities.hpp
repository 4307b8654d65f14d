#pragma once

// Numeric audits of the counting identities:
//
//   di_n = sum_{k>=1} (-1)^{k-1} C(n-kd+d, k) di_{n-k}
//
// proved by a sign-reversing involution iota on pairs (alpha, S) with alpha
// a d-increasing d-ascent sequence and S a gap->=d subset; the ascent-count
// product series sum_n prod_{i<=n} (1 - (1-t)^i); and the functional
// equation for W(t;u,v) = sum t^n u^{wasc} v^{last} over weak ascent
// sequences:
//
//   [v-1+t(u-1)] W(u,v) = (1+t)(v-1) + tu(1-v^2) - t W(u,1) + t u v^2 W(uv,1).
//
// Each check enumerates the sequences involved and reports mismatches
// instead of assuming the identity.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"
#include "dasc/series.hpp"

namespace dasc {

// Zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

struct CheckReport {
  std::string identity;
  int order = 0;  // largest n or t-order exercised
  bool ok = true;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
};

// Verifies the alternating recursion for di_n against enumerated values for
// every n in [1, N].  Also evaluates the C(n-kd+k, k) binomial variant as a
// negative control and notes where it disagrees.
inline CheckReport dinc_recursion_check(int d, int N) {
  CheckReport rep{"dinc_recursion d=" + std::to_string(d), N, true, {}, {}};
  std::vector<std::int64_t> di(N + 1);
  for (int n = 0; n <= N; ++n) di[n] = count_dI(n, d);
  bool variant_differs = false;
  std::string variant_note;
  for (int n = 1; n <= N; ++n) {
    std::int64_t rhs = 0, rhs_variant = 0;
    for (int k = 1; k <= n; ++k) {
      const std::int64_t sign = k % 2 == 1 ? 1 : -1;
      rhs += sign * checked_mul(binomial(n - static_cast<std::int64_t>(k) * d + d, k), di[n - k]);
      rhs_variant +=
          sign * checked_mul(binomial(n - static_cast<std::int64_t>(k) * d + k, k), di[n - k]);
    }
    if (rhs != di[n]) {
      rep.ok = false;
      rep.mismatches.push_back("n=" + std::to_string(n) + ": recursion gives " +
                               std::to_string(rhs) + ", enumeration gives " +
                               std::to_string(di[n]));
    }
    if (!variant_differs && rhs_variant != di[n]) {
      variant_differs = true;
      variant_note = "C(n-kd+k,k) variant first disagrees at n=" + std::to_string(n) + " (" +
                     std::to_string(rhs_variant) + " vs " + std::to_string(di[n]) + ")";
    }
  }
  if (variant_differs) rep.notes.push_back(variant_note);
  return rep;
}

namespace detail {

using InvPair = std::pair<IntSeq, std::vector<int>>;

// iota: append max(S) when that stays d-increasing, otherwise move the last
// sequence element into S.
inline InvPair iota(const InvPair& p, int d) {
  const auto& [alpha, S] = p;
  if (!S.empty()) {
    const int m = S.back();
    IntSeq beta = alpha;
    beta.push_back(m);
    if (is_dI_member(beta, d)) {
      std::vector<int> T(S.begin(), S.end() - 1);
      return {std::move(beta), std::move(T)};
    }
  }
  if (alpha.empty()) throw std::logic_error("iota: empty sequence with no appendable maximum");
  IntSeq beta(alpha.begin(), alpha.end() - 1);
  std::vector<int> T = S;
  T.insert(std::upper_bound(T.begin(), T.end(), alpha.back()), alpha.back());
  return {std::move(beta), std::move(T)};
}

template <class F>
void gap_subsets(int limit, int k, int d, int from, std::vector<int>& cur, F& emit) {
  if (k == 0) {
    emit(const_cast<const std::vector<int>&>(cur));
    return;
  }
  for (int s = from; s <= limit; ++s) {
    cur.push_back(s);
    gap_subsets(limit, k - 1, d, s + d, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// Materializes all pairs (alpha, S) with alpha in dI_{n-k} and S a size-k
// subset of {0..n-k} whose elements are at least d apart, then checks that
// iota is a fixed-point-free sign-reversing involution, that the class sizes
// match C(n-kd+d, k) * di_{n-k}, and that the signed sum vanishes.
inline CheckReport involution_check(int d, int n) {
  if (d < 1) throw precondition_error("involution_check: requires d >= 1");
  CheckReport rep{"involution d=" + std::to_string(d) + " n=" + std::to_string(n), n, true, {}, {}};
  std::vector<detail::InvPair> pool;
  for (int k = 0; k <= n; ++k) {
    std::vector<detail::InvPair> layer;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto keep = [&](const std::vector<int>& s) { subsets.push_back(s); };
    detail::gap_subsets(n - k, k, d, 0, cur, keep);
    for_each_dI(n - k, d, [&](const IntSeq& a) {
      for (const auto& s : subsets) layer.emplace_back(a, s);
    });
    const std::int64_t expect = checked_mul(binomial(n - static_cast<std::int64_t>(k) * d + d, k),
                                            count_dI(n - k, d));
    if (static_cast<std::int64_t>(layer.size()) != expect) {
      rep.ok = false;
      rep.mismatches.push_back("k=" + std::to_string(k) + ": " + std::to_string(layer.size()) +
                               " pairs, expected " + std::to_string(expect));
    }
    pool.insert(pool.end(), layer.begin(), layer.end());
  }
  std::int64_t signed_sum = 0;
  for (const auto& p : pool) {
    signed_sum += p.second.size() % 2 == 0 ? 1 : -1;
    const auto q = detail::iota(p, d);
    const auto back = detail::iota(q, d);
    const size_t ks = p.second.size(), kq = q.second.size();
    if (back != p)
      rep.mismatches.push_back("iota^2 != id at a pair with k=" + std::to_string(ks));
    if (!(kq == ks + 1 || ks == kq + 1))
      rep.mismatches.push_back("iota does not flip sign at a pair with k=" + std::to_string(ks));
    if (q == p) rep.mismatches.push_back("iota has a fixed point at k=" + std::to_string(ks));
  }
  if (signed_sum != 0) {
    rep.mismatches.push_back("signed sum is " + std::to_string(signed_sum) + ", expected 0");
  }
  rep.ok = rep.ok && rep.mismatches.empty();
  return rep;
}

// Compares the coefficients of sum_{m} prod_{i=1}^m (1 - (1-t)^i) with the
// enumerated ascent-sequence counts up to t-order N.  The m-th product has
// t-valuation m, so the outer sum is cut at m = N.
inline CheckReport ascent_gf_check(int N) {
  if (N < 0 || N > 12) throw precondition_error("ascent_gf_check: order must be in [0, 12]");
  CheckReport rep{"ascent_product_gf", N, true, {}, {}};
  const TruncatedSeries one = TruncatedSeries::monomial(N, 1, 0);
  const TruncatedSeries one_minus_t = one - TruncatedSeries::monomial(N, 1, 1);
  TruncatedSeries total(N);
  TruncatedSeries pow = one;  // (1-t)^i, running
  TruncatedSeries prod = one;
  total = total + prod;  // m = 0 term
  for (int m = 1; m <= N; ++m) {
    pow = pow * one_minus_t;
    prod = prod * (one - pow);
    total = total + prod;
  }
  for (int n = 0; n <= N; ++n) {
    const std::int64_t expect = count_dA(n, 0);
    if (total.coeff(n) != expect) {
      rep.ok = false;
      rep.mismatches.push_back("t^" + std::to_string(n) + ": series gives " +
                               std::to_string(total.coeff(n)) + ", enumeration gives " +
                               std::to_string(expect));
    }
  }
  return rep;
}

// Counts weak ascent sequences by (length, wasc, last element); the empty
// sequence contributes the monomial 1.
inline TruncatedSeries weak_ascent_series(int N) {
  TruncatedSeries W = TruncatedSeries::monomial(N, 1, 0);
  // counts[w][l] for the current length
  std::vector<std::vector<std::int64_t>> cur(N + 2, std::vector<std::int64_t>(N + 2, 0));
  if (N >= 1) {
    cur[0][0] = 1;
    W.add_term(1, 0, 0, 1);
  }
  for (int n = 2; n <= N; ++n) {
    std::vector<std::vector<std::int64_t>> nxt(N + 2, std::vector<std::int64_t>(N + 2, 0));
    for (int w = 0; w <= n - 2; ++w)
      for (int l = 0; l <= n - 1; ++l) {
        if (cur[w][l] == 0) continue;
        for (int x = 0; x <= w + 1; ++x) {
          const int w2 = w + (x >= l);
          nxt[w2][x] = checked_add(nxt[w2][x], cur[w][l]);
        }
      }
    for (int w = 0; w <= n - 1; ++w)
      for (int l = 0; l <= n - 1; ++l)
        if (nxt[w][l] != 0) W.add_term(n, w, l, nxt[w][l]);
    cur = std::move(nxt);
  }
  return W;
}

// Coefficient-wise audit of the W(u,v) functional equation to t-order N.
inline CheckReport weak_gf_check(int N) {
  if (N < 0 || N > 12) throw precondition_error("weak_gf_check: order must be in [0, 12]");
  CheckReport rep{"weak_gf_functional_equation", N, true, {}, {}};
  const TruncatedSeries W = weak_ascent_series(N);
  const TruncatedSeries W1 = W.subst_v1();
  const TruncatedSeries Wuv1 = W1.subst_u_uv();
  auto mono = [&](std::int64_t c, int et, int eu, int ev) {
    return TruncatedSeries::monomial(N, c, et, eu, ev);
  };
  const TruncatedSeries lhs_factor =
      mono(1, 0, 0, 1) - mono(1, 0, 0, 0) + mono(1, 1, 1, 0) - mono(1, 1, 0, 0);
  const TruncatedSeries lhs = lhs_factor * W;
  const TruncatedSeries rhs = (mono(1, 0, 0, 0) + mono(1, 1, 0, 0)) * (mono(1, 0, 0, 1) - mono(1, 0, 0, 0)) +
                              mono(1, 1, 1, 0) * (mono(1, 0, 0, 0) - mono(1, 0, 0, 2)) -
                              mono(1, 1, 0, 0) * W1 + mono(1, 1, 1, 2) * Wuv1;
  rep.mismatches = lhs.diff(rhs);
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace dasc
