#pragma once

// Bivincular pattern containment and the active-site insertion map.
//
// A bivincular pattern is a permutation s_1..s_k plus position bars (the
// copy's p-th and (p+1)-st letters must be adjacent in the host) and value
// bars (the host letters playing values v and v+1 must differ by exactly
// one).  sigma_d = (d-1) | d 1 2 ... (d-2) with a value bar on d-2.
//
// A space of a sigma-avoiding permutation is active if inserting the new
// maximum there keeps it avoiding; active spaces are labeled 0,1,... left to
// right.  The map pe inserts k into the active space labeled a_k and is an
// injection from d-ascent sequences into Av_n(sigma_{d+3}).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

using Perm = std::vector<int>;  // one-line notation, a bijection on [n]

struct BivincularPattern {
  Perm perm;
  std::vector<int> pos_adjacent;  // p in [k-1]: copy letters p, p+1 host-adjacent
  std::vector<int> val_adjacent;  // v in [k-1]: letters playing v, v+1 differ by 1

  bool operator==(const BivincularPattern&) const = default;
};

inline bool is_permutation(const Perm& pi) {
  std::vector<char> seen(pi.size() + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline BivincularPattern sigma(int d) {
  if (d < 3) throw precondition_error("sigma: requires d >= 3");
  Perm p{d - 1, d};
  for (int v = 1; v <= d - 2; ++v) p.push_back(v);
  return BivincularPattern{p, {1}, {d - 2}};
}

namespace detail {

template <class F>
bool search_copies(const Perm& pi, const BivincularPattern& pat, std::vector<int>& chosen,
                   F& on_copy) {
  const int k = static_cast<int>(pat.perm.size());
  const int t = static_cast<int>(chosen.size());
  if (t == k) {
    for (int v : pat.val_adjacent) {
      int sv = -1, sv1 = -1;
      for (int s = 0; s < k; ++s) {
        if (pat.perm[s] == v) sv = s;
        if (pat.perm[s] == v + 1) sv1 = s;
      }
      if (pi[chosen[sv1]] != pi[chosen[sv]] + 1) return false;
    }
    return on_copy(const_cast<const std::vector<int>&>(chosen));
  }
  const bool glued = t > 0 && std::find(pat.pos_adjacent.begin(), pat.pos_adjacent.end(), t) !=
                                  pat.pos_adjacent.end();
  const int lo = t == 0 ? 0 : chosen.back() + 1;
  const int hi = glued ? lo : static_cast<int>(pi.size()) - (k - t);
  for (int p = lo; p <= hi && p < static_cast<int>(pi.size()); ++p) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s)
      ok = (pat.perm[s] < pat.perm[t]) == (pi[chosen[s]] < pi[p]);
    if (!ok) continue;
    chosen.push_back(p);
    if (search_copies(pi, pat, chosen, on_copy)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains(const Perm& pi, const BivincularPattern& pat) {
  std::vector<int> chosen;
  auto stop = [](const std::vector<int>&) { return true; };
  return detail::search_copies(pi, pat, chosen, stop);
}

// All copies, as 0-based host position lists in lexicographic order.
inline std::vector<std::vector<int>> find_copies(const Perm& pi, const BivincularPattern& pat) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto keep = [&](const std::vector<int>& c) {
    out.push_back(c);
    return false;
  };
  detail::search_copies(pi, pat, chosen, keep);
  return out;
}

inline Perm insert_at_space(const Perm& pi, int space, int value) {
  Perm out(pi.begin(), pi.begin() + space);
  out.push_back(value);
  out.insert(out.end(), pi.begin() + space, pi.end());
  return out;
}

// Indices of the active spaces of pi (0..n), left to right; the label of an
// active space is its rank in this list.
inline std::vector<int> active_sites(const Perm& pi, const BivincularPattern& pat) {
  if (contains(pi, pat)) throw precondition_error("active_sites: permutation already contains the pattern");
  std::vector<int> out;
  const int n = static_cast<int>(pi.size());
  for (int s = 0; s <= n; ++s)
    if (!contains(insert_at_space(pi, s, n + 1), pat)) out.push_back(s);
  return out;
}

inline int act(const Perm& pi, const BivincularPattern& pat) {
  return static_cast<int>(active_sites(pi, pat).size());
}

inline Perm pe(const IntSeq& alpha, int d) {
  if (d < 0) throw precondition_error("pe: requires d >= 0");
  if (!is_d_ascent_sequence(alpha, d))
    throw precondition_error("pe: input is not a d-ascent sequence");
  const BivincularPattern pat = sigma(d + 3);
  Perm pi;
  for (int k = 1; k <= static_cast<int>(alpha.size()); ++k) {
    const auto sites = active_sites(pi, pat);
    const int a = alpha[k - 1];
    if (a >= static_cast<int>(sites.size()))
      throw precondition_error("pe: no active site with the requested label");
    pi = insert_at_space(pi, sites[a], k);
  }
  return pi;
}

// Brute force over S_n in lexicographic order.
template <class F>
void for_each_Av(int n, const BivincularPattern& pat, F emit) {
  if (n < 0) throw precondition_error("for_each_Av: n must be nonnegative");
  Perm pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    if (!contains(pi, pat)) emit(const_cast<const Perm&>(pi));
  } while (std::next_permutation(pi.begin(), pi.end()));
}

inline std::vector<Perm> enumerate_Av(int n, const BivincularPattern& pat) {
  std::vector<Perm> out;
  for_each_Av(n, pat, [&](const Perm& p) { out.push_back(p); });
  return out;
}

inline std::int64_t count_Av(int n, const BivincularPattern& pat) {
  std::int64_t c = 0;
  for_each_Av(n, pat, [&](const Perm&) { c = checked_add(c, 1); });
  return c;
}

namespace detail {

inline std::int64_t gentree_count(const Perm& pi, int n, const BivincularPattern& pat) {
  if (static_cast<int>(pi.size()) == n) return 1;
  std::int64_t c = 0;
  for (int s : active_sites(pi, pat))
    c = checked_add(c, gentree_count(insert_at_space(pi, s, static_cast<int>(pi.size()) + 1), n, pat));
  return c;
}

}  // namespace detail

// Generating-tree count: grow avoiders by inserting the new maximum at
// active sites.  Valid for the sigma_d family (a broken host adjacency can
// always be repaired by promoting the inserted maximum to the role of d);
// cross-checked against the brute-force count in the test suite.
inline std::int64_t count_Av_gentree(int n, const BivincularPattern& pat) {
  if (n < 0) throw precondition_error("count_Av_gentree: n must be nonnegative");
  return detail::gentree_count(Perm{}, n, pat);
}

}  // namespace dasc
