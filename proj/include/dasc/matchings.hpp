#pragma once

// Perfect matchings on [2n] with edges e_k = (i_k, j_k), i_k < j_k, stored
// sorted by right endpoint so that j_1 < j_2 < ... < j_n = 2n.
//
// The insertion map mh builds a matching from an inversion sequence: step k
// drops the new left endpoint into active space a_k (the space before the
// (a_k+1)-st right endpoint, spaces labeled 0..k-1 with the last one sitting
// after the final vertex) and the new right endpoint at the very end.  Its
// inverse reads off lef(e_k), the number of edges lying entirely to the left
// of e_k.  Difference-d matchings transplant the d-ascent condition onto the
// lef sequence.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // i < j, ascending j

  int size() const { return static_cast<int>(edges.size()); }
  bool operator==(const Matching&) const = default;
};

// Validates a raw edge list as a perfect matching on [2n] and brings it to
// canonical form (endpoints oriented, edges sorted by right endpoint).
inline Matching make_matching(std::vector<std::pair<int, int>> raw) {
  const int n2 = 2 * static_cast<int>(raw.size());
  std::vector<char> seen(n2 + 1, 0);
  for (auto& e : raw) {
    if (e.first > e.second) std::swap(e.first, e.second);
    for (int v : {e.first, e.second}) {
      if (v < 1 || v > n2 || seen[v]) throw precondition_error("matching: endpoints must be [2n], each once");
      seen[v] = 1;
    }
    if (e.first == e.second) throw precondition_error("matching: loop edge");
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return Matching{std::move(raw)};
}

// Number of edges kl with l < i where e_k = ij (1-based edge index).
inline int lef(const Matching& m, int k) {
  if (k < 1 || k > m.size()) throw precondition_error("lef: edge index out of range");
  const int i = m.edges[k - 1].first;
  int c = 0;
  for (const auto& e : m.edges) c += e.second < i;
  return c;
}

inline IntSeq matching_to_inv(const Matching& m) {
  IntSeq out;
  out.reserve(m.size());
  for (int k = 1; k <= m.size(); ++k) out.push_back(lef(m, k));
  return out;
}

inline Matching inv_to_matching(const IntSeq& alpha) {
  if (!is_inversion_sequence(alpha))
    throw precondition_error("inv_to_matching: input is not an inversion sequence");
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k <= static_cast<int>(alpha.size()); ++k) {
    const int a = alpha[k - 1];
    // Space a < k-1 sits just before right endpoint j_{a+1}; space k-1 is
    // after the last vertex 2(k-1).
    const int pos = a < static_cast<int>(edges.size()) ? edges[a].second : 2 * (k - 1) + 1;
    for (auto& e : edges) {
      if (e.first >= pos) ++e.first;
      if (e.second >= pos) ++e.second;
    }
    edges.emplace_back(pos, 2 * k);
  }
  return Matching{std::move(edges)};
}

// All (outer, inner) pairs of 1-based edge indices with i < k < l < j.
inline std::vector<std::pair<int, int>> nestings(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= m.size(); ++a)
    for (int b = 1; b <= m.size(); ++b) {
      if (a == b) continue;
      const auto& outer = m.edges[a - 1];
      const auto& inner = m.edges[b - 1];
      if (outer.first < inner.first && inner.second < outer.second) out.emplace_back(a, b);
    }
  return out;
}

inline std::vector<std::pair<int, int>> left_nestings(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : nestings(m))
    if (m.edges[b - 1].first == m.edges[a - 1].first + 1) out.emplace_back(a, b);
  return out;
}

inline std::vector<std::pair<int, int>> right_nestings(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : nestings(m))
    if (m.edges[a - 1].second == m.edges[b - 1].second + 1) out.emplace_back(a, b);
  return out;
}

// Matching on [2k] induced by the first k edges, endpoints relabeled.
inline Matching restrict_first(const Matching& m, int k) {
  if (k < 0 || k > m.size()) throw precondition_error("restrict_first: k out of range");
  std::vector<int> verts;
  for (int t = 0; t < k; ++t) {
    verts.push_back(m.edges[t].first);
    verts.push_back(m.edges[t].second);
  }
  std::sort(verts.begin(), verts.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()) + 1;
  };
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < k; ++t) edges.emplace_back(rank(m.edges[t].first), rank(m.edges[t].second));
  return Matching{std::move(edges)};
}

// d-displacements: indices k with lef(e_{k+1}) > lef(e_k) - d.
inline int ddis(const Matching& m, int d) { return d_ascent_number(matching_to_inv(m), d); }

// Member of dMch_n: no left nestings and the lef sequence satisfies the
// d-ascent growth bound (lef(e_1) = 0 holds for every matching).
inline bool is_d_matching(const Matching& m, int d) {
  return left_nestings(m).empty() && is_d_ascent_sequence(matching_to_inv(m), d);
}

namespace detail {

template <class F>
void extend_matching(std::vector<std::pair<int, int>>& edges, std::vector<char>& used, int n2,
                     F& emit) {
  int i = 1;
  while (i <= n2 && used[i]) ++i;
  if (i > n2) {
    emit(make_matching(edges));
    return;
  }
  used[i] = 1;
  for (int j = i + 1; j <= n2; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    edges.emplace_back(i, j);
    extend_matching(edges, used, n2, emit);
    edges.pop_back();
    used[j] = 0;
  }
  used[i] = 0;
}

}  // namespace detail

// Visits all (2n-1)!! perfect matchings on [2n].
template <class F>
void for_each_matching(int n, F emit) {
  if (n < 0) throw precondition_error("for_each_matching: n must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(2 * n + 1, 0);
  detail::extend_matching(edges, used, 2 * n, emit);
}

inline std::int64_t count_dMch(int n, int d) {
  std::int64_t c = 0;
  for_each_matching(n, [&](const Matching& m) {
    if (is_d_matching(m, d)) c = checked_add(c, 1);
  });
  return c;
}

}  // namespace dasc
