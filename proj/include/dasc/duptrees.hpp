#pragma once

// Rooted duplication trees: leaf-labeled rooted binary trees generated from
// the two-leaf tree by tandem duplication events.
//
// phi_{a,r} acts on a tree with n leaves (a >= 0, 1 <= r <= n-a) by
// renumbering leaves in [n-a+1, n] to l+r and turning each leaf l in
// [n-a-r+1, n-a] into the parent of the leaf pair {l, l+r}.  An (a,r) event
// is visible in a tree with n leaves when {l, l-r} is a sibling leaf pair
// for every l in [n-a-r+1, n-a]; each a admits at most one r since leaf n-a
// must have a leaf sibling.  The canonical reduction removes one leaf pair
// of the visible event with largest a; recording those a-parameters down to
// the two-leaf tree yields a bijection with the 2-increasing 2-ascent
// sequences.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

struct DupTree {
  struct Node {
    int label = 0;  // >= 1 for leaves, 0 for internal nodes
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool is_leaf(int v) const { return nodes[v].label >= 1; }

  int leaf_count() const {
    int c = 0;
    for (const auto& nd : nodes) c += nd.label >= 1;
    return c;
  }

  int find_leaf(int label) const {
    for (int v = 0; v < static_cast<int>(nodes.size()); ++v)
      if (nodes[v].label == label) return v;
    return -1;
  }

  int parent_of(int v) const {
    for (int p = 0; p < static_cast<int>(nodes.size()); ++p)
      if (nodes[p].left == v || nodes[p].right == v) return p;
    return -1;
  }
};

// The unique two-leaf tree; its root stands for the rooted edge.
inline DupTree t2() {
  DupTree t;
  t.nodes.push_back({1, -1, -1});
  t.nodes.push_back({2, -1, -1});
  t.nodes.push_back({0, 0, 1});
  t.root = 2;
  return t;
}

namespace detail {

inline std::pair<std::string, int> canonical_rec(const DupTree& t, int v) {
  if (t.is_leaf(v)) return {std::to_string(t.nodes[v].label), t.nodes[v].label};
  auto a = canonical_rec(t, t.nodes[v].left);
  auto b = canonical_rec(t, t.nodes[v].right);
  if (b.second < a.second) std::swap(a, b);
  return {"(" + a.first + "," + b.first + ")", a.second};
}

}  // namespace detail

// Duplication trees are unordered; equality and printing go through this
// form, which orders the children of every node by minimum leaf label.
inline std::string canonical_text(const DupTree& t) {
  if (t.root < 0) throw precondition_error("canonical_text: empty tree");
  return detail::canonical_rec(t, t.root).first;
}

inline bool tree_equal(const DupTree& a, const DupTree& b) {
  return canonical_text(a) == canonical_text(b);
}

// phi_{a,r}.
inline DupTree duplicate(const DupTree& t, int a, int r) {
  const int n = t.leaf_count();
  if (a < 0 || r < 1 || r > n - a)
    throw precondition_error("duplicate: require a >= 0 and 1 <= r <= n-a");
  DupTree out;
  std::function<int(int)> build = [&](int v) -> int {
    const auto& nd = t.nodes[v];
    if (nd.label >= 1) {
      const int l = nd.label;
      if (l > n - a) {
        out.nodes.push_back({l + r, -1, -1});
        return static_cast<int>(out.nodes.size()) - 1;
      }
      if (l >= n - a - r + 1) {
        out.nodes.push_back({l, -1, -1});
        const int c1 = static_cast<int>(out.nodes.size()) - 1;
        out.nodes.push_back({l + r, -1, -1});
        const int c2 = static_cast<int>(out.nodes.size()) - 1;
        out.nodes.push_back({0, c1, c2});
        return static_cast<int>(out.nodes.size()) - 1;
      }
      out.nodes.push_back({l, -1, -1});
      return static_cast<int>(out.nodes.size()) - 1;
    }
    const int lc = build(nd.left);
    const int rc = build(nd.right);
    out.nodes.push_back({0, lc, rc});
    return static_cast<int>(out.nodes.size()) - 1;
  };
  out.root = build(t.root);
  return out;
}

// True when x and y are leaves sharing a parent.
inline bool is_leaf_pair(const DupTree& t, int x, int y) {
  const int vx = t.find_leaf(x);
  const int vy = t.find_leaf(y);
  if (vx < 0 || vy < 0) return false;
  const int p = t.parent_of(vx);
  return p >= 0 && p == t.parent_of(vy);
}

// All visible (a, r) events, sorted by decreasing a (leftmost first).
inline std::vector<std::pair<int, int>> visible_events(const DupTree& t) {
  const int n = t.leaf_count();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= n - 2; ++a) {
    const int l = n - a;  // leaf n-a must have a leaf sibling labeled l - r
    const int vl = t.find_leaf(l);
    const int p = t.parent_of(vl);
    if (p < 0) continue;
    const int sib = t.nodes[p].left == vl ? t.nodes[p].right : t.nodes[p].left;
    if (!t.is_leaf(sib)) continue;
    const int m = t.nodes[sib].label;
    if (m >= l) continue;
    const int r = l - m;
    if (a + 2 * r > n) continue;  // the pre-duplication tree needs r <= (n-r) - a
    bool ok = true;
    for (int ell = n - a - r + 1; ell <= n - a && ok; ++ell) ok = is_leaf_pair(t, ell, ell - r);
    if (ok) out.emplace_back(a, r);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return out;
}

inline std::pair<int, int> leftmost_event(const DupTree& t) {
  auto ev = visible_events(t);
  if (ev.empty()) throw precondition_error("leftmost_event: no visible duplication event");
  return ev.front();
}

namespace detail {

// psi_{a,r}: drop the leaf pair {k-a, k-a-r}, label the parent k-a, then
// shift every leaf label above k-a-r down by one.
inline DupTree reduce_at(const DupTree& t, int a, int r) {
  const int k = t.leaf_count();
  const int hi = k - a, lo = k - a - r;
  DupTree out;
  std::function<int(int)> build = [&](int v) -> int {
    const auto& nd = t.nodes[v];
    if (nd.label >= 1) {
      const int l = nd.label;
      out.nodes.push_back({l > lo ? l - 1 : l, -1, -1});
      return static_cast<int>(out.nodes.size()) - 1;
    }
    const int il = nd.left, ir = nd.right;
    if (t.is_leaf(il) && t.is_leaf(ir)) {
      const int la = t.nodes[il].label, lb = t.nodes[ir].label;
      if ((la == hi && lb == lo) || (la == lo && lb == hi)) {
        out.nodes.push_back({hi - 1, -1, -1});  // hi > lo, so it shifts down
        return static_cast<int>(out.nodes.size()) - 1;
      }
    }
    const int lc = build(il);
    const int rc = build(ir);
    out.nodes.push_back({0, lc, rc});
    return static_cast<int>(out.nodes.size()) - 1;
  };
  out.root = build(t.root);
  return out;
}

}  // namespace detail

// Canonical reduction: one psi step at the leftmost visible event.
inline DupTree reduce(const DupTree& t) {
  if (t.leaf_count() < 3) throw precondition_error("reduce: tree must have at least 3 leaves");
  const auto [a, r] = leftmost_event(t);
  return detail::reduce_at(t, a, r);
}

// alpha(T) = (a_2, ..., a_n) with a_2 := 0 and a_k the a-parameter of the
// leftmost event of the k-leaf tree in the canonical reduction history.
inline IntSeq reduction_sequence(const DupTree& t) {
  const int n = t.leaf_count();
  if (n < 2) throw precondition_error("reduction_sequence: tree must have at least 2 leaves");
  IntSeq alpha(n - 1, 0);
  DupTree cur = t;
  for (int k = n; k >= 3; --k) {
    const auto ev = visible_events(cur);
    if (ev.empty())
      throw precondition_error("reduction_sequence: reduction stalled, not a rooted duplication tree");
    alpha[k - 2] = ev.front().first;
    cur = detail::reduce_at(cur, ev.front().first, ev.front().second);
  }
  return alpha;
}

// Inverse of reduction_sequence on the 2-increasing 2-ascent sequences
// (a_2, ..., a_n); the duplicated-run length r is recovered incrementally.
inline DupTree tree_from_sequence(const IntSeq& alpha) {
  if (alpha.empty() || !is_dI_member(alpha, 2))
    throw precondition_error("tree_from_sequence: input is not a 2-increasing 2-ascent sequence");
  DupTree t = t2();
  int r = 1;
  for (int k = 2; k < static_cast<int>(alpha.size()) + 1; ++k) {
    const int a_prev = alpha[k - 2];
    const int a = alpha[k - 1];
    r = a == a_prev - 1 ? r + 1 : 1;
    // Relabel leaves above k-a-r upward, then give leaf k-a+1 the freed
    // sibling label k-a-r+1.
    for (auto& nd : t.nodes)
      if (nd.label >= 1 && nd.label > k - a - r) ++nd.label;
    const int v = t.find_leaf(k - a + 1);
    if (v < 0) throw std::logic_error("tree_from_sequence: attachment leaf missing");
    const int lbl = t.nodes[v].label;
    t.nodes.push_back({lbl, -1, -1});
    const int c1 = static_cast<int>(t.nodes.size()) - 1;
    t.nodes.push_back({k - a - r + 1, -1, -1});
    const int c2 = static_cast<int>(t.nodes.size()) - 1;
    t.nodes[v] = {0, c1, c2};
  }
  return t;
}

inline std::int64_t count_RDT(int n) {
  if (n < 2) throw precondition_error("count_RDT: requires n >= 2");
  return count_dI(n - 1, 2);
}

inline std::vector<DupTree> enumerate_RDT(int n) {
  if (n < 2) throw precondition_error("enumerate_RDT: requires n >= 2");
  std::vector<DupTree> out;
  for_each_dI(n - 1, 2, [&](const IntSeq& a) { out.push_back(tree_from_sequence(a)); });
  return out;
}

}  // namespace dasc
