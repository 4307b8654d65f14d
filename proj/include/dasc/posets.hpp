#pragma once

// Factorial posets on [n]: posets satisfying i < j and j <_P k => i <_P k.
// The strict down-set of every element is then an initial interval [m_k], so
// the vector m_1..m_n with 0 <= m_k <= k-1 is a faithful encoding and there
// are exactly n! such posets.  The relation derived from the vector is
// i <_P j iff i <= m_j.
//
// The special poset P_D is a labeled chain i_1 <_P ... <_P i_{D-1} together
// with an incomparable element labeled i_{D-2}+1 where i_{D-2}+1 < i_{D-1}.
// The map po sends a d-ascent sequence to the factorial poset with
// i <_P j iff dasc(alpha_i) < a_j; it is an injection into the special
// P_{d+3}-free factorial posets for d >= 1.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dasc/core.hpp"
#include "dasc/seqcore.hpp"

namespace dasc {

struct FactorialPoset {
  std::vector<int> downmax;  // m_k at index k-1, 0 <= m_k <= k-1

  int size() const { return static_cast<int>(downmax.size()); }
  // Strict order, elements 1-based.
  bool less(int i, int j) const { return i <= downmax[j - 1]; }
  bool operator==(const FactorialPoset&) const = default;
};

inline FactorialPoset make_factorial_poset(std::vector<int> downmax) {
  for (size_t k = 0; k < downmax.size(); ++k)
    if (downmax[k] < 0 || downmax[k] > static_cast<int>(k))
      throw precondition_error("factorial poset: need 0 <= m_k <= k-1");
  return FactorialPoset{std::move(downmax)};
}

// Reflexive relation matrix of P (le[i-1][j-1] means i <=_P j).
inline std::vector<std::vector<bool>> relation_of(const FactorialPoset& P) {
  const int n = P.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) le[i - 1][j - 1] = i == j || P.less(i, j);
  return le;
}

// Checks a reflexive relation matrix for the partial-order axioms (throws if
// violated) and returns the downmax encoding when the poset is factorial,
// nullopt otherwise.
inline std::optional<FactorialPoset> factorial_from_relation(
    const std::vector<std::vector<bool>>& le) {
  const int n = static_cast<int>(le.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(le[i].size()) != n)
      throw precondition_error("factorial_from_relation: relation matrix must be square");
    if (!le[i][i]) throw precondition_error("factorial_from_relation: relation not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i])
        throw precondition_error("factorial_from_relation: relation not antisymmetric");
      if (le[i][j])
        for (int k = 0; k < n; ++k)
          if (le[j][k] && !le[i][k])
            throw precondition_error("factorial_from_relation: relation not transitive");
    }
  // i < j and j <_P k => i <_P k, with all variables 1-based.
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      if (j == k || !le[j - 1][k - 1]) continue;
      for (int i = 1; i < j; ++i)
        if (!(i != k && le[i - 1][k - 1])) return std::nullopt;
    }
  std::vector<int> downmax(n, 0);
  for (int k = 1; k <= n; ++k) {
    int m = 0;
    for (int i = 1; i <= n; ++i)
      if (i != k && le[i - 1][k - 1]) m = i > m ? i : m;
    downmax[k - 1] = m;
  }
  return make_factorial_poset(std::move(downmax));
}

inline bool is_factorial(const std::vector<std::vector<bool>>& le) {
  return factorial_from_relation(le).has_value();
}

// Cover relations i covered-by j of the derived order.
inline std::vector<std::pair<int, int>> covers(const FactorialPoset& P) {
  const int n = P.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !P.less(i, j)) continue;
      bool cover = true;
      for (int k = 1; k <= n && cover; ++k)
        if (k != i && k != j && P.less(i, k) && P.less(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

namespace detail {

inline bool extend_chain(const FactorialPoset& P, std::vector<int>& chain, int target_len) {
  const int n = P.size();
  if (static_cast<int>(chain.size()) == target_len) {
    const int y = chain[target_len - 2];
    const int z = chain[target_len - 1];
    const int x = y + 1;
    if (x >= z) return false;  // isolated element must be labeled below the top
    for (int c : chain)
      if (P.less(c, x) || P.less(x, c)) return false;
    return true;
  }
  for (int nxt = chain.back() + 1; nxt <= n; ++nxt) {
    if (!P.less(chain.back(), nxt)) continue;
    chain.push_back(nxt);
    if (extend_chain(P, chain, target_len)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace detail

// True iff P contains an induced special P_D: a (D-1)-chain plus the element
// one above the chain's penultimate label, incomparable to the whole chain.
inline bool contains_special_P(const FactorialPoset& P, int size_d) {
  if (size_d < 3) throw precondition_error("contains_special_P: requires size_d >= 3");
  const int len = size_d - 1;
  if (P.size() < size_d) return false;
  std::vector<int> chain;
  for (int s = 1; s <= P.size(); ++s) {
    chain.assign(1, s);
    if (detail::extend_chain(P, chain, len)) return true;
  }
  return false;
}

inline FactorialPoset po(const IntSeq& alpha, int d) {
  if (d < 1) throw precondition_error("po: requires d >= 1");
  if (!is_d_ascent_sequence(alpha, d)) throw precondition_error("po: input is not a d-ascent sequence");
  const int n = static_cast<int>(alpha.size());
  std::vector<int> prefix_dasc(n, 0);
  for (int k = 1; k < n; ++k)
    prefix_dasc[k] = prefix_dasc[k - 1] + (alpha[k] > alpha[k - 1] - d);
  // dasc of prefixes weakly increases, so {i : dasc(alpha_i) < a_j} = [m_j].
  std::vector<int> downmax(n, 0);
  for (int j = 0; j < n; ++j) {
    int m = 0;
    while (m < n && prefix_dasc[m] < alpha[j]) ++m;
    downmax[j] = m;
  }
  return make_factorial_poset(std::move(downmax));
}

// Reconstructs alpha element by element: a_k = 0 when k is minimal,
// otherwise dasc(alpha_{m_k}) + 1.  Validates the result by re-applying po.
inline IntSeq po_inverse(const FactorialPoset& P, int d) {
  if (d < 1) throw precondition_error("po_inverse: requires d >= 1");
  const int n = P.size();
  IntSeq alpha;
  std::vector<int> prefix_dasc;
  for (int k = 1; k <= n; ++k) {
    const int m = P.downmax[k - 1];
    alpha.push_back(m == 0 ? 0 : prefix_dasc[m - 1] + 1);
    const int prev = k >= 2 ? prefix_dasc.back() + (alpha[k - 1] > alpha[k - 2] - d) : 0;
    prefix_dasc.push_back(prev);
  }
  if (!is_d_ascent_sequence(alpha, d) || !(po(alpha, d) == P))
    throw precondition_error("po_inverse: poset is not in the image of po for this d");
  return alpha;
}

// Visits all n! factorial posets in lexicographic downmax order.
template <class F>
void for_each_factorial_poset(int n, F emit) {
  if (n < 0) throw precondition_error("for_each_factorial_poset: n must be nonnegative");
  std::vector<int> m(n, 0);
  while (true) {
    emit(FactorialPoset{m});
    int k = n - 1;
    while (k >= 0 && m[k] == k) m[k--] = 0;
    if (k < 0) return;
    ++m[k];
  }
}

inline std::int64_t count_Av_P(int n, int size_d) {
  std::int64_t c = 0;
  for_each_factorial_poset(n, [&](const FactorialPoset& P) {
    if (!contains_special_P(P, size_d)) c = checked_add(c, 1);
  });
  return c;
}

inline std::vector<FactorialPoset> enumerate_Av_P(int n, int size_d) {
  std::vector<FactorialPoset> out;
  for_each_factorial_poset(n, [&](const FactorialPoset& P) {
    if (!contains_special_P(P, size_d)) out.push_back(P);
  });
  return out;
}

}  // namespace dasc
