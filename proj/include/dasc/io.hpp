#pragma once

// Textual and JSON forms of the domain objects.
//
//   sequence   0,1,0,2            (empty sequence = empty string)
//   matrix     1,0,1;0,1,0;0,0,1  (rows joined by ';'; empty matrix = "")
//   matching   1-3,4-5,2-7,6-8    (edges sorted by right endpoint)
//   perm       631254  or  10 3 1 2 ...  (digits up to n = 9, else spaced)
//   pattern    3|412 bar=2        (position bars inline, value bars listed)
//   poset      downmax vector in sequence form
//   tree       ((1,2),3)          (children ordered by minimum leaf)

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dasc/core.hpp"
#include "dasc/duptrees.hpp"
#include "dasc/identities.hpp"
#include "dasc/matchings.hpp"
#include "dasc/matrices.hpp"
#include "dasc/permpat.hpp"
#include "dasc/posets.hpp"

namespace dasc {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_nonneg(const std::string& s) {
  if (s.empty()) throw parse_error("expected a nonnegative integer, got empty field");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("expected a nonnegative integer, got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw parse_error("integer out of range: '" + s + "'");
  }
}

}  // namespace detail

inline std::string format_intseq(const IntSeq& a) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(a[i]);
  }
  return out;
}

inline IntSeq parse_intseq(const std::string& s) {
  IntSeq out;
  if (s.empty()) return out;
  for (const auto& f : detail::split(s, ',')) out.push_back(detail::parse_nonneg(f));
  return out;
}

inline std::string format_matrix(const BinMatrix& M) {
  std::string out;
  for (int i = 0; i < M.dim; ++i) {
    if (i) out.push_back(';');
    for (int j = 0; j < M.dim; ++j) {
      if (j) out.push_back(',');
      out += std::to_string(M.at(i, j));
    }
  }
  return out;
}

inline BinMatrix parse_matrix(const std::string& s) {
  if (s.empty()) return BinMatrix{};
  const auto rows = detail::split(s, ';');
  BinMatrix M = BinMatrix::zero(static_cast<int>(rows.size()));
  for (int i = 0; i < M.dim; ++i) {
    const auto cells = detail::split(rows[i], ',');
    if (static_cast<int>(cells.size()) != M.dim) throw parse_error("matrix is not square");
    for (int j = 0; j < M.dim; ++j) M.at(i, j) = detail::parse_nonneg(cells[j]);
  }
  return M;
}

inline json matrix_to_json(const BinMatrix& M) { return json{{"dim", M.dim}, {"rows", M.rows}}; }

inline std::string format_matching(const Matching& m) {
  std::string out;
  for (size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(m.edges[i].first) + "-" + std::to_string(m.edges[i].second);
  }
  return out;
}

inline Matching parse_matching(const std::string& s) {
  std::vector<std::pair<int, int>> edges;
  if (!s.empty()) {
    for (const auto& f : detail::split(s, ',')) {
      const auto ends = detail::split(f, '-');
      if (ends.size() != 2) throw parse_error("matching edge must look like i-j: '" + f + "'");
      edges.emplace_back(detail::parse_nonneg(ends[0]), detail::parse_nonneg(ends[1]));
    }
  }
  try {
    return make_matching(std::move(edges));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

inline std::string format_perm(const Perm& pi) {
  std::string out;
  const bool spaced = pi.size() > 9;
  for (size_t i = 0; i < pi.size(); ++i) {
    if (i && spaced) out.push_back(' ');
    out += std::to_string(pi[i]);
  }
  return out;
}

inline Perm parse_perm(const std::string& s) {
  Perm pi;
  if (s.find(' ') != std::string::npos) {
    for (const auto& f : detail::split(s, ' '))
      if (!f.empty()) pi.push_back(detail::parse_nonneg(f));
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("permutation must be digits or space-separated: '" + s + "'");
      pi.push_back(c - '0');
    }
  }
  if (!is_permutation(pi)) throw parse_error("not a permutation of [n]: '" + s + "'");
  return pi;
}

inline std::string format_pattern(const BivincularPattern& pat) {
  std::string out;
  for (size_t i = 0; i < pat.perm.size(); ++i) {
    out += std::to_string(pat.perm[i]);
    const int p = static_cast<int>(i) + 1;
    for (int b : pat.pos_adjacent)
      if (b == p) out.push_back('|');
  }
  if (!pat.val_adjacent.empty()) {
    out += " bar=";
    for (size_t i = 0; i < pat.val_adjacent.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(pat.val_adjacent[i]);
    }
  }
  return out;
}

inline BivincularPattern parse_pattern(const std::string& s) {
  BivincularPattern pat;
  std::string body = s;
  const auto barpos = s.find(" bar=");
  if (barpos != std::string::npos) {
    body = s.substr(0, barpos);
    for (const auto& f : detail::split(s.substr(barpos + 5), ','))
      pat.val_adjacent.push_back(detail::parse_nonneg(f));
  }
  for (char c : body) {
    if (c == '|') {
      if (pat.perm.empty()) throw parse_error("pattern bar before any element");
      pat.pos_adjacent.push_back(static_cast<int>(pat.perm.size()));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      pat.perm.push_back(c - '0');
    } else {
      throw parse_error("unexpected character in pattern: '" + std::string(1, c) + "'");
    }
  }
  if (!is_permutation(pat.perm)) throw parse_error("pattern is not a permutation: '" + s + "'");
  const int k = static_cast<int>(pat.perm.size());
  for (int p : pat.pos_adjacent)
    if (p < 1 || p >= k) throw parse_error("pattern position bar out of range");
  for (int v : pat.val_adjacent)
    if (v < 1 || v >= k) throw parse_error("pattern value bar out of range");
  return pat;
}

inline std::string format_poset(const FactorialPoset& P) { return format_intseq(P.downmax); }

inline FactorialPoset parse_poset(const std::string& s) {
  try {
    return make_factorial_poset(parse_intseq(s));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

inline json poset_to_json(const FactorialPoset& P) {
  json cov = json::array();
  for (const auto& [i, j] : covers(P)) cov.push_back(json::array({i, j}));
  return json{{"n", P.size()}, {"downmax", P.downmax}, {"covers", cov}};
}

inline std::string format_tree(const DupTree& t) { return canonical_text(t); }

namespace detail {

inline int parse_tree_rec(const std::string& s, size_t& pos, DupTree& t) {
  if (pos >= s.size()) throw parse_error("tree text ended unexpectedly");
  if (s[pos] == '(') {
    ++pos;
    const int left = parse_tree_rec(s, pos, t);
    if (pos >= s.size() || s[pos] != ',') throw parse_error("tree: expected ','");
    ++pos;
    const int right = parse_tree_rec(s, pos, t);
    if (pos >= s.size() || s[pos] != ')') throw parse_error("tree: expected ')'");
    ++pos;
    t.nodes.push_back({0, left, right});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  std::string num;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num.push_back(s[pos++]);
  if (num.empty()) throw parse_error("tree: expected a leaf label");
  t.nodes.push_back({parse_nonneg(num), -1, -1});
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace detail

inline DupTree parse_tree(const std::string& s) {
  DupTree t;
  size_t pos = 0;
  t.root = detail::parse_tree_rec(s, pos, t);
  if (pos != s.size()) throw parse_error("tree: trailing characters");
  const int n = t.leaf_count();
  std::vector<char> seen(n + 1, 0);
  for (const auto& nd : t.nodes) {
    if (nd.label < 1) continue;
    if (nd.label > n || seen[nd.label]) throw parse_error("tree: leaf labels must be [n], each once");
    seen[nd.label] = 1;
  }
  if (t.is_leaf(t.root)) throw parse_error("tree: must have at least two leaves");
  return t;
}

namespace detail {

inline json tree_node_json(const DupTree& t, int v) {
  if (t.is_leaf(v)) return json{{"leaf", t.nodes[v].label}};
  return json{{"children", json::array({tree_node_json(t, t.nodes[v].left),
                                        tree_node_json(t, t.nodes[v].right)})}};
}

}  // namespace detail

inline json tree_to_json(const DupTree& t) { return detail::tree_node_json(t, t.root); }

inline json report_to_json(const CheckReport& rep) {
  json j{{"identity", rep.identity},
         {"order", rep.order},
         {"status", rep.ok ? "pass" : "fail"},
         {"mismatches", rep.mismatches}};
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

}  // namespace dasc
