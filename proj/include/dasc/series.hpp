#pragma once

// Integer-coefficient polynomials in t, u, v, truncated in t.  Arithmetic
// drops every monomial whose t-degree exceeds the truncation order, so all
// identities are checked coefficient-wise up to that order.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dasc/core.hpp"

namespace dasc {

class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw precondition_error("TruncatedSeries: order must be nonnegative");
  }

  static TruncatedSeries monomial(int order, std::int64_t c, int et, int eu = 0, int ev = 0) {
    TruncatedSeries s(order);
    s.add_term(et, eu, ev, c);
    return s;
  }

  int order() const { return order_; }

  std::int64_t coeff(int et, int eu = 0, int ev = 0) const {
    auto it = c_.find({et, eu, ev});
    return it == c_.end() ? 0 : it->second;
  }

  void add_term(int et, int eu, int ev, std::int64_t c) {
    if (et > order_ || c == 0) return;
    auto& slot = c_[{et, eu, ev}];
    slot = checked_add(slot, c);
    if (slot == 0) c_.erase({et, eu, ev});
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (const auto& [e, c] : c_) r.add_term(e[0], e[1], e[2], c);
    for (const auto& [e, c] : o.c_) r.add_term(e[0], e[1], e[2], c);
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(order_);
    for (const auto& [e, c] : c_) r.add_term(e[0], e[1], e[2], -c);
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (const auto& [ea, ca] : c_)
      for (const auto& [eb, cb] : o.c_) {
        if (ea[0] + eb[0] > r.order_) continue;
        r.add_term(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], checked_mul(ca, cb));
      }
    return r;
  }

  // v := 1
  TruncatedSeries subst_v1() const {
    TruncatedSeries r(order_);
    for (const auto& [e, c] : c_) r.add_term(e[0], e[1], 0, c);
    return r;
  }

  // u := u * v
  TruncatedSeries subst_u_uv() const {
    TruncatedSeries r(order_);
    for (const auto& [e, c] : c_) r.add_term(e[0], e[1], e[1] + e[2], c);
    return r;
  }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  // Monomials where the coefficients differ, e.g. "t^2 u^1 v^0: 3 vs 4".
  std::vector<std::string> diff(const TruncatedSeries& o) const {
    std::vector<std::string> out;
    std::map<std::array<int, 3>, std::pair<std::int64_t, std::int64_t>> both;
    for (const auto& [e, c] : c_) both[e].first = c;
    for (const auto& [e, c] : o.c_) both[e].second = c;
    for (const auto& [e, p] : both)
      if (p.first != p.second)
        out.push_back("t^" + std::to_string(e[0]) + " u^" + std::to_string(e[1]) + " v^" +
                      std::to_string(e[2]) + ": " + std::to_string(p.first) + " vs " +
                      std::to_string(p.second));
    return out;
  }

 private:
  int order_;
  std::map<std::array<int, 3>, std::int64_t> c_;
};

}  // namespace dasc
