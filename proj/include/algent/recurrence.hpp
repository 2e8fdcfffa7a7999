#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algent/expr.hpp"
#include "algent/upoly.hpp"

namespace algent {

// s_N = c_1 s_{N-1} + ... + c_L s_{N-L}
struct Recurrence {
  std::size_t order = 0;
  std::vector<Rat> coeffs;

  // t^L - c_1 t^{L-1} - ... - c_L
  RatPolynomial characteristic_polynomial() const {
    std::vector<Rat> c(order + 1);
    c[order] = 1;
    for (std::size_t i = 0; i < order; ++i) c[order - 1 - i] = -coeffs[i];
    return RatPolynomial(std::move(c));
  }
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

namespace detail {

// Berlekamp-Massey over Q. Returns the connection polynomial coefficients
// (1, c_1, ..., c_L) and fills `orders` with the linear complexity of every
// prefix.
inline std::pair<std::vector<Rat>, std::size_t> berlekamp_massey(const std::vector<Rat>& s, std::vector<std::size_t>* orders) {
  std::vector<Rat> c{Rat(1)}, b{Rat(1)};
  std::size_t l = 0, m = 1;
  Rat bd(1);
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rat d = s[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
    } else {
      Rat coef = d / bd;
      std::vector<Rat> t = c;
      if (c.size() < b.size() + m) c.resize(b.size() + m, Rat(0));
      for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
      if (2 * l <= n) {
        l = n + 1 - l;
        b = std::move(t);
        bd = d;
        m = 1;
      } else {
        ++m;
      }
    }
    if (orders) orders->push_back(l);
  }
  c.resize(l + 1, Rat(0));
  return {std::move(c), l};
}

}  // namespace detail

inline std::vector<Rat> to_rationals(const std::vector<Int>& v) {
  return {v.begin(), v.end()};
}

// Minimal-order linear recurrence generating the whole prefix.
inline Recurrence minimal_recurrence(const std::vector<Rat>& seq) {
  if (seq.empty()) throw DomainError("minimal_recurrence needs at least one term");
  auto [conn, l] = detail::berlekamp_massey(seq, nullptr);
  Recurrence r;
  r.order = l;
  for (std::size_t i = 1; i <= l; ++i) r.coeffs.push_back(-conn[i]);
  return r;
}

inline bool verify_recurrence(const std::vector<Rat>& seq, const Recurrence& rec) {
  if (seq.size() <= rec.order) throw DomainError("sequence must be longer than the recurrence order");
  for (std::size_t n = rec.order; n < seq.size(); ++n) {
    Rat v(0);
    for (std::size_t i = 0; i < rec.order; ++i) v += rec.coeffs[i] * seq[n - 1 - i];
    if (v != seq[n]) return false;
  }
  return true;
}

// (prefix length, minimal order) for prefix lengths 2..len.
inline std::vector<std::pair<std::size_t, std::size_t>> recurrence_order_profile(const std::vector<Rat>& seq) {
  std::vector<std::size_t> orders;
  detail::berlekamp_massey(seq, &orders);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t len = 2; len <= seq.size(); ++len) out.emplace_back(len, orders[len - 1]);
  return out;
}

// Longest run of equal orders at the end of the profile.
inline std::size_t final_plateau_length(const std::vector<std::pair<std::size_t, std::size_t>>& profile) {
  if (profile.empty()) return 0;
  std::size_t run = 1;
  for (std::size_t i = profile.size() - 1; i > 0 && profile[i - 1].second == profile[i].second; --i) ++run;
  return run;
}

// Longest run of equal orders anywhere in the profile after `start_len`.
inline std::size_t longest_plateau_after(const std::vector<std::pair<std::size_t, std::size_t>>& profile, std::size_t start_len) {
  std::size_t best = 0, run = 0;
  std::size_t prev = static_cast<std::size_t>(-1);
  for (const auto& [len, ord] : profile) {
    if (len < start_len) continue;
    run = (ord == prev) ? run + 1 : 1;
    prev = ord;
    best = std::max(best, run);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Piecewise-linear integer recurrences a_n = F(a_{n-1}, ..., a_{n-k}) with F
// built from max, min, +, -, and integer scaling.

class PLRecurrence {
 public:
  // Lag variable `lag_names[i]` stands for a_{n-1-i}. Default names a1..ak.
  PLRecurrence(std::size_t arity, ParseNode expr, std::vector<std::string> lag_names = {})
      : arity_(arity), expr_(std::move(expr)), names_(std::move(lag_names)) {
    if (arity_ == 0) throw DomainError("PL recurrence needs arity at least 1");
    if (names_.empty())
      for (std::size_t i = 1; i <= arity_; ++i) names_.push_back("a" + std::to_string(i));
    if (names_.size() != arity_) throw DomainError("lag name count must equal the arity");
    check(expr_);
  }

  static PLRecurrence parse(std::size_t arity, std::string_view src, std::vector<std::string> lag_names = {}) {
    return PLRecurrence(arity, parse_expression(src, {.allow_calls = true, .implicit_coefficients = true}), std::move(lag_names));
  }

  std::size_t arity() const { return arity_; }
  const std::vector<std::string>& lag_names() const { return names_; }

  // lags[i] = a_{n-1-i}
  Int apply(const std::vector<Int>& lags) const { return eval(expr_, lags); }

 private:
  std::size_t lag_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DomainError("unknown lag variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }

  static bool is_constant(const ParseNode& n) {
    switch (n.kind) {
      case ParseNode::Kind::kNumber:
        return true;
      case ParseNode::Kind::kNeg:
        return is_constant(n.children[0]);
      default:
        return false;
    }
  }

  void check(const ParseNode& n) const {
    using K = ParseNode::Kind;
    switch (n.kind) {
      case K::kNumber:
        return;
      case K::kVariable:
        lag_index(n.name);
        return;
      case K::kMul:
        if (!is_constant(n.children[0]) && !is_constant(n.children[1]))
          throw DomainError("PL recurrence products need an integer literal factor");
        break;
      case K::kNeg:
      case K::kAdd:
      case K::kSub:
      case K::kCall:
        break;
      default:
        throw DomainError("operator not allowed in a PL recurrence");
    }
    for (const auto& c : n.children) check(c);
  }

  Int eval(const ParseNode& n, const std::vector<Int>& lags) const {
    using K = ParseNode::Kind;
    switch (n.kind) {
      case K::kNumber:
        return n.number;
      case K::kVariable:
        return lags[lag_index(n.name)];
      case K::kNeg:
        return -eval(n.children[0], lags);
      case K::kAdd:
        return eval(n.children[0], lags) + eval(n.children[1], lags);
      case K::kSub:
        return eval(n.children[0], lags) - eval(n.children[1], lags);
      case K::kMul:
        return eval(n.children[0], lags) * eval(n.children[1], lags);
      case K::kCall: {
        Int best = eval(n.children[0], lags);
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          Int v = eval(n.children[i], lags);
          if (n.name == "max" ? v > best : v < best) best = std::move(v);
        }
        return best;
      }
      default:
        throw DomainError("operator not allowed in a PL recurrence");
    }
  }

  std::size_t arity_;
  ParseNode expr_;
  std::vector<std::string> names_;
};

// First n terms, starting with the initial values.
inline std::vector<Int> pl_iterate(const PLRecurrence& rec, const std::vector<Int>& init, std::size_t n) {
  if (init.size() != rec.arity()) throw DomainError("initial values must match the recurrence arity");
  std::vector<Int> out(init.begin(), init.end());
  std::vector<Int> lags(rec.arity());
  while (out.size() < n) {
    for (std::size_t i = 0; i < rec.arity(); ++i) lags[i] = out[out.size() - 1 - i];
    out.push_back(rec.apply(lags));
  }
  if (out.size() > n) out.resize(n);
  return out;
}

}  // namespace algent
