#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algent/numbers.hpp"

namespace algent {

// Dense univariate polynomial, constant term first. The zero polynomial has
// no coefficients; otherwise the last coefficient is nonzero.
template <typename T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }

  template <typename U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const T& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      T mag = v < 0 ? T(-v) : v;
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? "-" : "+");
      }
      first = false;
      if (i == 0 || mag != 1) os << algent::to_string(mag);
      if (i > 0) {
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = UPoly<Int>;
using RatPolynomial = UPoly<Rat>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

// Quotient and remainder over the rationals; b must be nonzero.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
  const auto db = static_cast<std::size_t>(b.degree());
  for (long i = a.degree(); i >= b.degree(); --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui] == 0) continue;
    Rat q = rem[ui] / b.lead();
    quo[ui - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[ui - db + j] -= q * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Rat> c = p.coeffs();
  Rat l = p.lead();
  for (auto& v : c) v /= l;
  return RatPolynomial(std::move(c));
}

// Monic gcd over the rationals.
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

// Yun's square-free decomposition: returns (factor, multiplicity) pairs with
// p = lead * prod factor^multiplicity and every factor square-free, monic.
inline std::vector<std::pair<RatPolynomial, int>> squarefree_decomposition(const RatPolynomial& p) {
  std::vector<std::pair<RatPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = make_monic(p);
  RatPolynomial d = f.derivative();
  RatPolynomial a = gcd(f, d);
  RatPolynomial b = divmod(f, a).first;
  RatPolynomial c = divmod(d, a).first;
  RatPolynomial e = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
    ++mult;
  }
  return out;
}

}  // namespace algent
