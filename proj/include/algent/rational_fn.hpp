#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algent/errors.hpp"
#include "algent/expr.hpp"
#include "algent/poly.hpp"

namespace algent {

struct DenFactor {
  Poly poly;
  long power = 1;
  bool operator==(const DenFactor&) const = default;
};

// Candidate denominator factors used for trial division.
using Basis = std::vector<Poly>;

struct SplitPoly {
  Rat scalar;
  Mono monomial;
  Poly factor;  // primitive, positive leading coefficient, no monomial content
};

// p = scalar * x^monomial * factor.
inline SplitPoly split_poly(const Poly& p) {
  if (p.is_zero()) throw DomainError("division by the zero polynomial");
  Mono m = p.monomial_content();
  Poly q = p.div_mono(m);
  Rat c = q.content();
  return {c, m, q * Rat(1 / c)};
}

inline void add_to_basis(Basis& basis, const Poly& p) {
  if (p.is_zero() || p.is_monomial()) return;
  Poly f = split_poly(p).factor;
  if (f.is_constant() || f.is_monomial()) return;
  if (std::find(basis.begin(), basis.end(), f) == basis.end()) basis.push_back(std::move(f));
}

// num / (x^monomial_den * prod factor^power). Kept reduced: no factor divides
// num exactly, and num and monomial_den share no variable.
class RationalFn {
 public:
  explicit RationalFn(std::size_t nvars = 0) : num_(nvars) {}
  explicit RationalFn(Poly num) : num_(std::move(num)) {}

  static RationalFn constant(std::size_t nvars, const Rat& c) { return RationalFn(Poly::constant(nvars, c)); }
  static RationalFn variable(std::size_t nvars, std::size_t i) { return RationalFn(Poly::variable(nvars, i)); }
  static RationalFn laurent(Poly num, const Mono& den) {
    RationalFn r(std::move(num));
    r.mono_ = den;
    r.normalize();
    return r;
  }

  std::size_t nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Mono& monomial_den() const { return mono_; }
  const std::vector<DenFactor>& factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return factors_.empty(); }
  bool is_polynomial() const { return factors_.empty() && mono_.is_one(); }

  long den_degree() const {
    long d = mono_.degree();
    for (const auto& f : factors_) d += f.power * f.poly.total_degree();
    return d;
  }
  Poly den_poly() const {
    Poly d = Poly::monomial(nvars(), mono_, 1);
    for (const auto& f : factors_) d = d * f.poly.pow(f.power);
    return d;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    Rat d = den_poly().evaluate(point);
    if (d == 0) throw DomainError("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
  }
  template <class T>
  T evaluate_numeric(const std::vector<T>& point) const {
    T d = Poly::monomial(nvars(), mono_, 1).evaluate_numeric(point);
    for (const auto& f : factors_) d *= std::pow(f.poly.evaluate_numeric(point), f.power);
    return num_.evaluate_numeric(point) / d;
  }

  std::string to_string(const std::vector<std::string>& vars) const {
    std::string n = num_.to_string(vars);
    if (is_polynomial()) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!mono_[i]) continue;
      pieces.push_back(vars[i] + (mono_[i] == 1 ? "" : "^" + std::to_string(mono_[i])));
    }
    for (const auto& f : factors_)
      pieces.push_back("(" + f.poly.to_string(vars) + ")" + (f.power == 1 ? "" : "^" + std::to_string(f.power)));
    if (pieces.size() == 1) return n + "/" + pieces[0];
    std::string d;
    for (const auto& p : pieces) d += (d.empty() ? "" : "*") + p;
    return n + "/(" + d + ")";
  }

  bool operator==(const RationalFn&) const = default;

  friend RationalFn operator-(const RationalFn& a) {
    RationalFn r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) { return add(a, b, false); }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return add(a, b, true); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.nvars() != b.nvars()) throw DomainError("functions over different variable sets");
    RationalFn r(a.num_ * b.num_);
    r.mono_ = a.mono_ + b.mono_;
    r.factors_ = a.factors_;
    r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
    r.normalize();
    return r;
  }

  friend RationalFn inverse(const RationalFn& b, const Basis& extra);
  friend RationalFn pow(const RationalFn& a, long k, const Basis& extra);
  friend RationalFn substitute(const Poly& p, const std::vector<RationalFn>& g);

  // Appends b's denominator factors to a basis.
  void collect_factors(Basis& basis) const {
    for (const auto& f : factors_)
      if (std::find(basis.begin(), basis.end(), f.poly) == basis.end()) basis.push_back(f.poly);
  }

 private:
  static RationalFn add(const RationalFn& a, const RationalFn& b, bool subtract) {
    if (a.nvars() != b.nvars()) throw DomainError("functions over different variable sets");
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RationalFn r(a.nvars());
    r.mono_ = mono_max(a.mono_, b.mono_);
    r.factors_ = a.factors_;
    for (const auto& f : b.factors_) {
      auto it = std::find_if(r.factors_.begin(), r.factors_.end(), [&](const DenFactor& g) { return g.poly == f.poly; });
      if (it == r.factors_.end()) r.factors_.push_back(f);
      else it->power = std::max(it->power, f.power);
    }
    Poly na = a.num_ * r.cofactor(a), nb = b.num_ * r.cofactor(b);
    r.num_ = subtract ? na - nb : na + nb;
    r.normalize();
    return r;
  }

  // This denominator divided by x's denominator, expanded.
  Poly cofactor(const RationalFn& x) const {
    Poly c = Poly::monomial(nvars(), mono_ - x.mono_, 1);
    for (const auto& f : factors_) {
      long have = 0;
      for (const auto& g : x.factors_)
        if (g.poly == f.poly) have += g.power;
      if (f.power > have) c = c * f.poly.pow(f.power - have);
    }
    return c;
  }

  // Moves p^k into the denominator, splitting off monomial content, scalars
  // and any basis factors that divide it.
  void absorb_den(const Poly& p, long k, const Basis& basis) {
    SplitPoly s = split_poly(p);
    mono_ = mono_ + scale(s.monomial, k);
    Rat sc;
    mpq_pow_si(sc, s.scalar, -k);
    num_ = num_ * sc;
    Poly rest = std::move(s.factor);
    auto try_factor = [&](const Poly& b) {
      if (rest.is_constant() || b.total_degree() > rest.total_degree()) return;
      while (!rest.is_constant()) {
        auto q = exact_divide(rest, b);
        if (!q) break;
        factors_.push_back({b, k});
        rest = std::move(*q);
      }
    };
    std::vector<Poly> own;
    for (const auto& f : factors_) own.push_back(f.poly);
    for (const auto& b : own) try_factor(b);
    for (const auto& b : basis) try_factor(b);
    if (!rest.is_constant()) factors_.push_back({std::move(rest), k});
  }

  static void mpq_pow_si(Rat& out, const Rat& base, long k) {
    Rat b = k < 0 ? Rat(1 / base) : base;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    out = 1;
    while (e) {
      if (e & 1) out *= b;
      b *= b;
      e >>= 1;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      mono_ = {};
      factors_.clear();
      return;
    }
    std::vector<DenFactor> merged;
    for (auto& f : factors_) {
      if (f.power == 0) continue;
      auto it = std::find_if(merged.begin(), merged.end(), [&](const DenFactor& g) { return g.poly == f.poly; });
      if (it == merged.end()) merged.push_back(std::move(f));
      else it->power += f.power;
    }
    for (auto& f : merged) {
      while (f.power > 0) {
        auto q = exact_divide(num_, f.poly);
        if (!q) break;
        num_ = std::move(*q);
        --f.power;
      }
    }
    std::erase_if(merged, [](const DenFactor& f) { return f.power == 0; });
    std::sort(merged.begin(), merged.end(), [](const DenFactor& a, const DenFactor& b) { return a.poly < b.poly; });
    factors_ = std::move(merged);
    Mono c = mono_min(num_.monomial_content(), mono_);
    num_ = num_.div_mono(c);
    mono_ = mono_ - c;
  }

  Poly num_;
  Mono mono_;
  std::vector<DenFactor> factors_;
};

// 1 / b. New denominator polynomials are split against the basis and b's
// own factors.
inline RationalFn inverse(const RationalFn& b, const Basis& extra = {}) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  RationalFn r(b.den_poly());
  r.absorb_den(b.num_, 1, extra);
  r.normalize();
  return r;
}

inline RationalFn divide(const RationalFn& a, const RationalFn& b, Basis basis = {}) {
  a.collect_factors(basis);
  b.collect_factors(basis);
  return a * inverse(b, basis);
}
inline RationalFn operator/(const RationalFn& a, const RationalFn& b) { return divide(a, b); }

inline RationalFn pow(const RationalFn& a, long k, const Basis& extra = {}) {
  if (k < 0) return pow(inverse(a, extra), -k, extra);
  if (k == 0) {
    if (a.is_zero()) throw DomainError("zero to the power zero");
    return RationalFn::constant(a.nvars(), 1);
  }
  RationalFn r(a.num_.pow(static_cast<unsigned long>(k)));
  r.mono_ = scale(a.mono_, k);
  r.factors_ = a.factors_;
  for (auto& f : r.factors_) f.power *= k;
  r.normalize();
  return r;
}

// Value of p at the point g (one function per variable of p), formed over a
// single common denominator.
inline RationalFn substitute(const Poly& p, const std::vector<RationalFn>& g) {
  if (g.size() != p.nvars()) throw DomainError("substitution arity mismatch");
  if (g.empty()) return RationalFn(p);
  std::size_t n = g.front().nvars();
  for (const auto& x : g)
    if (x.nvars() != n) throw DomainError("functions over different variable sets");
  if (p.is_zero()) return RationalFn(n);

  // Distinct denominator factors across g, and each component's powers.
  std::vector<Poly> keys;
  std::vector<std::vector<long>> comp_pow(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (const auto& f : g[j].factors_) {
      auto it = std::find(keys.begin(), keys.end(), f.poly);
      if (it == keys.end()) keys.push_back(f.poly), it = keys.end() - 1;
      std::size_t idx = static_cast<std::size_t>(it - keys.begin());
      comp_pow[j].resize(keys.size(), 0);
      comp_pow[j][idx] += f.power;
    }
  }
  for (auto& v : comp_pow) v.resize(keys.size(), 0);

  struct TermDen {
    Mono mono;
    std::vector<long> pow;
  };
  std::vector<TermDen> dens;
  TermDen common{Mono{}, std::vector<long>(keys.size(), 0)};
  for (const auto& t : p.terms()) {
    TermDen d{Mono{}, std::vector<long>(keys.size(), 0)};
    for (std::size_t j = 0; j < g.size(); ++j) {
      long a = t.mono[j];
      if (!a) continue;
      d.mono = d.mono + scale(g[j].mono_, a);
      for (std::size_t k = 0; k < keys.size(); ++k) d.pow[k] += a * comp_pow[j][k];
    }
    common.mono = mono_max(common.mono, d.mono);
    for (std::size_t k = 0; k < keys.size(); ++k) common.pow[k] = std::max(common.pow[k], d.pow[k]);
    dens.push_back(std::move(d));
  }

  std::vector<std::vector<Poly>> num_pow(g.size()), key_pow(keys.size());
  auto power = [&](std::vector<Poly>& cache, const Poly& base, long e) -> const Poly& {
    if (cache.empty()) cache.push_back(Poly::constant(n, 1));
    while (static_cast<long>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  Poly total(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Term& t = p.terms()[i];
    Poly term = Poly::monomial(n, common.mono - dens[i].mono, t.coeff);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (t.mono[j]) term = term * power(num_pow[j], g[j].num_, t.mono[j]);
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (common.pow[k] > dens[i].pow[k]) term = term * power(key_pow[k], keys[k], common.pow[k] - dens[i].pow[k]);
    total += term;
  }
  RationalFn r(std::move(total));
  r.mono_ = common.mono;
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (common.pow[k]) r.factors_.push_back({keys[k], common.pow[k]});
  r.normalize();
  return r;
}

// Mathematical equality by cross-multiplication, independent of how the
// denominators happen to be factored.
inline bool equivalent(const RationalFn& a, const RationalFn& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.num() * b.den_poly() == b.num() * a.den_poly();
}

namespace detail {

inline RationalFn eval_rational(const ParseNode& node, const std::vector<std::string>& vars, Basis& basis) {
  std::size_t n = vars.size();
  using K = ParseNode::Kind;
  switch (node.kind) {
    case K::kNumber:
      return RationalFn::constant(n, Rat(node.number));
    case K::kVariable: {
      auto it = std::find(vars.begin(), vars.end(), node.name);
      if (it == vars.end()) throw ParseError("unknown variable '" + node.name + "'", node.pos);
      return RationalFn::variable(n, static_cast<std::size_t>(it - vars.begin()));
    }
    case K::kNeg:
      return -eval_rational(node.children[0], vars, basis);
    case K::kAdd:
    case K::kSub: {
      RationalFn a = eval_rational(node.children[0], vars, basis);
      RationalFn b = eval_rational(node.children[1], vars, basis);
      RationalFn r = node.kind == K::kAdd ? a + b : a - b;
      if (r.is_polynomial()) add_to_basis(basis, r.num());
      return r;
    }
    case K::kMul:
      return eval_rational(node.children[0], vars, basis) * eval_rational(node.children[1], vars, basis);
    case K::kDiv: {
      RationalFn a = eval_rational(node.children[0], vars, basis);
      RationalFn b = eval_rational(node.children[1], vars, basis);
      if (b.is_zero()) throw DomainError("division by the zero polynomial");
      return divide(a, b, basis);
    }
    case K::kPow: {
      RationalFn b = eval_rational(node.children[0], vars, basis);
      if (b.is_zero() && node.exponent <= 0) throw DomainError("division by the zero polynomial");
      return pow(b, node.exponent, basis);
    }
    case K::kCall:
      throw ParseError("function calls are not allowed here", node.pos);
  }
  throw ParseError("bad expression", node.pos);
}

}  // namespace detail

// Parses src over the named variables into reduced form. Sums seen while
// parsing seed the factor basis used for cancellation.
inline RationalFn parse_rational(std::string_view src, const std::vector<std::string>& vars, Basis* seeds = nullptr) {
  if (vars.size() > kMaxVars) throw DomainError("too many variables");
  ParseNode tree = parse_expression(src);
  Basis basis;
  RationalFn r = detail::eval_rational(tree, vars, basis);
  if (seeds)
    for (const auto& b : basis) add_to_basis(*seeds, b);
  return r;
}

}  // namespace algent
