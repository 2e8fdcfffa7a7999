#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algent/errors.hpp"
#include "algent/expr.hpp"
#include "algent/numbers.hpp"
#include "algent/rational_fn.hpp"

namespace algent {

// x -> coeffs . x + constant
struct AffineForm {
  std::vector<Rat> coeffs;
  Rat constant = 0;

  AffineForm() = default;
  explicit AffineForm(std::size_t dim) : coeffs(dim, 0) {}
  AffineForm(std::vector<Rat> c, Rat k) : coeffs(std::move(c)), constant(std::move(k)) {}

  static AffineForm variable(std::size_t dim, std::size_t j) {
    AffineForm f(dim);
    f.coeffs.at(j) = 1;
    return f;
  }

  std::size_t dimension() const { return coeffs.size(); }
  bool is_zero() const {
    return constant == 0 && std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
  }

  Rat evaluate(const std::vector<Rat>& p) const {
    if (p.size() != coeffs.size()) throw DomainError("point has wrong dimension");
    Rat s = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * p[i];
    return s;
  }
  Rat l1_norm() const {
    Rat s = 0;
    for (const auto& c : coeffs) s += abs(c);
    return s;
  }
  Rat coefficient_sum() const {
    Rat s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    if (a.dimension() != b.dimension()) throw DomainError("form dimension mismatch");
    AffineForm r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.constant += b.constant;
    return r;
  }
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + b * Rat(-1); }
  friend AffineForm operator*(const AffineForm& a, const Rat& c) {
    AffineForm r = a;
    for (auto& x : r.coeffs) x *= c;
    r.constant *= c;
    return r;
  }

  bool operator==(const AffineForm&) const = default;
  friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
    for (std::size_t i = 0; i < std::min(a.coeffs.size(), b.coeffs.size()); ++i)
      if (int s = cmp(a.coeffs[i], b.coeffs[i]); s != 0) return s <=> 0;
    if (int s = cmp(a.constant, b.constant); s != 0) return s <=> 0;
    return a.coeffs.size() <=> b.coeffs.size();
  }

  // Compact text, e.g. "-20a+28b-7c"; integer coefficients are written
  // without '*', rational ones as "1/2*a".
  std::string to_string(const std::vector<std::string>& vars) const {
    std::string s;
    auto emit = [&](const Rat& c, const std::string& name) {
      if (c == 0) return;
      Rat m = abs(c);
      if (c < 0) s += '-';
      else if (!s.empty()) s += '+';
      if (name.empty()) s += algent::to_string(m);
      else if (m == 1) s += name;
      else if (m.get_den() == 1) s += algent::to_string(m) + name;
      else s += algent::to_string(m) + "*" + name;
    };
    for (std::size_t i = 0; i < coeffs.size(); ++i) emit(coeffs[i], vars.at(i));
    emit(constant, "");
    return s.empty() ? "0" : s;
  }
};

// Per-thread ceiling on the number of forms in one max-expression.
inline std::size_t& form_budget() {
  thread_local std::size_t budget = 10000;
  return budget;
}

namespace lp {

// Maximizes c.z subject to A z <= b, z >= 0, where b >= 0 so the origin is
// feasible. Returns nothing when unbounded. Dense tableau, exact pivots,
// Bland's rule.
inline std::optional<Rat> maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
  std::size_t m = a.size(), n = c.size();
  std::size_t cols = n + m;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) throw DomainError("simplex: infeasible origin");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  std::vector<Rat> obj(cols + 1, 0);  // reduced costs, obj[cols] = -value
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) return -obj[cols];
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;
    Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

// Supremum of t subject to target(x) - other_i(x) >= t for every i, capped
// at 1. The form strictly exceeds all others somewhere iff this is > 0.
inline Rat dominance_margin(const AffineForm& target, const std::vector<const AffineForm*>& others) {
  if (others.empty()) return 1;
  std::size_t n = target.dimension();
  std::vector<std::vector<Rat>> d;
  std::vector<Rat> e;
  Rat t0 = 1;
  for (const auto* o : others) {
    AffineForm diff = target - *o;
    d.push_back(diff.coeffs);
    e.push_back(diff.constant);
    t0 = std::min(t0, diff.constant);
  }
  // Variables: u = t - t0 >= 0, then x+ and x- (x = x+ - x-).
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Rat> row(1 + 2 * n, 0);
    row[0] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      row[1 + j] = -d[i][j];
      row[1 + n + j] = d[i][j];
    }
    a.push_back(std::move(row));
    b.push_back(e[i] - t0);
  }
  std::vector<Rat> cap(1 + 2 * n, 0);
  cap[0] = 1;
  a.push_back(cap);
  b.push_back(1 - t0);
  std::vector<Rat> c(1 + 2 * n, 0);
  c[0] = 1;
  auto best = maximize(a, b, c);
  if (!best) return 1;  // cannot happen with the cap, kept for safety
  return t0 + *best;
}

}  // namespace lp

// Forms that strictly attain the maximum somewhere, sorted and deduplicated.
// Random sampling confirms obvious winners; everything else is decided by LP.
inline std::vector<AffineForm> essential_forms(std::vector<AffineForm> forms) {
  if (forms.empty()) throw DomainError("max of no forms");
  std::size_t dim = forms.front().dimension();
  for (const auto& f : forms)
    if (f.dimension() != dim) throw DomainError("form dimension mismatch");
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  if (forms.size() == 1) return forms;

  std::vector<char> confirmed(forms.size(), 0);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coord(-50, 50);
  std::vector<Rat> pt(dim);
  for (int s = 0; s < 16; ++s) {
    for (auto& v : pt) v = coord(rng);
    std::size_t arg = 0;
    Rat best = forms[0].evaluate(pt);
    bool unique = true;
    for (std::size_t i = 1; i < forms.size(); ++i) {
      Rat v = forms[i].evaluate(pt);
      if (v > best) best = v, arg = i, unique = true;
      else if (v == best) unique = false;
    }
    if (unique) confirmed[arg] = 1;
  }
  std::vector<AffineForm> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!confirmed[i]) {
      std::vector<const AffineForm*> others;
      for (std::size_t j = 0; j < forms.size(); ++j)
        if (j != i) others.push_back(&forms[j]);
      if (lp::dominance_margin(forms[i], others) <= 0) continue;
    }
    out.push_back(forms[i]);
  }
  return out;
}

// Pointwise max of a nonempty set of affine forms, stored canonically.
class TropExpr {
 public:
  TropExpr() = default;
  explicit TropExpr(std::vector<AffineForm> forms) : forms_(essential_forms(std::move(forms))) {}
  explicit TropExpr(AffineForm f) : forms_{std::move(f)} {}

  static TropExpr zero(std::size_t dim) { return TropExpr(AffineForm(dim)); }

  const std::vector<AffineForm>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }
  std::size_t dimension() const { return forms_.empty() ? 0 : forms_.front().dimension(); }
  bool is_single() const { return forms_.size() == 1; }
  bool is_zero() const { return is_single() && forms_[0].is_zero(); }

  Rat evaluate(const std::vector<Rat>& p) const {
    Rat best = forms_.at(0).evaluate(p);
    for (std::size_t i = 1; i < forms_.size(); ++i) best = std::max(best, forms_[i].evaluate(p));
    return best;
  }

  std::string to_string(const std::vector<std::string>& vars) const {
    if (forms_.size() == 1) return forms_[0].to_string(vars);
    std::string s = "max(";
    for (std::size_t i = 0; i < forms_.size(); ++i) s += (i ? "," : "") + forms_[i].to_string(vars);
    return s + ")";
  }

  bool operator==(const TropExpr&) const = default;

  friend TropExpr tmax(const TropExpr& a, const TropExpr& b) {
    std::vector<AffineForm> f = a.forms_;
    f.insert(f.end(), b.forms_.begin(), b.forms_.end());
    return TropExpr(std::move(f));
  }
  // Max-plus product: max(A) + max(B) = max over pairwise sums.
  friend TropExpr operator+(const TropExpr& a, const TropExpr& b) {
    if (a.forms_.size() * b.forms_.size() > form_budget())
      throw BudgetExceeded("form budget of " + std::to_string(form_budget()) + " exceeded", 0);
    std::vector<AffineForm> f;
    for (const auto& x : a.forms_)
      for (const auto& y : b.forms_) f.push_back(x + y);
    return TropExpr(std::move(f));
  }
  // c * max(A) = max(c * A) for c >= 0.
  TropExpr scaled(const Rat& c) const {
    if (c < 0) throw DomainError("negative scaling of a max-expression");
    if (c == 0) return zero(dimension());
    std::vector<AffineForm> f;
    for (const auto& x : forms_) f.push_back(x * c);
    return TropExpr(std::move(f));
  }

 private:
  std::vector<AffineForm> forms_;
};

// Upper envelopes agree iff their essential forms agree.
inline bool equivalent(const TropExpr& a, const TropExpr& b) { return a.forms() == b.forms(); }

// num - den. Canonical: when the quotient is convex it is rewritten as a
// single max-expression over a zero denominator.
class TropComponent {
 public:
  TropComponent() = default;
  TropComponent(TropExpr num, TropExpr den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.dimension() != den_.dimension()) throw DomainError("form dimension mismatch");
    canonicalize();
  }
  explicit TropComponent(TropExpr num) : TropComponent(num, TropExpr::zero(num.dimension())) {}

  static TropComponent constant(std::size_t dim, const Rat& c) { return TropComponent(TropExpr(AffineForm(std::vector<Rat>(dim, 0), c))); }
  static TropComponent variable(std::size_t dim, std::size_t j) { return TropComponent(TropExpr(AffineForm::variable(dim, j))); }

  const TropExpr& num() const { return num_; }
  const TropExpr& den() const { return den_; }
  std::size_t dimension() const { return num_.dimension(); }

  Rat evaluate(const std::vector<Rat>& p) const { return num_.evaluate(p) - den_.evaluate(p); }

  std::string to_string(const std::vector<std::string>& vars) const {
    std::string n = num_.to_string(vars);
    if (den_.is_zero()) return n;
    std::string d = den_.to_string(vars);
    return n + "-" + (den_.is_single() ? "(" + d + ")" : d);
  }

  bool operator==(const TropComponent&) const = default;

  friend TropComponent operator+(const TropComponent& a, const TropComponent& b) {
    return TropComponent(a.num_ + b.num_, a.den_ + b.den_);
  }
  friend TropComponent operator-(const TropComponent& a) { return TropComponent(a.den_, a.num_); }
  friend TropComponent operator-(const TropComponent& a, const TropComponent& b) { return a + (-b); }
  TropComponent scaled(const Rat& c) const {
    if (c >= 0) return TropComponent(num_.scaled(c), den_.scaled(c));
    return TropComponent(den_.scaled(-c), num_.scaled(-c));
  }
  // max(P - Q, R - S), over a shared denominator when Q == S.
  friend TropComponent tmax(const TropComponent& a, const TropComponent& b) {
    if (a.den_ == b.den_) return TropComponent(tmax(a.num_, b.num_), a.den_);
    return TropComponent(tmax(a.num_ + b.den_, b.num_ + a.den_), a.den_ + b.den_);
  }
  friend TropComponent tmin(const TropComponent& a, const TropComponent& b) { return -tmax(-a, -b); }

 private:
  void canonicalize() {
    if (den_.is_zero()) return;
    std::size_t dim = dimension();
    if (den_.is_single()) {
      std::vector<AffineForm> f;
      for (const auto& x : num_.forms()) f.push_back(x - den_.forms()[0]);
      num_ = TropExpr(std::move(f));
      den_ = TropExpr::zero(dim);
      return;
    }
    if (num_.size() * den_.size() > 4096) return;
    // Pieces alpha - beta on cells where alpha tops num and beta tops den.
    std::vector<AffineForm> pieces;
    const auto& nf = num_.forms();
    const auto& df = den_.forms();
    for (std::size_t i = 0; i < nf.size(); ++i)
      for (std::size_t j = 0; j < df.size(); ++j) {
        std::vector<const AffineForm*> others;
        // Both cell conditions as one LP against the target alpha:
        // beta - beta' >= t is alpha - (alpha - beta + beta') >= t.
        const AffineForm& target = nf[i];
        std::vector<AffineForm> diffs;
        for (std::size_t k = 0; k < nf.size(); ++k)
          if (k != i) diffs.push_back(nf[k]);
        for (std::size_t k = 0; k < df.size(); ++k)
          if (k != j) diffs.push_back(nf[i] - df[j] + df[k]);
        for (const auto& d : diffs) others.push_back(&d);
        if (lp::dominance_margin(target, others) > 0) pieces.push_back(nf[i] - df[j]);
      }
    TropExpr cand(pieces);
    // Convex iff max(pieces) + max(den) <= max(num) everywhere.
    std::vector<const AffineForm*> numptr;
    for (const auto& x : nf) numptr.push_back(&x);
    for (const auto& p : cand.forms())
      for (const auto& d : df)
        if (lp::dominance_margin(p + d, numptr) > 0) return;
    num_ = std::move(cand);
    den_ = TropExpr::zero(dim);
  }

  TropExpr num_;
  TropExpr den_;
};

inline bool equivalent(const TropComponent& a, const TropComponent& b) {
  return equivalent(a.num() + b.den(), b.num() + a.den());
}

inline std::vector<std::string> default_trop_vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1));
  return v;
}

namespace detail {

inline TropComponent eval_trop(const ParseNode& node, const std::vector<std::string>& vars) {
  using K = ParseNode::Kind;
  std::size_t n = vars.size();
  auto number_of = [](const ParseNode& x) -> std::optional<Rat> {
    if (x.kind == K::kNumber) return Rat(x.number);
    if (x.kind == K::kNeg && x.children[0].kind == K::kNumber) return Rat(-x.children[0].number);
    return std::nullopt;
  };
  switch (node.kind) {
    case K::kNumber:
      return TropComponent::constant(n, Rat(node.number));
    case K::kVariable: {
      auto it = std::find(vars.begin(), vars.end(), node.name);
      if (it == vars.end()) throw ParseError("unknown variable '" + node.name + "'", node.pos);
      return TropComponent::variable(n, static_cast<std::size_t>(it - vars.begin()));
    }
    case K::kNeg:
      return -eval_trop(node.children[0], vars);
    case K::kAdd:
      return eval_trop(node.children[0], vars) + eval_trop(node.children[1], vars);
    case K::kSub:
      return eval_trop(node.children[0], vars) - eval_trop(node.children[1], vars);
    case K::kMul: {
      if (auto c = number_of(node.children[0])) return eval_trop(node.children[1], vars).scaled(*c);
      if (auto c = number_of(node.children[1])) return eval_trop(node.children[0], vars).scaled(*c);
      throw ParseError("tropical products need a numeric factor", node.pos);
    }
    case K::kDiv: {
      auto c = number_of(node.children[1]);
      if (!c || *c == 0) throw ParseError("tropical division needs a nonzero numeric divisor", node.pos);
      return eval_trop(node.children[0], vars).scaled(1 / *c);
    }
    case K::kPow:
      throw ParseError("powers are not allowed in tropical expressions", node.pos);
    case K::kCall: {
      TropComponent r = eval_trop(node.children[0], vars);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        TropComponent x = eval_trop(node.children[i], vars);
        r = node.name == "max" ? tmax(r, x) : tmin(r, x);
      }
      return r;
    }
  }
  throw ParseError("bad expression", node.pos);
}

}  // namespace detail

// Parses text such as "max(2b,2c)-a": + is addition, - subtraction, and
// integer multiples of variables may be written "2b".
inline TropComponent parse_tropical(std::string_view src, const std::vector<std::string>& vars) {
  ParseOptions opt;
  opt.allow_calls = true;
  opt.implicit_coefficients = true;
  return detail::eval_trop(parse_expression(src, opt), vars);
}

class TropMap {
 public:
  TropMap() = default;
  TropMap(std::vector<std::string> vars, std::vector<TropComponent> comps) : vars_(std::move(vars)), comps_(std::move(comps)) {
    if (vars_.empty()) throw DomainError("map needs at least one variable");
    if (comps_.size() != vars_.size()) throw DomainError("component count must equal dimension");
    for (const auto& c : comps_)
      if (c.dimension() != vars_.size()) throw DomainError("component dimension mismatch");
  }

  static TropMap parse(std::vector<std::string> vars, const std::vector<std::string>& srcs) {
    std::vector<TropComponent> comps;
    for (const auto& s : srcs) comps.push_back(parse_tropical(s, vars));
    return TropMap(std::move(vars), std::move(comps));
  }
  static TropMap identity(std::vector<std::string> vars) {
    std::vector<TropComponent> comps;
    for (std::size_t i = 0; i < vars.size(); ++i) comps.push_back(TropComponent::variable(vars.size(), i));
    return TropMap(std::move(vars), std::move(comps));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<TropComponent>& components() const { return comps_; }
  const TropComponent& operator[](std::size_t i) const { return comps_[i]; }
  std::size_t dimension() const { return vars_.size(); }

  std::vector<Rat> evaluate(const std::vector<Rat>& p) const {
    if (p.size() != dimension()) throw DomainError("point has wrong dimension");
    std::vector<Rat> out;
    for (const auto& c : comps_) out.push_back(c.evaluate(p));
    return out;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : comps_) out.push_back(c.to_string(vars_));
    return out;
  }

  bool is_identity() const { return *this == identity(vars_); }
  bool operator==(const TropMap&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<TropComponent> comps_;
};

inline bool equivalent(const TropMap& a, const TropMap& b) {
  if (a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (!equivalent(a[i], b[i])) return false;
  return true;
}

namespace detail {

// The form l evaluated on the components of g, as a max-plus quotient.
inline TropComponent substitute_form(const AffineForm& l, const TropMap& g) {
  std::size_t n = g.dimension();
  TropComponent r = TropComponent::constant(n, l.constant);
  for (std::size_t j = 0; j < n; ++j)
    if (l.coeffs[j] != 0) r = r + g[j].scaled(l.coeffs[j]);
  return r;
}

inline TropComponent substitute_expr(const TropExpr& e, const TropMap& g) {
  std::optional<TropComponent> r;
  for (const auto& f : e.forms()) {
    TropComponent s = substitute_form(f, g);
    r = r ? tmax(*r, s) : s;
  }
  return *r;
}

}  // namespace detail

// f o g.
inline TropMap compose(const TropMap& f, const TropMap& g) {
  if (f.dimension() != g.dimension()) throw DomainError("dimension mismatch");
  std::vector<TropComponent> out;
  for (const auto& c : f.components()) {
    TropComponent num = detail::substitute_expr(c.num(), g);
    if (c.den().is_zero()) out.push_back(std::move(num));
    else out.push_back(num - detail::substitute_expr(c.den(), g));
  }
  return TropMap(f.vars(), std::move(out));
}

inline TropMap iterate(const TropMap& f, long n) {
  if (n < 1) throw DomainError("iteration count must be at least 1");
  TropMap r = f;
  for (long k = 2; k <= n; ++k) r = compose(f, r);
  return r;
}

// Upper bound on the sup-metric Lipschitz constant.
inline Rat lipschitz_bound(const TropMap& m) {
  Rat best = 0;
  for (const auto& c : m.components()) {
    Rat a = 0, b = 0;
    for (const auto& f : c.num().forms()) a = std::max(a, f.l1_norm());
    for (const auto& f : c.den().forms()) b = std::max(b, f.l1_norm());
    best = std::max(best, Rat(a + b));
  }
  return best;
}

// m when f(p + t*1) = f(p) + m*t*1 for all p, t; nothing otherwise.
inline std::optional<Rat> homogeneity(const TropMap& m) {
  std::optional<Rat> out;
  for (const auto& c : m.components()) {
    std::optional<Rat> sn, sd;
    for (const auto& f : c.num().forms()) {
      Rat s = f.coefficient_sum();
      if (sn && *sn != s) return std::nullopt;
      sn = s;
    }
    for (const auto& f : c.den().forms()) {
      Rat s = f.coefficient_sum();
      if (sd && *sd != s) return std::nullopt;
      sd = s;
    }
    Rat v = *sn - *sd;
    if (out && *out != v) return std::nullopt;
    out = v;
  }
  return out;
}

// Evaluation on R^n modulo the diagonal: the point is normalized to last
// coordinate zero before and after applying m.
inline std::vector<Rat> quotient_evaluate(const TropMap& m, const std::vector<Rat>& p) {
  if (!homogeneity(m)) throw DomainError("map is not homogeneous");
  if (p.size() != m.dimension()) throw DomainError("point has wrong dimension");
  std::vector<Rat> q = p;
  Rat shift = q.back();
  for (auto& v : q) v -= shift;
  std::vector<Rat> r = m.evaluate(q);
  shift = r.back();
  for (auto& v : r) v -= shift;
  return r;
}

// Replaces (*, /, +) by (+, -, max), dropping coefficients. Requires every
// coefficient of the numerator and of each denominator factor to be positive.
inline TropComponent tropicalize(const RationalFn& f) {
  std::size_t n = f.nvars();
  if (f.is_zero() || !f.num().all_coefficients_positive()) throw DomainError("expression is not subtraction-free");
  for (const auto& fac : f.factors())
    if (!fac.poly.all_coefficients_positive()) throw DomainError("expression is not subtraction-free");
  auto support = [&](const Poly& p) {
    std::vector<AffineForm> forms;
    for (const auto& t : p.terms()) {
      AffineForm a(n);
      for (std::size_t j = 0; j < n; ++j) a.coeffs[j] = t.mono[j];
      forms.push_back(std::move(a));
    }
    return TropExpr(std::move(forms));
  };
  AffineForm m(n);
  for (std::size_t j = 0; j < n; ++j) m.coeffs[j] = f.monomial_den()[j];
  TropExpr den(m);
  for (const auto& fac : f.factors()) den = den + support(fac.poly).scaled(fac.power);
  return TropComponent(support(f.num()), den);
}

}  // namespace algent
