#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algent/errors.hpp"
#include "algent/numbers.hpp"

namespace algent {

inline constexpr std::size_t kMaxVars = 8;

// Exponent vector. Unused slots stay zero, so comparisons and degrees can
// ignore the variable count.
struct Mono {
  std::array<std::int32_t, kMaxVars> e{};

  long degree() const {
    long d = 0;
    for (auto v : e) d += v;
    return d;
  }
  std::int32_t& operator[](std::size_t i) { return e[i]; }
  std::int32_t operator[](std::size_t i) const { return e[i]; }
  bool operator==(const Mono&) const = default;

  bool divides(const Mono& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool is_one() const { return degree() == 0 && std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; }); }
};

namespace detail {
inline std::int32_t checked_exponent(long long v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
    throw DomainError("exponent overflow");
  return static_cast<std::int32_t>(v);
}
}  // namespace detail

inline Mono operator+(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = detail::checked_exponent(static_cast<long long>(a.e[i]) + b.e[i]);
  return r;
}
inline Mono operator-(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = detail::checked_exponent(static_cast<long long>(a.e[i]) - b.e[i]);
  return r;
}
inline Mono scale(const Mono& a, long k) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = detail::checked_exponent(static_cast<long long>(a.e[i]) * k);
  return r;
}
inline Mono mono_min(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}
inline Mono mono_max(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

// Graded lexicographic order, first variable most significant.
inline std::strong_ordering grlex(const Mono& a, const Mono& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
  return std::strong_ordering::equal;
}

struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grlex(a, b) > 0; }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Per-thread ceiling on the number of terms any single polynomial may reach.
inline std::size_t& term_budget() {
  thread_local std::size_t budget = 200000;
  return budget;
}

namespace detail {
inline void check_budget(std::size_t terms) {
  if (terms > term_budget())
    throw BudgetExceeded("term budget of " + std::to_string(term_budget()) + " exceeded", 0);
}
}  // namespace detail

struct Term {
  Mono mono;
  Rat coeff;
  bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// in strictly decreasing grlex order with no zero coefficients.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {
    if (nvars > kMaxVars) throw DomainError("too many variables (max " + std::to_string(kMaxVars) + ")");
  }

  static Poly constant(std::size_t nvars, const Rat& c) { return monomial(nvars, Mono{}, c); }
  static Poly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Mono m;
    m[i] = 1;
    return monomial(nvars, m, 1);
  }
  static Poly monomial(std::size_t nvars, const Mono& m, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::unordered_map<Mono, Rat, MonoHash> acc;
    for (auto& t : terms) acc[t.mono] += t.coeff;
    return from_map(nvars, acc);
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rat constant_value() const { return is_zero() || !terms_.back().mono.is_one() ? Rat(0) : terms_.back().coeff; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  long total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  long degree_in(std::size_t i) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono[i]);
    return d;
  }
  // Componentwise minimum exponent: the largest monomial dividing p.
  Mono monomial_content() const {
    if (terms_.empty()) return {};
    Mono m = terms_.front().mono;
    for (const auto& t : terms_) m = mono_min(m, t.mono);
    return m;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != total_degree()) return false;
    return true;
  }
  bool all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
  }

  // Scalar c with p / c primitive over Z and with positive leading coefficient.
  Rat content() const {
    if (terms_.empty()) return 1;
    Int g = 0, l = 1;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rat c(g, l);
    c.canonicalize();
    return terms_.front().coeff < 0 ? Rat(-c) : c;
  }
  Poly primitive() const { return terms_.empty() ? *this : *this * Rat(1 / content()); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Poly operator*(const Rat& c) const {
    if (c == 0) return Poly(nvars_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  Poly mul_mono(const Mono& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono + m;
    return r;
  }
  // Requires m to divide every term.
  Poly div_mono(const Mono& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) {
      if (!m.divides(t.mono)) throw DomainError("monomial does not divide polynomial");
      t.mono = t.mono - m;
    }
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
    if (a.size() == 1) return b.mul_mono(a.terms_[0].mono) * a.terms_[0].coeff;
    if (b.size() == 1) return a.mul_mono(b.terms_[0].mono) * b.terms_[0].coeff;
    std::unordered_map<Mono, Rat, MonoHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1 << 20));
    Rat prod;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
        acc[s.mono + t.mono] += prod;
      }
    return from_map(a.nvars_, acc);
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned long k) const {
    Poly result = constant(nvars_, 1), base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    check_point(point.size());
    Rat sum = 0;
    std::vector<std::vector<Rat>> powers(nvars_);
    for (const auto& t : terms_) {
      Rat v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.mono[i]) v *= power_of(powers[i], point[i], t.mono[i]);
      sum += v;
    }
    return sum;
  }

  template <class T>
  T evaluate_numeric(const std::vector<T>& point) const {
    check_point(point.size());
    T sum{};
    for (const auto& t : terms_) {
      T v = T(to_double(t.coeff));
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.mono[i]) v *= std::pow(point[i], t.mono[i]);
      sum += v;
    }
    return sum;
  }

  // Same polynomial over a larger variable universe (new variables appended).
  Poly extend(std::size_t nvars) const {
    if (nvars < nvars_) throw DomainError("cannot shrink variable count");
    Poly r = *this;
    r.nvars_ = nvars;
    return r;
  }

  // Homogenization of degree deg with the extra variable in slot nvars().
  Poly homogenize(long deg) const {
    if (nvars_ + 1 > kMaxVars) throw DomainError("too many variables to homogenize");
    Poly r(nvars_ + 1);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.mono.degree() > deg) throw DomainError("homogenizing degree too small");
      Term h = t;
      h.mono[nvars_] = detail::checked_exponent(deg - t.mono.degree());
      r.terms_.push_back(std::move(h));
    }
    r.sort_terms();
    return r;
  }

  std::string to_string(const std::vector<std::string>& vars) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Deterministic total order used to sort factor lists.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = grlex(a.terms_[i].mono, b.terms_[i].mono); c != 0) return c;
      int s = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
      if (s != 0) return s <=> 0;
    }
    return a.size() <=> b.size();
  }

 private:
  friend std::optional<Poly> exact_divide(const Poly&, const Poly&);

  static void check_same(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomials over different variable sets");
  }
  void check_point(std::size_t n) const {
    if (n != nvars_) throw DomainError("point has wrong dimension");
  }
  static const Rat& power_of(std::vector<Rat>& cache, const Rat& x, std::int32_t k) {
    if (cache.empty()) cache.push_back(1);
    while (cache.size() <= static_cast<std::size_t>(k)) cache.push_back(cache.back() * x);
    return cache[k];
  }

  static Poly from_map(std::size_t nvars, std::unordered_map<Mono, Rat, MonoHash>& acc) {
    Poly p(nvars);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, std::move(c)});
    p.sort_terms();
    detail::check_budget(p.terms_.size());
    return p;
  }
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex(a.mono, b.mono) > 0; });
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_same(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      auto c = i == a.size()   ? std::strong_ordering::less
               : j == b.size() ? std::strong_ordering::greater
                               : grlex(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Rat s = subtract ? Rat(a.terms_[i].coeff - b.terms_[j].coeff) : Rat(a.terms_[i].coeff + b.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    detail::check_budget(r.terms_.size());
    return r;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

namespace detail {

inline std::string mono_string(const Mono& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] != 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

inline std::string Poly::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() < nvars_) throw DomainError("not enough variable names");
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!s.empty() || neg) s += neg ? '-' : '+';
    std::string m = detail::mono_string(t.mono, vars);
    if (m.empty()) s += algent::to_string(c);
    else if (c == 1) s += m;
    else s += algent::to_string(c) + '*' + m;
  }
  return s;
}

// Returns r with p == q * r, or nothing when q does not divide p exactly.
// Uses repeated leading-term elimination in grlex order.
inline std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  Poly::check_same(p, q);
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return Poly(p.nvars());
  if (q.is_monomial()) {
    const Term& t = q.leading();
    if (!t.mono.divides(p.monomial_content())) return std::nullopt;
    return p.div_mono(t.mono) * Rat(1 / t.coeff);
  }
  // Cheap necessary conditions before the elimination loop.
  if (p.total_degree() < q.total_degree()) return std::nullopt;
  if (!q.leading().mono.divides(p.leading().mono) || !q.trailing().mono.divides(p.trailing().mono)) return std::nullopt;
  if (!q.monomial_content().divides(p.monomial_content())) return std::nullopt;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree_in(i) < q.degree_in(i)) return std::nullopt;

  std::map<Mono, Rat, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lq = q.leading();
  Rat inv = 1 / lq.coeff;
  std::vector<Term> quot;
  Rat prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lq.mono.divides(it->first)) return std::nullopt;
    Mono m = it->first - lq.mono;
    Rat c = it->second * inv;
    for (const auto& t : q.terms()) {
      mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), t.coeff.get_mpq_t());
      auto [slot, fresh] = rem.try_emplace(t.mono + m);
      slot->second -= prod;
      if (slot->second == 0) rem.erase(slot);
    }
    quot.push_back({m, std::move(c)});
    detail::check_budget(rem.size());
  }
  Poly r(p.nvars());
  r.terms_ = std::move(quot);
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo the Mersenne prime 2^61 - 1, used by the gcd probe.

namespace modp {

inline constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kP), hi = static_cast<std::uint64_t>(z >> 61);
  return add(lo, hi);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw DomainError("inverse of zero mod p");
  return pow(a, kP - 2);
}
inline std::uint64_t from_long(long v) {
  return v >= 0 ? static_cast<std::uint64_t>(v) % kP : kP - (static_cast<std::uint64_t>(-v) % kP);
}
// Throws when the denominator vanishes mod p.
inline std::uint64_t from_rat(const Rat& v) {
  static const Int p(std::to_string(kP));
  auto red = [&](const Int& x) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return static_cast<std::uint64_t>(std::stoull(m.get_str()));
  };
  std::uint64_t d = red(v.get_den());
  if (d == 0) throw DomainError("denominator vanishes mod p");
  return mul(red(v.get_num()), inv(d));
}

using UPoly = std::vector<std::uint64_t>;  // constant term first, trimmed

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly rem(UPoly a, const UPoly& b) {
  std::uint64_t il = inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t f = mul(a.back(), il);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(f, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

inline UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficients of the degree <= d polynomial through (k, values[k]), k = 0..d.
inline UPoly interpolate(const std::vector<std::uint64_t>& values) {
  std::size_t n = values.size();
  std::vector<std::uint64_t> dd = values;  // Newton divided differences on nodes 0..n-1
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = mul(sub(dd[i], dd[i - 1]), inv(j));
  UPoly c(n, 0);
  // Horner on the Newton form: c = c * (t - k) + dd[k].
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = n - 1; i > 0; --i) c[i] = sub(c[i - 1], mul(from_long(static_cast<long>(k)), c[i]));
    c[0] = sub(dd[k], mul(from_long(static_cast<long>(k)), c[0]));
  }
  trim(c);
  return c;
}

}  // namespace modp

// Evaluates a polynomial modulo p at a point given mod p.
inline std::uint64_t evaluate_mod(const Poly& f, const std::vector<std::uint64_t>& point) {
  std::uint64_t sum = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = modp::from_rat(t.coeff);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.mono[i]) v = modp::mul(v, modp::pow(point[i], static_cast<std::uint64_t>(t.mono[i])));
    sum = modp::add(sum, v);
  }
  return sum;
}

// Degree of the gcd of the restrictions of several polynomials to random
// lines t -> a*t + b (a, b with entries in [-99, 99]), minimized over
// trials. Restrictions are recovered by interpolation modulo 2^61 - 1.
// eval(k, point) returns polynomial k at point mod p; degrees[k] is its
// exact total degree (negative for the zero polynomial). A line on which
// some restriction loses degree is discarded, since the common factor's
// restriction could lose degree with it.
inline long gcd_probe_eval(std::size_t nvars, const std::vector<long>& degrees,
                           const std::function<std::uint64_t(std::size_t, const std::vector<std::uint64_t>&)>& eval,
                           std::size_t trials, std::uint64_t seed) {
  std::size_t live = std::count_if(degrees.begin(), degrees.end(), [](long d) { return d >= 0; });
  if (live < 2) throw DomainError("gcd_probe needs at least two nonzero polynomials");
  if (trials == 0) throw DomainError("gcd_probe needs at least one trial");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-99, 99);
  long best = std::numeric_limits<long>::max();
  std::size_t done = 0, attempts = 0;
  while (done < trials) {
    if (++attempts > 50 * trials) throw DomainError("gcd_probe: no nondegenerate line found");
    std::vector<std::uint64_t> a(nvars), b(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      a[i] = modp::from_long(coef(rng));
      b[i] = modp::from_long(coef(rng));
    }
    modp::UPoly g;
    bool any = false, degenerate = false;
    for (std::size_t k = 0; k < degrees.size() && !degenerate; ++k) {
      if (degrees[k] < 0) continue;
      std::vector<std::uint64_t> vals;
      for (long t = 0; t <= degrees[k]; ++t) {
        std::vector<std::uint64_t> pt(nvars);
        for (std::size_t i = 0; i < nvars; ++i) pt[i] = modp::add(modp::mul(a[i], modp::from_long(t)), b[i]);
        vals.push_back(eval(k, pt));
      }
      modp::UPoly r = modp::interpolate(vals);
      if (static_cast<long>(r.size()) - 1 != degrees[k]) {
        degenerate = true;
        continue;
      }
      g = any ? modp::gcd(g, r) : r;
      any = true;
    }
    if (degenerate || !any) continue;
    best = std::min<long>(best, static_cast<long>(g.size()) - 1);
    ++done;
  }
  return best;
}

// Probe for a common factor of polys. When some input is a single term, any
// common factor is a monomial, and the answer is exact.
inline long gcd_probe(const std::vector<Poly>& polys, std::size_t trials = 5, std::uint64_t seed = 1) {
  std::vector<const Poly*> live;
  for (const auto& p : polys)
    if (!p.is_zero()) live.push_back(&p);
  if (live.size() < 2) throw DomainError("gcd_probe needs at least two nonzero polynomials");
  std::size_t n = live.front()->nvars();
  for (auto* p : live)
    if (p->nvars() != n) throw DomainError("polynomials over different variable sets");
  if (std::any_of(live.begin(), live.end(), [](const Poly* p) { return p->is_monomial(); })) {
    Mono m = live.front()->monomial_content();
    for (auto* p : live) m = mono_min(m, p->monomial_content());
    return m.degree();
  }
  std::vector<long> deg;
  for (auto* p : live) deg.push_back(p->total_degree());
  return gcd_probe_eval(
      n, deg, [&](std::size_t k, const std::vector<std::uint64_t>& pt) { return evaluate_mod(*live[k], pt); }, trials, seed);
}

}  // namespace algent
