#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algent/errors.hpp"
#include "algent/linalg.hpp"
#include "algent/rational_fn.hpp"

namespace algent {

class RationalMap {
 public:
  RationalMap() = default;
  RationalMap(std::vector<std::string> vars, std::vector<RationalFn> components)
      : vars_(std::move(vars)), comps_(std::move(components)) {
    if (vars_.empty()) throw DomainError("map needs at least one variable");
    if (vars_.size() > kMaxVars) throw DomainError("too many variables");
    if (comps_.size() != vars_.size()) throw DomainError("component count must equal variable count");
    for (const auto& c : comps_)
      if (c.nvars() != vars_.size()) throw DomainError("component over a different variable universe");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
  }

  static RationalMap parse(std::vector<std::string> vars, const std::vector<std::string>& components) {
    std::vector<RationalFn> comps;
    for (const auto& src : components) comps.push_back(parse_rational(src, vars));
    return RationalMap(std::move(vars), std::move(comps));
  }

  static RationalMap identity(std::vector<std::string> vars) {
    std::vector<RationalFn> comps;
    for (std::size_t i = 0; i < vars.size(); ++i) comps.push_back(RationalFn::variable(vars.size(), i));
    return RationalMap(std::move(vars), std::move(comps));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<RationalFn>& components() const { return comps_; }
  const RationalFn& operator[](std::size_t i) const { return comps_[i]; }
  std::size_t dimension() const { return vars_.size(); }

  bool is_identity() const { return *this == identity(vars_); }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : comps_) out.push_back(c.to_string(vars_));
    return out;
  }

  std::vector<Rat> evaluate(const std::vector<Rat>& p) const {
    std::vector<Rat> out;
    for (const auto& c : comps_) out.push_back(c.evaluate(p));
    return out;
  }

  std::size_t max_terms() const {
    std::size_t m = 0;
    for (const auto& c : comps_) {
      m = std::max(m, c.num().size());
      for (const auto& f : c.factors()) m = std::max(m, f.poly.size());
    }
    return m;
  }

  bool operator==(const RationalMap&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<RationalFn> comps_;
};

// Factors that composition results are trial-divided against: denominator
// factors of both maps and the non-monomial parts of g's numerators.
inline Basis composition_basis(const RationalMap& f, const RationalMap& g) {
  Basis b;
  for (const auto& c : f.components()) c.collect_factors(b);
  for (const auto& c : g.components()) {
    c.collect_factors(b);
    add_to_basis(b, c.num());
  }
  return b;
}

// f o g, each component reduced.
inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (f.dimension() != g.dimension() || f.vars() != g.vars()) throw DomainError("incompatible variable universes");
  Basis basis = composition_basis(f, g);
  std::vector<RationalFn> out;
  for (const auto& c : f.components()) {
    RationalFn r = substitute(c.num(), g.components());
    auto divide_by = [&](const RationalFn& d, long k) {
      if (d.is_zero()) throw DomainError("composition makes a denominator identically zero");
      r = r * pow(inverse(d, basis), k, basis);
    };
    for (std::size_t j = 0; j < f.dimension(); ++j)
      if (c.monomial_den()[j]) divide_by(g[j], c.monomial_den()[j]);
    for (const auto& fac : c.factors()) divide_by(substitute(fac.poly, g.components()), fac.power);
    out.push_back(std::move(r));
  }
  return RationalMap(f.vars(), std::move(out));
}

inline RationalMap iterate(const RationalMap& f, long n) {
  if (n < 1) throw DomainError("iteration count must be at least 1");
  RationalMap r = f;
  for (long k = 2; k <= n; ++k) {
    try {
      r = compose(f, r);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), k - 1);
    }
  }
  return r;
}

// First unused name from a fixed list, for the homogenizing coordinate.
inline std::string homogenizing_name(const std::vector<std::string>& vars) {
  for (const char* c : {"y", "z", "w", "t", "u", "v", "h", "s"})
    if (std::find(vars.begin(), vars.end(), c) == vars.end()) return c;
  std::string base = "h";
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (std::find(vars.begin(), vars.end(), cand) == vars.end()) return cand;
  }
}

struct ProjectiveForm {
  std::vector<std::string> vars;  // affine variables followed by the homogenizing one
  std::vector<Poly> polys;
  long degree = 0;
  bool exact = true;  // false: degree is only an upper bound

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string(vars));
    return out;
  }
};

struct ProjectiveDegree {
  long degree = 0;
  bool exact = true;
};

struct ProbeOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 1;
};

namespace detail {

// Homogeneous (n+1)-tuple of f in factored shape. Component i is
// scalar * num_i^H * x^mono_i * h^hpow_i * prod_k factor_k^H ^ pow_i[k].
struct FactoredProjective {
  std::size_t n = 0;
  long degree = 0;
  std::vector<Poly> factors;  // homogenized denominator factors
  struct Comp {
    Poly num;   // homogenized numerator (n+1 variables), zero if absent
    Mono mono;  // over the n+1 variables, including the h slot
    std::vector<long> pow;
  };
  std::vector<Comp> comps;
};

inline FactoredProjective factored_projective(const RationalMap& f) {
  std::size_t n = f.dimension();
  if (n + 1 > kMaxVars) throw DomainError("too many variables to projectivize");
  if (std::all_of(f.components().begin(), f.components().end(), [](const RationalFn& c) { return c.is_zero(); }))
    throw DomainError("all components identically zero");
  FactoredProjective fp;
  fp.n = n;
  // Common denominator Q: least common multiple in factored form.
  std::vector<Poly> keys;
  Mono qmono;
  std::vector<long> qpow;
  for (const auto& c : f.components()) {
    qmono = mono_max(qmono, c.monomial_den());
    for (const auto& fac : c.factors()) {
      auto it = std::find(keys.begin(), keys.end(), fac.poly);
      if (it == keys.end()) {
        keys.push_back(fac.poly);
        qpow.push_back(fac.power);
      } else {
        auto& p = qpow[static_cast<std::size_t>(it - keys.begin())];
        p = std::max(p, fac.power);
      }
    }
  }
  long qdeg = qmono.degree();
  for (std::size_t k = 0; k < keys.size(); ++k) qdeg += qpow[k] * keys[k].total_degree();

  std::vector<long> d(n);
  long deg = qdeg;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = f[i];
    if (c.is_zero()) continue;
    d[i] = c.num().total_degree() + qdeg - c.den_degree();
    deg = std::max(deg, d[i]);
  }
  for (const auto& k : keys) fp.factors.push_back(k.homogenize(k.total_degree()));
  for (std::size_t i = 0; i <= n; ++i) {
    FactoredProjective::Comp comp;
    comp.pow.assign(keys.size(), 0);
    if (i < n) {
      const auto& c = f[i];
      if (c.is_zero()) {
        comp.num = Poly(n + 1);
        fp.comps.push_back(std::move(comp));
        continue;
      }
      comp.num = c.num().homogenize(c.num().total_degree());
      Mono content = c.num().monomial_content();
      comp.num = comp.num.div_mono(content);
      comp.mono = content + (qmono - c.monomial_den());
      for (std::size_t k = 0; k < keys.size(); ++k) {
        long have = 0;
        for (const auto& fac : c.factors())
          if (fac.poly == keys[k]) have = fac.power;
        comp.pow[k] = qpow[k] - have;
      }
      comp.mono[n] = detail::checked_exponent(deg - d[i]);
    } else {
      comp.num = Poly::constant(n + 1, 1);
      comp.mono = qmono;
      comp.pow = qpow;
      comp.mono[n] = detail::checked_exponent(deg - qdeg);
    }
    fp.comps.push_back(std::move(comp));
  }
  // Joint monomial content.
  std::optional<Mono> joint;
  for (const auto& c : fp.comps)
    if (!c.num.is_zero()) joint = joint ? mono_min(*joint, c.mono) : c.mono;
  for (auto& c : fp.comps)
    if (!c.num.is_zero()) c.mono = c.mono - *joint;
  fp.degree = deg - joint->degree();
  return fp;
}

inline bool probe_factored(const FactoredProjective& fp, const ProbeOptions& opt) {
  std::vector<const FactoredProjective::Comp*> live;
  for (const auto& c : fp.comps)
    if (!c.num.is_zero()) live.push_back(&c);
  if (live.size() < 2) return true;
  // A bare monomial component leaves only monomial common factors, and the
  // joint monomial content is already removed.
  for (auto* c : live)
    if (c->num.is_monomial() && std::all_of(c->pow.begin(), c->pow.end(), [](long p) { return p == 0; })) return true;
  std::vector<long> deg(live.size(), fp.degree);
  auto eval = [&](std::size_t k, const std::vector<std::uint64_t>& pt) {
    const auto& c = *live[k];
    std::uint64_t v = evaluate_mod(c.num, pt);
    for (std::size_t i = 0; i <= fp.n; ++i)
      if (c.mono[i]) v = modp::mul(v, modp::pow(pt[i], static_cast<std::uint64_t>(c.mono[i])));
    for (std::size_t j = 0; j < fp.factors.size(); ++j)
      if (c.pow[j]) v = modp::mul(v, modp::pow(evaluate_mod(fp.factors[j], pt), static_cast<std::uint64_t>(c.pow[j])));
    return v;
  };
  return gcd_probe_eval(fp.n + 1, deg, eval, opt.trials, opt.seed) == 0;
}

}  // namespace detail

// Degree of the projectivization of f, and whether the gcd probe certified
// that no common factor remains.
inline ProjectiveDegree projective_degree(const RationalMap& f, const ProbeOptions& opt = {}) {
  auto fp = detail::factored_projective(f);
  return {fp.degree, detail::probe_factored(fp, opt)};
}

// Homogeneous tuple (p_1 : ... : p_n : p_{n+1}) representing f.
inline ProjectiveForm projectivize(const RationalMap& f, const ProbeOptions& opt = {}) {
  auto fp = detail::factored_projective(f);
  ProjectiveForm pf;
  pf.vars = f.vars();
  pf.vars.push_back(homogenizing_name(f.vars()));
  pf.degree = fp.degree;
  pf.exact = detail::probe_factored(fp, opt);
  for (const auto& c : fp.comps) {
    if (c.num.is_zero()) {
      pf.polys.push_back(c.num);
      continue;
    }
    Poly p = c.num.mul_mono(c.mono);
    for (std::size_t k = 0; k < fp.factors.size(); ++k)
      if (c.pow[k]) p = p * fp.factors[k].pow(static_cast<unsigned long>(c.pow[k]));
    pf.polys.push_back(std::move(p));
  }
  return pf;
}

struct DegreeEntry {
  long n = 0;
  long degree = 0;
  bool exact = true;
};

// Projective degrees of f^1 .. f^nmax.
inline std::vector<DegreeEntry> degree_sequence_rational(const RationalMap& f, long nmax, const ProbeOptions& opt = {}) {
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  std::vector<DegreeEntry> out;
  RationalMap it = f;
  for (long n = 1; n <= nmax; ++n) {
    try {
      if (n > 1) it = compose(f, it);
      auto d = projective_degree(it, opt);
      out.push_back({n, d.degree, d.exact});
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(std::string(e.what()) + " at N=" + std::to_string(n), n - 1);
    }
  }
  return out;
}

// phi_inv o f o phi, after checking that phi o phi_inv is the identity.
inline RationalMap conjugate(const RationalMap& f, const RationalMap& phi, const RationalMap& phi_inv) {
  if (!compose(phi, phi_inv).is_identity()) throw DomainError("phi_inv is not inverse to phi");
  return compose(phi_inv, compose(f, phi));
}

struct LaurentEntry {
  long n = 0;
  bool laurent = false;
  std::vector<Mono> monomial_dens;  // per component
};

inline std::vector<LaurentEntry> check_laurent(const RationalMap& f, long nmax) {
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  std::vector<LaurentEntry> out;
  RationalMap it = f;
  for (long n = 1; n <= nmax; ++n) {
    if (n > 1) it = compose(f, it);
    LaurentEntry e{n, true, {}};
    for (const auto& c : it.components()) {
      e.laurent = e.laurent && c.is_laurent();
      e.monomial_dens.push_back(c.monomial_den());
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<std::string> default_var_names(std::size_t n) {
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  if (n == 4) return {"w", "x", "y", "z"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

// The affine monomial map x_i -> prod_j x_j^a_ij.
inline RationalMap monomial_to_rational(const IntMatrix& a, std::vector<std::string> vars = {}) {
  std::size_t n = a.size();
  if (vars.empty()) vars = default_var_names(n);
  std::vector<RationalFn> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Mono num, den;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).fits_sint_p()) throw DomainError("exponent overflow");
      long v = a(i, j).get_si();
      if (v > 0) num[j] = detail::checked_exponent(v);
      else den[j] = detail::checked_exponent(-v);
    }
    comps.push_back(RationalFn::laurent(Poly::monomial(n, num, 1), den));
  }
  return RationalMap(std::move(vars), std::move(comps));
}

}  // namespace algent
