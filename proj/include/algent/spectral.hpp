#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "algent/linalg.hpp"
#include "algent/monomial.hpp"
#include "algent/roots.hpp"

namespace algent {

struct Estimate {
  double value = 0;
  double error = 0;  // |true - value| <= error, up to floating rounding
};

struct SpectralOptions {
  double tol = 1e-12;
  std::size_t gelfand_cap = 32;
};

namespace detail {

inline Estimate log_estimate(double lo, double value, double hi) {
  const double lv = std::log(value);
  double err = std::log(hi) - lv;
  if (lo > 0) err = std::max(err, lv - std::log(lo));
  else err = HUGE_VAL;
  return {lv, err};
}

// Largest root modulus with an enclosure derived from all roots' intervals.
inline Estimate max_modulus(const RootEstimates& r) {
  double lo = 0, hi = 0, v = 0;
  for (const auto& e : r.roots) {
    lo = std::max(lo, e.modulus_lo);
    hi = std::max(hi, e.modulus_hi);
    v = std::max(v, std::abs(e.value));
  }
  return {v, std::max(hi - v, v - lo)};
}

}  // namespace detail

// log ||A^N||_1 / N for N = 1..cap. Always >= log spectral radius.
inline std::vector<double> gelfand_profile(const IntMatrix& a, std::size_t cap) {
  std::vector<double> out;
  PowerSequence<Int> powers(a);
  for (std::size_t n = 1; n <= cap; ++n) out.push_back(log_abs(norm1(powers.next())) / static_cast<double>(n));
  return out;
}

// Spectral radius from the roots of the exact characteristic polynomial,
// checked against the Gelfand upper bounds ||A^N||_1^(1/N).
inline Estimate spectral_radius(const IntMatrix& a, const SpectralOptions& opt = {}) {
  Estimate rho = detail::max_modulus(poly_roots(char_poly(a), opt.tol));
  if (rho.value > 0) {
    const double floor_log = std::log(std::max(rho.value - rho.error, 1e-300));
    const auto profile = gelfand_profile(a, opt.gelfand_cap);
    for (std::size_t n = 0; n < profile.size(); ++n)
      if (profile[n] < floor_log - 1e-12)
        throw DomainError("spectral radius exceeds the Gelfand bound at N=" + std::to_string(n + 1));
  }
  return rho;
}

// rho(A^-1) = rho(adj A) / |det A|, kept in integer arithmetic up to the roots.
inline Estimate spectral_radius_inverse(const IntMatrix& a, const SpectralOptions& opt = {}) {
  const Int det = determinant(a);
  if (det == 0) throw DomainError("singular matrix has no inverse");
  Estimate r = spectral_radius(adjugate(a), opt);
  const double d = std::fabs(det.get_d());
  return {r.value / d, r.error / d};
}

inline void require_nonsingular(const IntMatrix& a) {
  if (determinant(a) == 0) throw DomainError("matrix is singular");
}

// Algebraic entropy of the monomial map of A, in nats: log spectral radius.
inline Estimate algebraic_entropy(const IntMatrix& a, const SpectralOptions& opt = {}) {
  require_nonsingular(a);
  Estimate rho = spectral_radius(a, opt);
  return detail::log_estimate(rho.value - rho.error, rho.value, rho.value + rho.error);
}

struct DynamicalDegree {
  std::size_t k = 0;
  Estimate log_value;  // log spectral radius of the k-th compound matrix
  bool conjectural = false;
};

// k -> log |lambda_1 ... lambda_k| via compound matrices. Values for 1 < k < n
// are conjectural as dynamical degrees.
inline std::vector<DynamicalDegree> dynamical_degrees(const IntMatrix& a, const SpectralOptions& opt = {}) {
  require_nonsingular(a);
  const std::size_t n = a.size();
  std::vector<DynamicalDegree> out;
  for (std::size_t k = 1; k <= n; ++k) {
    DynamicalDegree dd;
    dd.k = k;
    dd.conjectural = k > 1 && k < n;
    if (k == n) {
      // 1x1 compound: exactly |det A|
      dd.log_value = {log_abs(determinant(a)), 0.0};
    } else {
      Estimate rho = spectral_radius(compound_matrix(a, k), opt);
      dd.log_value = detail::log_estimate(rho.value - rho.error, rho.value, rho.value + rho.error);
    }
    out.push_back(dd);
  }
  return out;
}

struct ToralEntropy {
  Estimate value;           // reported value
  Estimate root_route;      // sum of log|lambda| over |lambda| > 1
  Estimate compound_route;  // max_k log rho(compound(A, k)), k = 0 gives 0
  bool ambiguous = false;   // some |lambda| enclosure straddles 1
  std::string method;
};

// Topological entropy of the toral endomorphism of A by two independent
// routes; they must agree within their combined error bounds.
inline ToralEntropy toral_entropy(const IntMatrix& a, const SpectralOptions& opt = {}) {
  require_nonsingular(a);
  ToralEntropy out;
  const auto roots = poly_roots(char_poly(a), opt.tol);
  for (const auto& r : roots.roots) {
    if (r.modulus_lo > 1) {
      auto e = detail::log_estimate(r.modulus_lo, std::abs(r.value), r.modulus_hi);
      out.root_route.value += e.value;
      out.root_route.error += e.error;
    } else if (r.modulus_hi >= 1) {
      // contributes somewhere in [0, log hi]
      out.ambiguous = true;
      out.root_route.error += std::log(r.modulus_hi);
    }
  }
  Estimate best{0, 0};
  for (const auto& dd : dynamical_degrees(a, opt))
    if (dd.log_value.value > best.value) best = dd.log_value;
  out.compound_route = best;
  const double gap = std::fabs(out.root_route.value - out.compound_route.value);
  if (gap > out.root_route.error + out.compound_route.error + 1e-12)
    throw DomainError("toral entropy routes disagree by " + std::to_string(gap));
  if (a.size() <= 8) {
    out.value = out.compound_route;
    out.method = "compound";
  } else {
    out.value = out.root_route;
    out.method = "roots";
  }
  return out;
}

struct EntropyReport {
  Estimate algebraic_entropy;
  ToralEntropy toral;
  std::vector<DynamicalDegree> dynamical_degrees;
};

inline EntropyReport entropy_report(const IntMatrix& a, const SpectralOptions& opt = {}) {
  EntropyReport r;
  r.dynamical_degrees = dynamical_degrees(a, opt);
  r.algebraic_entropy = algebraic_entropy(a, opt);
  r.toral = toral_entropy(a, opt);
  return r;
}

struct ConvergenceProfile {
  std::vector<std::pair<std::size_t, double>> points;  // (N, log D(A^N) / N)
  double log_spectral_radius = 0;
  double deviation = 0;  // at N = nmax
};

inline ConvergenceProfile convergence_profile(const IntMatrix& a, std::size_t nmax, const SpectralOptions& opt = {}) {
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  ConvergenceProfile p;
  const auto degs = degree_sequence(a, nmax);
  for (std::size_t n = 1; n <= nmax; ++n) p.points.emplace_back(n, log_abs(degs[n - 1]) / static_cast<double>(n));
  p.log_spectral_radius = std::log(spectral_radius(a, opt).value);
  p.deviation = p.points.back().second - p.log_spectral_radius;
  return p;
}

}  // namespace algent
