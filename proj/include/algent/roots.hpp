#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "algent/upoly.hpp"

namespace algent {

struct RootEstimate {
  std::complex<double> value;
  double residual = 0;   // |p(value)| on the input polynomial
  double modulus_lo = 0;  // a root of p has modulus within [lo, hi]
  double modulus_hi = 0;
  int multiplicity = 1;
};

// One entry per root counted with multiplicity.
struct RootEstimates {
  std::vector<RootEstimate> roots;
  double max_residual = 0;
  int iterations = 0;
};

namespace detail {

using cld = std::complex<long double>;

inline std::vector<long double> to_long_double(const RatPolynomial& p) {
  std::vector<long double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs())
    c.push_back(std::strtold(v.get_num().get_str().c_str(), nullptr) / std::strtold(v.get_den().get_str().c_str(), nullptr));
  return c;
}

inline cld horner(const std::vector<long double>& c, cld z) {
  cld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline long double abs_horner(const std::vector<long double>& c, long double r) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::fabs(*it);
  return acc;
}

struct FactorRoots {
  std::vector<cld> z;
  int iterations = 0;
};

// Aberth-Ehrlich iteration on a square-free monic factor. Initial guesses sit
// on a circle of radius 1 + max|c_i| rotated by a fixed offset so the result
// is deterministic.
inline FactorRoots aberth(const std::vector<long double>& c, double tol, int max_iter) {
  const std::size_t d = c.size() - 1;
  FactorRoots out;
  if (d == 1) {
    out.z = {cld(-c[0] / c[1], 0)};
    return out;
  }
  long double bound = 0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::fabs(c[i] / c[d]));
  const long double radius = 1 + bound;
  const long double offset = 0.5L * std::numbers::sqrt2_v<long double>;
  std::vector<cld> deriv(d);
  for (std::size_t i = 1; i <= d; ++i) deriv[i - 1] = c[i] * static_cast<long double>(i);
  out.z.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + offset;
    out.z[k] = std::polar(radius, ang);
  }
  auto eval_deriv = [&](cld z) {
    cld acc = 0;
    for (auto it = deriv.rbegin(); it != deriv.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  const long double eps = std::numeric_limits<long double>::epsilon();
  int settled = 0;
  for (int it = 1; it <= max_iter; ++it) {
    long double max_step = 0;
    bool residual_ok = true;
    for (std::size_t k = 0; k < d; ++k) {
      cld z = out.z[k];
      cld pz = horner(c, z);
      long double scale = abs_horner(c, std::abs(z));
      if (std::abs(pz) > tol * scale) residual_ok = false;
      if (pz == cld(0)) continue;
      cld ratio = pz / eval_deriv(z);
      cld sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += cld(1) / (z - out.z[j]);
      cld step = ratio / (cld(1) - ratio * sum);
      out.z[k] = z - step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z)));
    }
    out.iterations = it;
    if (residual_ok && max_step < 64 * eps) {
      if (++settled >= 2) return out;
    } else {
      settled = 0;
    }
  }
  long double worst = 0;
  for (auto z : out.z) worst = std::max(worst, std::abs(horner(c, z)) / abs_horner(c, std::abs(z)));
  if (worst > tol) throw ConvergenceError("root iteration did not converge within the iteration cap");
  return out;
}

}  // namespace detail

// All complex roots of p with modulus enclosures. Roots are found on the
// square-free factors, so repeated roots are simple for the iteration.
// `tol` bounds the relative residual |f(z)| / sum |c_i||z|^i on each factor.
inline RootEstimates poly_roots(const IntPolynomial& p, double tol = 1e-12, int max_iter = 2000) {
  if (p.degree() < 1) throw DomainError("poly_roots needs a nonconstant polynomial");
  RootEstimates out;
  const auto original = detail::to_long_double(to_rational(p));
  const long double eps = std::numeric_limits<long double>::epsilon();
  for (const auto& [factor, mult] : squarefree_decomposition(to_rational(p))) {
    const auto c = detail::to_long_double(factor);
    const std::size_t d = c.size() - 1;
    auto fr = detail::aberth(c, tol, max_iter);
    out.iterations = std::max(out.iterations, fr.iterations);
    for (std::size_t k = 0; k < d; ++k) {
      const detail::cld z = fr.z[k];
      // Weierstrass inclusion: a disk of radius d|f(z)| / |prod (z - z_j)|
      // about z holds a root; f(z) is inflated by its rounding error bound.
      long double fz = std::abs(detail::horner(c, z)) + (4 * static_cast<long double>(d) + 8) * eps * detail::abs_horner(c, std::abs(z));
      long double prod = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) prod *= std::abs(z - fr.z[j]);
      long double r = d == 1 ? fz : static_cast<long double>(d) * fz / prod;
      RootEstimate est;
      est.value = std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      est.residual = static_cast<double>(std::abs(detail::horner(original, z)));
      const long double mod = std::abs(z);
      est.modulus_lo = static_cast<double>(std::max<long double>(0, mod - r));
      est.modulus_hi = static_cast<double>(mod + r);
      est.multiplicity = mult;
      for (int m = 0; m < mult; ++m) out.roots.push_back(est);
      out.max_residual = std::max(out.max_residual, est.residual);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const RootEstimate& a, const RootEstimate& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) > std::abs(b.value);
    return a.value.imag() > b.value.imag();
  });
  return out;
}

}  // namespace algent
