#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "algent/linalg.hpp"

namespace algent {

// Monomial map x -> x^A: component i is prod_j x_j^{a_ij}.
class MonomialMap {
 public:
  explicit MonomialMap(IntMatrix a) : a_(std::move(a)) {
    if (determinant(a_) == 0) throw DomainError("monomial map requires a nonsingular matrix");
  }
  const IntMatrix& matrix() const { return a_; }
  std::size_t dimension() const { return a_.size(); }

 private:
  IntMatrix a_;
};

namespace detail {

inline Int column_max(const IntMatrix& a, std::size_t j) {
  Int m(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (-a(i, j) > m) m = -a(i, j);
  return m;
}

inline Int row_sum(const IntMatrix& a, std::size_t i) {
  Int s(0);
  for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j);
  return s;
}

inline Int row_sum_max(const IntMatrix& a) {
  Int m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int s = row_sum(a, i);
    if (s > m) m = s;
  }
  return m;
}

}  // namespace detail

// Degree of the projective monomial map of A:
//   D(A) = sum_j max(0, max_i -a_ij) + max(0, max_i sum_j a_ij).
inline Int degree(const IntMatrix& a) {
  Int d = detail::row_sum_max(a);
  for (std::size_t j = 0; j < a.size(); ++j) d += detail::column_max(a, j);
  return d;
}

// Exponent matrix of the projectivized map; every row sums to `degree`.
struct HomExpMatrix {
  IntMatrix b;
  Int degree;
};

inline HomExpMatrix homogenize(const IntMatrix& a) {
  const std::size_t n = a.size();
  HomExpMatrix h{IntMatrix(n + 1), degree(a)};
  std::vector<Int> shift(n);
  for (std::size_t j = 0; j < n; ++j) shift[j] = detail::column_max(a, j);
  for (std::size_t i = 0; i < n; ++i) {
    Int used(0);
    for (std::size_t j = 0; j < n; ++j) {
      h.b(i, j) = a(i, j) + shift[j];
      used += h.b(i, j);
    }
    h.b(i, n) = h.degree - used;
  }
  Int used(0);
  for (std::size_t j = 0; j < n; ++j) {
    h.b(n, j) = shift[j];
    used += shift[j];
  }
  h.b(n, n) = h.degree - used;
  return h;
}

// Empty string when the invariants hold, otherwise a description.
inline std::string validate(const HomExpMatrix& h) {
  const std::size_t m = h.b.size();
  if (h.degree <= 0) return "degree must be positive";
  for (std::size_t i = 0; i < m; ++i) {
    Int s(0);
    for (std::size_t j = 0; j < m; ++j) {
      if (h.b(i, j) < 0) return "negative entry";
      s += h.b(i, j);
    }
    if (s != h.degree) return "row " + std::to_string(i) + " does not sum to the degree";
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool zero = false;
    for (std::size_t i = 0; i < m && !zero; ++i) zero = h.b(i, j) == 0;
    if (!zero) return "column " + std::to_string(j) + " has a common monomial factor";
  }
  return {};
}

// [D(A^1), ..., D(A^nmax)]
inline std::vector<Int> degree_sequence(const IntMatrix& a, std::size_t nmax) {
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  std::vector<Int> out;
  out.reserve(nmax);
  PowerSequence<Int> powers(a);
  for (std::size_t k = 0; k < nmax; ++k) out.push_back(degree(powers.next()));
  return out;
}

// c_N = (last-row sum of A^N) - trace(A^N) for N = 0..nmax.
inline std::vector<Int> cN_sequence(const IntMatrix& a, std::size_t nmax) {
  std::vector<Int> out;
  out.reserve(nmax + 1);
  PowerSequence<Int> powers(a);
  const std::size_t last = a.size() - 1;
  out.push_back(detail::row_sum(powers.current(), last) - trace(powers.current()));
  for (std::size_t k = 0; k < nmax; ++k) {
    const IntMatrix& p = powers.next();
    out.push_back(detail::row_sum(p, last) - trace(p));
  }
  return out;
}

// Which arguments attain each Max(0, ...) in the degree formula.
struct Attainment {
  std::vector<std::size_t> rows;  // indices attaining the maximum value
  bool zero = false;              // the 0 branch attains it
  friend bool operator==(const Attainment&, const Attainment&) = default;
};

struct ChamberKey {
  std::vector<Attainment> columns;  // Max_i(-a_ij) per column j
  Attainment row_sum;               // Max_i(sum_j a_ij)
  friend bool operator==(const ChamberKey&, const ChamberKey&) = default;
};

inline ChamberKey chamber_key(const IntMatrix& a) {
  const std::size_t n = a.size();
  ChamberKey key;
  key.columns.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int m = detail::column_max(a, j);
    key.columns[j].zero = m == 0;
    for (std::size_t i = 0; i < n; ++i)
      if (-a(i, j) == m) key.columns[j].rows.push_back(i);
  }
  Int m = detail::row_sum_max(a);
  key.row_sum.zero = m == 0;
  for (std::size_t i = 0; i < n; ++i)
    if (detail::row_sum(a, i) == m) key.row_sum.rows.push_back(i);
  return key;
}

// The linear functional L_C of the chamber, evaluated at M. Each Max is
// replaced by its first recorded attaining argument (0 when only the zero
// branch attains).
inline Int chamber_value(const ChamberKey& key, const IntMatrix& m) {
  Int v(0);
  for (std::size_t j = 0; j < key.columns.size(); ++j) {
    const auto& c = key.columns[j];
    if (!c.rows.empty()) v -= m(c.rows.front(), j);
  }
  if (!key.row_sum.rows.empty()) v += detail::row_sum(m, key.row_sum.rows.front());
  return v;
}

// True when every column maximum is attained on the diagonal and the row-sum
// maximum by the last row; on this chamber D(A) equals c_N.
inline bool is_diagonal_last_row_chamber(const ChamberKey& key) {
  const std::size_t n = key.columns.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& rows = key.columns[j].rows;
    if (std::find(rows.begin(), rows.end(), j) == rows.end()) return false;
  }
  const auto& r = key.row_sum.rows;
  return std::find(r.begin(), r.end(), n - 1) != r.end();
}

// ---------------------------------------------------------------------------
// Signatures: zero/nonzero patterns of homogeneous coordinates.

struct Signature {
  std::vector<std::uint8_t> bits;  // 1 = coordinate nonzero
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
  bool all_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 0; });
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? "," : "") + std::to_string(bits[i]);
    return s + ")";
  }
};

struct Dead {
  friend bool operator==(const Dead&, const Dead&) = default;
};
using SignatureStep = std::variant<Signature, Dead>;

inline SignatureStep signature_step(const HomExpMatrix& h, const Signature& s) {
  const std::size_t m = h.b.size();
  if (s.bits.size() != m) throw DomainError("signature length does not match the map");
  if (s.all_zero()) throw DomainError("the all-zero signature is not a point");
  Signature out{std::vector<std::uint8_t>(m, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    bool alive = true;
    for (std::size_t j = 0; j < m && alive; ++j)
      if (h.b(i, j) > 0 && !s.bits[j]) alive = false;
    out.bits[i] = alive ? 1 : 0;
  }
  if (out.all_zero()) return Dead{};
  return out;
}

enum class Fate { kDies, kPeriodic };

struct SignatureOrbit {
  Signature start;
  Fate fate = Fate::kDies;
  std::size_t steps = 0;  // death step, or transient length for periodic orbits
  std::size_t period = 0;
  // Steps needed to decide the fate: death step, or transient + period.
  std::size_t resolution() const { return fate == Fate::kDies ? steps : steps + period; }
};

struct SignatureReport {
  std::vector<SignatureOrbit> orbits;  // one per nonzero signature
  std::vector<Signature> survivors;    // full forward orbit stays defined
  std::size_t bound = 0;               // 2^(n+1)
  std::size_t max_resolution = 0;
};

inline SignatureReport signature_analysis(const HomExpMatrix& h) {
  const std::size_t m = h.b.size();
  if (m >= 24) throw DomainError("signature enumeration is limited to dimension < 23");
  SignatureReport report;
  report.bound = std::size_t{1} << m;
  for (std::size_t code = 1; code < report.bound; ++code) {
    Signature s{std::vector<std::uint8_t>(m)};
    // bit m-1-i of code is coordinate i, so codes enumerate in lexicographic order
    for (std::size_t i = 0; i < m; ++i) s.bits[i] = (code >> (m - 1 - i)) & 1U;
    SignatureOrbit orbit{s};
    std::map<Signature, std::size_t> seen{{s, 0}};
    Signature cur = s;
    for (std::size_t t = 1;; ++t) {
      auto next = signature_step(h, cur);
      if (std::holds_alternative<Dead>(next)) {
        orbit.fate = Fate::kDies;
        orbit.steps = t;
        break;
      }
      cur = std::get<Signature>(std::move(next));
      auto [it, fresh] = seen.emplace(cur, t);
      if (!fresh) {
        orbit.fate = Fate::kPeriodic;
        orbit.steps = it->second;
        orbit.period = t - it->second;
        break;
      }
    }
    report.max_resolution = std::max(report.max_resolution, orbit.resolution());
    if (orbit.fate == Fate::kPeriodic) report.survivors.push_back(s);
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

}  // namespace algent
