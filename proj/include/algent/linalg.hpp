#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algent/numbers.hpp"
#include "algent/upoly.hpp"

namespace algent {

// Square matrix over an exact ring (Int or Rat), row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {
    if (n == 0) throw DomainError("matrix dimension must be at least 1");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw DomainError("matrix must be square");
      std::size_t j = 0;
      for (const auto& v : row) a_[i * n_ + j++] = v;
      ++i;
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.n_) throw DomainError("matrix must be square");
      for (std::size_t j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const T> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << algent::to_string((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.size() != b.size()) throw DomainError("matrix dimension mismatch");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mat_mul(a, b);
}

// Yields A, A^2, A^3, ... with one multiplication per step.
template <typename T>
class PowerSequence {
 public:
  explicit PowerSequence(Matrix<T> a) : base_(std::move(a)), current_(Matrix<T>::identity(base_.size())) {}

  const Matrix<T>& next() {
    current_ = mat_mul(current_, base_);
    ++exponent_;
    return current_;
  }
  const Matrix<T>& current() const { return current_; }
  std::size_t exponent() const { return exponent_; }

 private:
  Matrix<T> base_;
  Matrix<T> current_;
  std::size_t exponent_ = 0;
};

template <typename T>
Matrix<T> mat_pow(const Matrix<T>& a, std::size_t n) {
  if (n == 0) return Matrix<T>::identity(a.size());
  Matrix<T> result = Matrix<T>::identity(a.size());
  Matrix<T> base = a;
  bool first = true;
  while (n) {
    if (n & 1U) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    n >>= 1U;
    if (n) base = mat_mul(base, base);
  }
  return result;
}

template <typename T>
T trace(const Matrix<T>& a) {
  T t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

// Fraction-free Bareiss elimination with row pivoting.
inline Int determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Int(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(tI - A) by the Faddeev-LeVerrier recursion; every division is exact.
inline IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    IntMatrix am = mat_mul(a, next);
    Int tr = trace(am);
    Int kk(static_cast<unsigned long>(k));
    mpz_divexact(tr.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -tr;
    m = std::move(next);
  }
  return IntPolynomial(std::move(c));
}

// p(A) by Horner's rule.
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix acc(n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = mat_mul(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

// Lexicographically ordered k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline IntMatrix submatrix(const IntMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  IntMatrix s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

// k-th compound (exterior power) matrix: all k x k minors, rows and columns
// indexed by k-subsets in lexicographic order.
inline IntMatrix compound_matrix(const IntMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k < 1 || k > n) throw DomainError("compound order out of range");
  const auto subsets = k_subsets(n, k);
  IntMatrix c(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) c(i, j) = determinant(submatrix(a, subsets[i], subsets[j]));
  return c;
}

inline IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t s = 0; s < n; ++s)
        if (s != i) cols.push_back(s);
      Int minor = determinant(submatrix(a, rows, cols));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : Int(-minor);
    }
  }
  return adj;
}

inline RatMatrix inverse_rational(const IntMatrix& a) {
  Int det = determinant(a);
  if (det == 0) throw DomainError("singular matrix has no inverse");
  IntMatrix adj = adjugate(a);
  RatMatrix inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      Rat v(adj(i, j), det);
      v.canonicalize();
      inv(i, j) = v;
    }
  return inv;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

// Induced 1-norm: maximum absolute column sum.
inline Int norm1(const IntMatrix& a) {
  Int best(0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

}  // namespace algent
