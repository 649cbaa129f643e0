#include "permsum/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace permsum {

DenseMatrix DenseMatrix::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("DenseMatrix: dimension must be positive");
  return DenseMatrix(n, std::vector<Complex>(n * n));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("DenseMatrix: dimension must be positive");
  std::vector<Complex> e(n * n);
  for (std::size_t k = 0; k < n; ++k) e[k * n + k] = 1.0;
  return DenseMatrix(n, std::move(e));
}

DenseMatrix DenseMatrix::from_entries(std::size_t n, std::vector<Complex> entries) {
  if (n == 0) throw std::invalid_argument("DenseMatrix: dimension must be positive");
  if (entries.size() != n * n)
    throw std::invalid_argument("DenseMatrix: entry grid is not n by n");
  return DenseMatrix(n, std::move(entries));
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("DenseMatrix: ragged row list");
    e.insert(e.end(), row.begin(), row.end());
  }
  return from_entries(n, std::move(e));
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b(k, j);
    }
  return DenseMatrix::from_entries(n, std::move(e));
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_add: dimension mismatch");
  std::vector<Complex> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return DenseMatrix::from_entries(a.size(), std::move(e));
}

DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_sub: dimension mismatch");
  std::vector<Complex> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return DenseMatrix::from_entries(a.size(), std::move(e));
}

DenseMatrix mat_scale(const Complex& s, const DenseMatrix& a) {
  std::vector<Complex> e(a.entries());
  for (auto& x : e) x *= s;
  return DenseMatrix::from_entries(a.size(), std::move(e));
}

DenseMatrix dagger(const DenseMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = std::conj(a(i, j));
  return DenseMatrix::from_entries(n, std::move(e));
}

Complex trace(const DenseMatrix& a) {
  Complex t = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) t += a(k, k);
  return t;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          e[(i * nb + k) * n + (j * nb + l)] = aij * b(k, l);
    }
  return DenseMatrix::from_entries(n, std::move(e));
}

Complex hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hs_inner: dimension mismatch");
  Complex t = 0.0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) t += std::conj(ea[i]) * eb[i];
  return t;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

UnitarityCheck is_unitary(const DenseMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tolerance must be positive");
  const std::size_t n = a.size();
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;  // (a^dagger a)(i, j)
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(a(k, i)) * a(k, j);
      if (i == j) dot -= 1.0;
      residual = std::max(residual, std::abs(dot));
    }
  return {residual <= tol, residual};
}

}  // namespace permsum
