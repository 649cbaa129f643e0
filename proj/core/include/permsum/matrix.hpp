#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace permsum {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major, rows and columns indexed 0..n-1.
// Instances are immutable values: every operation returns a new matrix, so
// matrices are safe to share between threads without synchronization.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  static DenseMatrix zero(std::size_t n);
  static DenseMatrix identity(std::size_t n);

  // Takes ownership of a row-major entry grid; entries.size() must be n*n.
  static DenseMatrix from_entries(std::size_t n, std::vector<Complex> entries);

  // Convenience for literal matrices in call sites and tests.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  DenseMatrix(std::size_t n, std::vector<Complex> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_scale(const Complex& s, const DenseMatrix& a);

// Conjugate transpose.
DenseMatrix dagger(const DenseMatrix& a);

Complex trace(const DenseMatrix& a);

// Kronecker product; block (j,k) of the result equals a(j,k) * b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const DenseMatrix& a, const DenseMatrix& b);

// Max-entry norm of a - b; the residual measure used throughout.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

struct UnitarityCheck {
  bool unitary = false;
  double residual = 0.0;  // max-entry norm of a^dagger a - I
};

// tol must be positive. The residual is reported either way.
UnitarityCheck is_unitary(const DenseMatrix& a, double tol);

}  // namespace permsum
