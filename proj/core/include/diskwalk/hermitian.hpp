#pragma once

#include <complex>
#include <vector>

namespace diskwalk {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double frobenius_norm() const;
  /// max |H − H*| over all entries.
  double hermitian_defect() const;

private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> data_;
};

/// Eigenvalues (ascending) of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Converged when the off-diagonal Frobenius mass falls below 1e−12·‖H‖; throws
/// convergence_error after 100 sweeps and domain_error if H is not Hermitian within 1e−9.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

double min_eigenvalue(const ComplexMatrix& h);

}  // namespace diskwalk
