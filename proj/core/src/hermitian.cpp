#include "diskwalk/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "diskwalk/errors.hpp"

namespace diskwalk {

namespace {

constexpr int max_sweeps = 100;
constexpr double hermitian_tol = 1e-9;
constexpr double off_diagonal_tol = 1e-12;

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One unitary similarity zeroing a(p, q): a phase on coordinate q makes a(p, q) real,
// then a real Jacobi rotation in the (p, q) plane.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.size();
  const double magnitude = std::abs(a(p, q));
  if (magnitude == 0.0) return;
  const std::complex<double> phase = a(p, q) / magnitude;
  for (std::size_t k = 0; k < n; ++k) {
    a(k, q) *= std::conj(phase);
    a(q, k) *= phase;
  }
  a(p, q) = magnitude;
  a(q, p) = magnitude;
  a(q, q) = a(q, q).real();

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const auto kp = a(k, p);
    const auto kq = a(k, q);
    a(k, p) = c * kp - s * kq;
    a(k, q) = s * kp + c * kq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto pk = a(p, k);
    const auto qk = a(q, k);
    a(p, k) = c * pk - s * qk;
    a(q, k) = s * pk + c * qk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;
}

}  // namespace

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  }
  return d;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.hermitian_defect() > hermitian_tol) throw domain_error("matrix is not Hermitian");
  ComplexMatrix a = h;
  const std::size_t n = a.size();
  const double scale = a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_mass(a) >= off_diagonal_tol * scale && scale > 0.0) {
    if (++sweep > max_sweeps) throw convergence_error("Hermitian Jacobi solver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

double min_eigenvalue(const ComplexMatrix& h) {
  if (h.size() == 0) throw domain_error("min_eigenvalue of an empty matrix");
  return hermitian_eigenvalues(h).front();
}

}  // namespace diskwalk
