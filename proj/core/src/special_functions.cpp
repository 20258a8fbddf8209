#include "diskwalk/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskwalk/errors.hpp"

namespace diskwalk {

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || std::hypot(re, im) > 1.0 + boundary_slack) {
    throw domain_error("point outside the closed unit disk: (" + std::to_string(re) + ", " +
                       std::to_string(im) + ")");
  }
}

double DiskPoint::r() const noexcept { return std::hypot(re_, im_); }

double DiskPoint::theta() const noexcept { return std::atan2(im_, re_); }

void DiscIndex::validate() const {
  if (m < 0 || n < 0) throw domain_error("disc polynomial indices must be nonnegative");
  if (!(alpha > -1.0)) throw domain_error("disc polynomial index alpha must exceed -1");
}

double pochhammer(double a, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double binomial_alpha(double alpha, int m) {
  double b = 1.0;
  for (int k = 1; k <= m; ++k) b *= (alpha + k) / k;
  return b;
}

double jacobi_R(int k, double alpha, double beta, double t) {
  if (k < 0) throw domain_error("jacobi_R: negative degree");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw domain_error("jacobi_R: parameters must exceed -1");
  if (!(std::abs(t) <= 1.0 + boundary_slack)) throw domain_error("jacobi_R: argument outside [-1, 1]");
  if (k == 0) return 1.0;

  const double ab = alpha + beta;
  double p_prev = 1.0;
  double p = (alpha + 1.0) + (ab + 2.0) * (t - 1.0) / 2.0;
  for (int j = 2; j <= k; ++j) {
    const double s = 2.0 * j + ab;
    const double a1 = 2.0 * j * (j + ab) * (s - 2.0);
    const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (s - 1.0) * s * (s - 2.0);
    const double a4 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * s;
    const double next = ((a2 + a3 * t) * p - a4 * p_prev) / a1;
    p_prev = p;
    p = next;
  }
  return p / binomial_alpha(alpha, k);
}

double disc_poly_at_origin(const DiscIndex& idx) {
  idx.validate();
  if (idx.m != idx.n) return 0.0;
  const double v = 1.0 / binomial_alpha(idx.alpha, idx.n);
  return (idx.n % 2 == 0) ? v : -v;
}

complex disc_poly(const DiscIndex& idx, const DiskPoint& z) {
  idx.validate();
  const complex w = z.z();
  if (w == complex{0.0, 0.0}) return disc_poly_at_origin(idx);

  const int lo = std::min(idx.m, idx.n);
  const int gap = std::abs(idx.m - idx.n);
  const double r2 = std::norm(w);
  // Rounding can push 2|z|²−1 a hair above 1 on the boundary.
  const double t = std::min(1.0, 2.0 * r2 - 1.0);
  const double radial = jacobi_R(lo, idx.alpha, gap, t);
  const complex base = idx.m >= idx.n ? w : std::conj(w);
  complex power{1.0, 0.0};
  for (int k = 0; k < gap; ++k) power *= base;
  return power * radial;
}

double disc_norm_h(const DiscIndex& idx) {
  idx.validate();
  return (idx.m + idx.n + idx.alpha + 1.0) / (idx.alpha + 1.0) * binomial_alpha(idx.alpha, idx.m) *
         binomial_alpha(idx.alpha, idx.n);
}

double c_factor(int m, int n, double alpha) {
  if (m < 0 || n < 0) throw domain_error("c_factor: negative index");
  if (!(alpha > -1.0)) throw domain_error("c_factor: alpha must exceed -1");
  return m * (n + alpha + 1.0) / (alpha + 1.0);
}

complex disc_poly_dz(const DiscIndex& idx, const DiskPoint& z) {
  idx.validate();
  if (idx.m == 0) return 0.0;
  return c_factor(idx.m, idx.n, idx.alpha) * disc_poly({idx.m - 1, idx.n, idx.alpha + 1.0}, z);
}

complex disc_poly_dzbar(const DiscIndex& idx, const DiskPoint& z) {
  idx.validate();
  if (idx.n == 0) return 0.0;
  return c_factor(idx.n, idx.m, idx.alpha) * disc_poly({idx.m, idx.n - 1, idx.alpha + 1.0}, z);
}

}  // namespace diskwalk
