#pragma once

#include <complex>

namespace diskwalk {

using complex = std::complex<double>;

/// Slack on |z| ≤ 1 absorbing rounding in coordinate conversions.
inline constexpr double boundary_slack = 1e-12;

/// A point z = x + iy of the closed unit disk.
class DiskPoint {
public:
  /// Throws domain_error when |z| > 1 + boundary_slack.
  DiskPoint(double re, double im);
  explicit DiskPoint(complex z) : DiskPoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  complex z() const noexcept { return {re_, im_}; }
  double r() const noexcept;
  double theta() const noexcept;
  DiskPoint conj() const noexcept { return DiskPoint(re_, -im_, unchecked{}); }

private:
  struct unchecked {};
  DiskPoint(double re, double im, unchecked) noexcept : re_(re), im_(im) {}

  double re_;
  double im_;
};

/// Index (m, n, α) of the disc polynomial R^α_{m,n}.
struct DiscIndex {
  int m;
  int n;
  double alpha;

  /// Throws domain_error unless m, n ≥ 0 and α > −1.
  void validate() const;
};

/// Rising factorial (a)_n = a(a+1)...(a+n−1), with (a)_0 = 1.
double pochhammer(double a, int n);

/// (α+1)_m / m!, i.e. the generalized binomial C(α+m, α).
double binomial_alpha(double alpha, int m);

/// Jacobi polynomial P_k^{(α,β)}(t) normalized so that the value at t = 1 is 1.
///
/// Uses the ascending three-term recurrence and divides by P_k^{(α,β)}(1) = (α+1)_k/k!.
double jacobi_R(int k, double alpha, double beta, double t);

/// Disc (Zernike) polynomial R^α_{m,n}(z) = z^{m−n} R_n^{(α, m−n)}(2|z|²−1) for m ≥ n,
/// and the conjugate-symmetric form for m < n.
complex disc_poly(const DiscIndex& idx, const DiskPoint& z);

/// R^α_{m,n}(0): zero off the diagonal, (−1)^n n!/(α+1)_n on it.
double disc_poly_at_origin(const DiscIndex& idx);

/// Reciprocal squared norm of R^α_{m,n} in L²(dν_α).
double disc_norm_h(const DiscIndex& idx);

/// c_α(m, n) = m(n+α+1)/(α+1).
double c_factor(int m, int n, double alpha);

/// Wirtinger derivatives of R^α_{m,n}, via the index-lowering identities
/// D_z R^α_{m,n} = c_α(m,n) R^{α+1}_{m−1,n} and D_z̄ R^α_{m,n} = c_α(n,m) R^{α+1}_{m,n−1}.
complex disc_poly_dz(const DiscIndex& idx, const DiskPoint& z);
complex disc_poly_dzbar(const DiscIndex& idx, const DiskPoint& z);

}  // namespace diskwalk
