#include "diskwalk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "diskwalk/errors.hpp"

namespace diskwalk {

namespace {

constexpr double coefficient_tol = 1e-10;

// Implicit-shift QL on a symmetric tridiagonal matrix. `diag` receives eigenvalues and
// `first` the first component of each normalized eigenvector.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double> off, std::vector<double>& first,
                    int max_iterations) {
  const int n = static_cast<int>(diag.size());
  off.push_back(0.0);
  first.assign(n, 0.0);
  first[0] = 1.0;
  int iterations = 0;
  for (int l = 0; l < n; ++l) {
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iterations > max_iterations) {
        throw convergence_error("Golub-Welsch QL iteration did not converge");
      }
      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        const double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
        const double z1 = first[i + 1];
        first[i + 1] = s * first[i] + c * z1;
        first[i] = c * first[i] - s * z1;
      }
      if (deflated) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

GaussRule gauss_jacobi(int order, double alpha, double beta) {
  if (order < 1) throw domain_error("Gauss-Jacobi order must be at least 1");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw domain_error("Gauss-Jacobi parameters must exceed -1");

  const double ab = alpha + beta;
  std::vector<double> diag(order);
  std::vector<double> off(order > 1 ? order - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    off[k - 1] = 2.0 / s * std::sqrt(k * (k + alpha) * (k + beta) * (k + ab) / ((s - 1.0) * (s + 1.0)));
  }

  std::vector<double> first;
  tridiagonal_ql(diag, off, first, 50 * order);

  const double mass = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                               std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  std::vector<int> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return diag[a] < diag[b]; });
  GaussRule rule;
  for (int k : perm) {
    rule.nodes.push_back(diag[k]);
    rule.weights.push_back(mass * first[k] * first[k]);
  }
  return rule;
}

DiskQuadratureRule::DiskQuadratureRule(double alpha, int radial_order, int angular_order)
    : alpha_(alpha), radial_order_(radial_order), angular_order_(angular_order) {
  if (!(alpha > -1.0)) throw domain_error("disk rule alpha must exceed -1");
  if (radial_order < 1 || angular_order < 1) throw domain_error("disk rule orders must be at least 1");

  // u = 2r²−1 maps (1−r²)^α r dr onto a multiple of (1−u)^α du.
  const GaussRule radial = gauss_jacobi(radial_order, alpha, 0.0);
  const double mass = std::accumulate(radial.weights.begin(), radial.weights.end(), 0.0);
  nodes_.reserve(static_cast<std::size_t>(radial_order) * angular_order);
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt((1.0 + radial.nodes[i]) / 2.0);
    radii_.push_back(r);
    radial_weights_.push_back(radial.weights[i] / mass);
    const double w = radial_weights_.back() / angular_order;
    for (int k = 0; k < angular_order; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angular_order;
      nodes_.push_back({std::polar(r, theta), w});
    }
  }
}

bool DiskQuadratureRule::integrates_exactly(int max_degree) const noexcept {
  return radial_order_ >= max_degree + 2 && angular_order_ >= 2 * max_degree + 1;
}

void DiskQuadratureRule::require_capacity(int max_degree) const {
  if (!integrates_exactly(max_degree)) {
    throw capacity_error("quadrature rule (radial " + std::to_string(radial_order_) + ", angular " +
                         std::to_string(angular_order_) + ") cannot integrate degree " +
                         std::to_string(max_degree) + " exactly");
  }
}

DiskQuadratureRule build_rule(double alpha, int radial_order, int angular_order) {
  return DiskQuadratureRule(alpha, radial_order, angular_order);
}

DiskQuadratureRule default_rule(double alpha, int m_max, int n_max) {
  return DiskQuadratureRule(alpha, m_max + n_max + 8, 2 * (m_max + n_max) + 8);
}

complex integrate(const DiskQuadratureRule& rule, const DiskFunction& f) {
  complex sum{};
  for (const auto& node : rule.nodes()) sum += node.weight * f(node.z);
  return sum;
}

complex extract_coefficient(const DiskFunction& f, int m, int n, const DiskQuadratureRule& rule) {
  const DiscIndex idx{m, n, rule.alpha()};
  complex sum{};
  for (const auto& node : rule.nodes()) {
    sum += node.weight * f(node.z) * std::conj(disc_poly(idx, DiskPoint(node.z)));
  }
  return disc_norm_h(idx) * sum;
}

CoefficientTable expand(const DiskFunction& f, double alpha, int m_max, int n_max,
                        const DiskQuadratureRule& rule) {
  if (m_max < 0 || n_max < 0) throw domain_error("expansion bounds must be nonnegative");
  if (rule.alpha() != alpha) throw domain_error("quadrature rule built for a different alpha");
  rule.require_capacity(m_max + n_max);

  // conj R^α_{m,n}(re^{iθ}) = r^{|k|} e^{−ikθ} R_{min(m,n)}^{(α,|k|)}(2r²−1) with k = m−n, so
  // each ring contributes through the angular Fourier coefficients of f.
  const int rings = rule.radial_order();
  const int angles = rule.angular_order();
  const int k_min = -n_max;
  const int k_count = m_max + n_max + 1;
  std::vector<complex> twiddle(static_cast<std::size_t>(angles) * k_count);
  for (int a = 0; a < angles; ++a) {
    for (int kk = 0; kk < k_count; ++kk) {
      const long turns = (static_cast<long>(k_min + kk) * a) % angles;
      twiddle[static_cast<std::size_t>(a) * k_count + kk] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(turns) / angles);
    }
  }
  // fourier[i][kk] = (1/A) Σ_a f(r_i e^{iθ_a}) e^{−ikθ_a}
  std::vector<complex> fourier(static_cast<std::size_t>(rings) * k_count);
  const auto& nodes = rule.nodes();
  for (int i = 0; i < rings; ++i) {
    complex* row = &fourier[static_cast<std::size_t>(i) * k_count];
    for (int a = 0; a < angles; ++a) {
      const complex value = f(nodes[static_cast<std::size_t>(i) * angles + a].z) / static_cast<double>(angles);
      const complex* tw = &twiddle[static_cast<std::size_t>(a) * k_count];
      for (int kk = 0; kk < k_count; ++kk) row[kk] += value * tw[kk];
    }
  }

  CoefficientTable table(alpha);
  const auto& radii = rule.radii();
  const auto& weights = rule.radial_weights();
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const int k = m - n;
      const int gap = std::abs(k);
      const int lo = std::min(m, n);
      complex sum{};
      for (int i = 0; i < rings; ++i) {
        const double r = radii[i];
        const double radial = std::pow(r, gap) * jacobi_R(lo, alpha, gap, 2.0 * r * r - 1.0);
        sum += weights[i] * radial * fourier[static_cast<std::size_t>(i) * k_count + (k - k_min)];
      }
      table.set(m, n, disc_norm_h({m, n, alpha}) * sum);
    }
  }
  return table;
}

complex synthesize(const CoefficientTable& table, const DiskPoint& z) {
  complex sum{};
  for (const auto& [key, value] : table.entries()) {
    sum += value * disc_poly({key.first, key.second, table.alpha()}, z);
  }
  return sum;
}

double coefficient_sum(const CoefficientTable& table) {
  double sum = 0.0;
  for (const auto& [key, value] : table.entries()) {
    if (std::abs(value.imag()) > coefficient_tol || value.real() < -coefficient_tol) {
      throw domain_error("coefficient_sum requires real nonnegative entries; offending entry (" +
                         std::to_string(key.first) + ", " + std::to_string(key.second) + ")");
    }
    sum += value.real();
  }
  return sum;
}

}  // namespace diskwalk
