#include "diskwalk/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "diskwalk/errors.hpp"
#include "diskwalk/positivity.hpp"
#include "diskwalk/quadrature.hpp"

namespace diskwalk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr int series_degree_cap = 200;
constexpr double series_rel_tol = 1e-13;

void require(bool ok, const std::string& message) {
  if (!ok) throw parameter_domain_error(message);
}

// log (a)_k for a > 0, tabulated for k = 0..size−1.
std::vector<double> log_pochhammer_table(double a, int size) {
  std::vector<double> table(size);
  const double base = std::lgamma(a);
  for (int k = 0; k < size; ++k) table[k] = std::lgamma(a + k) - base;
  return table;
}

std::vector<complex> powers(complex x, int size) {
  std::vector<complex> out(size);
  out[0] = 1.0;
  for (int k = 1; k < size; ++k) out[k] = out[k - 1] * x;
  return out;
}

// Tracks per-degree maxima and decides when the remaining tail is negligible.
class DegreeSummation {
public:
  void add(complex term) {
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw divergence_error("hypergeometric series term overflowed");
    }
    sum_ += term;
    degree_max_ = std::max(degree_max_, std::abs(term));
  }

  // Closes the current degree; true once three consecutive degree maxima are negligible.
  bool close_degree() {
    maxima_.push_back(degree_max_);
    degree_max_ = 0.0;
    const std::size_t k = maxima_.size();
    if (k < 3) return false;
    const double bound = series_rel_tol * std::abs(sum_);
    return maxima_[k - 1] <= bound && maxima_[k - 2] <= bound && maxima_[k - 3] <= bound;
  }

  complex sum() const { return sum_; }

private:
  complex sum_{};
  double degree_max_ = 0.0;
  std::vector<double> maxima_;
};

void require_positive_parameters(std::initializer_list<double> values) {
  for (double v : values) {
    if (!(v > 0.0)) throw domain_error("hypergeometric parameters must be positive");
  }
}

}  // namespace

double sigma_2q(int q) {
  if (q < 1) throw domain_error("sigma_2q needs q >= 1");
  return 2.0 * std::pow(std::numbers::pi, q) / std::tgamma(static_cast<double>(q));
}

void FamilySpec::validate() const {
  require(q >= 2, "complex spheres need q >= 2");
  std::visit(overloaded{
                 [](const ProductKernel& p) { require(p.m >= 0 && p.n >= 0, "product kernel needs m, n >= 0"); },
                 [](const PoissonSzego& p) { require(p.r >= 0.0 && p.r < 1.0, "Poisson-Szego needs r in [0, 1)"); },
                 [](const Exponential&) {},
                 [](const Aktas& p) { require(p.t > 0.0 && p.t < 1.0, "Aktas family needs t in (0, 1)"); },
                 [](const Horn& p) {
                   require(p.t > 0.0 && p.s > 0.0, "Horn family needs positive t and s");
                   require(p.b >= 1, "Horn family needs a positive integer b");
                   require(p.radius_x > 0.0 && p.radius_y > 0.0, "Horn radii must be positive");
                   require(std::abs(4.0 * p.radius_x - (p.radius_y - 1.0) * (p.radius_y - 1.0)) <= 1e-12,
                           "Horn radii must satisfy 4 r = (R - 1)^2");
                   require(p.s < 1.0, "Horn family needs s < 1");
                   require(p.s / ((1.0 - p.s) * (1.0 - p.s)) < p.radius_x, "Horn family needs s/(1-s)^2 < r");
                   require(p.t / (1.0 - p.s) < p.radius_y, "Horn family needs t/(1-s) < R");
                 },
                 [](const Lauricella& p) {
                   require(p.t > 0.0 && p.s > 0.0, "Lauricella family needs positive t and s");
                   require(p.b >= 1, "Lauricella family needs a positive integer b");
                   require(p.r2 > 0.0 && p.r2 < 1.0, "Lauricella radius r2 must lie in (0, 1)");
                   require(p.s < p.r2 * (1.0 - p.r2), "Lauricella family needs s < r2 (1 - r2)");
                   require(p.t < p.r2, "Lauricella family needs t < r2");
                 },
             },
             variant);
}

std::string FamilySpec::name() const {
  return std::visit(overloaded{
                        [](const ProductKernel&) { return std::string("product"); },
                        [](const PoissonSzego&) { return std::string("poisson"); },
                        [](const Exponential&) { return std::string("exponential"); },
                        [](const Aktas&) { return std::string("aktas"); },
                        [](const Horn&) { return std::string("horn"); },
                        [](const Lauricella&) { return std::string("lauricella"); },
                    },
                    variant);
}

complex horn_h4(double a, double b, double c, double d, complex x, complex y) {
  require_positive_parameters({a, b, c, d});
  const int size = 2 * series_degree_cap + 2;
  const auto la = log_pochhammer_table(a, size);
  const auto lb = log_pochhammer_table(b, size);
  const auto lc = log_pochhammer_table(c, size);
  const auto ld = log_pochhammer_table(d, size);
  const auto lf = log_pochhammer_table(1.0, size);
  const auto xp = powers(x, size);
  const auto yp = powers(y, size);

  DegreeSummation series;
  for (int degree = 0; degree <= series_degree_cap; ++degree) {
    for (int m = 0; m <= degree; ++m) {
      const int n = degree - m;
      const double log_coef = la[2 * m + n] + lb[n] - lc[m] - ld[n] - lf[m] - lf[n];
      series.add(std::exp(log_coef) * xp[m] * yp[n]);
    }
    if (series.close_degree()) return series.sum();
  }
  throw divergence_error("H4 series did not converge within 200 terms per index");
}

complex lauricella_f14(double a1, double b1, double b2, double c1, double c2, complex x1, complex x2,
                       complex x3) {
  require_positive_parameters({a1, b1, b2, c1, c2});
  const int size = series_degree_cap + 2;
  const auto la = log_pochhammer_table(a1, size);
  const auto lb1 = log_pochhammer_table(b1, size);
  const auto lb2 = log_pochhammer_table(b2, size);
  const auto lc1 = log_pochhammer_table(c1, size);
  const auto lc2 = log_pochhammer_table(c2, size);
  const auto lf = log_pochhammer_table(1.0, size);
  const auto p1 = powers(x1, size);
  const auto p2 = powers(x2, size);
  const auto p3 = powers(x3, size);

  DegreeSummation series;
  for (int degree = 0; degree <= series_degree_cap; ++degree) {
    for (int m = 0; m <= degree; ++m) {
      for (int n = 0; n <= degree - m; ++n) {
        const int p = degree - m - n;
        const double log_coef =
            la[degree] + lb1[m + p] + lb2[n] - lc1[m] - lc2[n + p] - lf[m] - lf[n] - lf[p];
        series.add(std::exp(log_coef) * p1[m] * p2[n] * p3[p]);
      }
    }
    if (series.close_degree()) return series.sum();
  }
  throw divergence_error("F14 series did not converge within 200 terms per index");
}

complex eval_family(const FamilySpec& spec, const DiskPoint& point) {
  spec.validate();
  const int q = spec.q;
  const complex z = point.z();
  const double r2 = std::norm(z);
  return std::visit(
      overloaded{
          [&](const ProductKernel& p) {
            complex v{1.0, 0.0};
            for (int k = 0; k < p.m; ++k) v *= z;
            for (int k = 0; k < p.n; ++k) v *= std::conj(z);
            return v;
          },
          [&](const PoissonSzego& p) {
            return complex{std::pow(1.0 - p.r * p.r, q) / std::pow(std::norm(1.0 - p.r * z), q) / sigma_2q(q)};
          },
          [&](const Exponential&) { return complex{std::exp(2.0 * z.real())}; },
          [&](const Aktas& p) {
            const double t = p.t;
            const double big_r = std::sqrt(1.0 - 2.0 * (2.0 * r2 - 1.0) * t + t * t);
            return std::pow(2.0 / (1.0 - t + big_r), q - 2) / big_r * std::exp(2.0 * t * z / (1.0 + t + big_r));
          },
          [&](const Horn& p) {
            const double one_minus_s = 1.0 - p.s;
            const complex x = p.s * (r2 - 1.0) / (one_minus_s * one_minus_s);
            const complex y = p.t * std::conj(z) / one_minus_s;
            return std::pow(one_minus_s, 1 - q) * horn_h4(q - 1.0, p.b, q - 1.0, q - 1.0, x, y);
          },
          [&](const Lauricella& p) {
            return lauricella_f14(1.0, q - 1.0, p.b, q - 1.0, 1.0, p.s * (r2 - 1.0), p.t * z, p.s * r2);
          },
      },
      spec.variant);
}

double exponential_coefficient(int q, int m, int n) {
  if (q < 2 || m < 0 || n < 0) throw domain_error("exponential_coefficient needs q >= 2 and m, n >= 0");
  const int k = m + n + q;
  double inner = 0.0;
  double term = 1.0;
  for (int j = 1; term > 1e-17 * inner || j == 1; ++j) {
    inner += term;
    term /= j * (k + j - 1.0);
  }
  const double prefactor =
      pochhammer(m + 1.0, q - 2) * pochhammer(n + 1.0, q - 2) / (pochhammer(1.0, q - 2) * pochhammer(1.0, m + n + q - 2));
  return prefactor * inner;
}

std::optional<SupportPattern> family_support(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const ProductKernel&) -> std::optional<SupportPattern> { return std::nullopt; },
                        [](const PoissonSzego&) -> std::optional<SupportPattern> { return std::nullopt; },
                        [](const Exponential&) -> std::optional<SupportPattern> {
                          return SupportPattern::cone({0, 0}, {1, 0}, {0, 1});
                        },
                        [](const Aktas&) -> std::optional<SupportPattern> {
                          return SupportPattern::cone({0, 0}, {1, 0}, {1, 1});
                        },
                        [](const Horn&) -> std::optional<SupportPattern> {
                          return SupportPattern::cone({0, 0}, {1, 1}, {0, 1});
                        },
                        [](const Lauricella&) -> std::optional<SupportPattern> {
                          return SupportPattern::cone({0, 0}, {1, 0}, {1, 1});
                        },
                    },
                    spec.variant);
}

namespace {

double inverse_factorial(int k) { return 1.0 / pochhammer(1.0, k); }

DiskQuadratureRule extraction_rule(const FamilySpec& spec, int m_max, int n_max) {
  const double alpha = spec.q - 2.0;
  const int degree = m_max + n_max;
  if (const auto* p = std::get_if<ProductKernel>(&spec.variant)) {
    const int total = degree + p->m + p->n;
    return DiskQuadratureRule(alpha, total + 8, 2 * total + 8);
  }
  // Fourier coefficients of |1 − rz|^{−2q} decay like r^k.
  const double r = std::get<PoissonSzego>(spec.variant).r;
  int extra = 16;
  if (r > 0.0) extra = std::clamp(static_cast<int>(std::ceil(std::log(1e-17) / std::log(r))) + 16, 16, 600);
  return DiskQuadratureRule(alpha, degree + extra, 2 * (degree + extra));
}

}  // namespace

FamilyExpansion family_coefficients(const FamilySpec& spec, int m_max, int n_max) {
  spec.validate();
  if (m_max < 0 || n_max < 0) throw domain_error("expansion bounds must be nonnegative");
  const int q = spec.q;
  const double alpha = q - 2.0;

  if (std::holds_alternative<ProductKernel>(spec.variant) || std::holds_alternative<PoissonSzego>(spec.variant)) {
    const auto rule = extraction_rule(spec, m_max, n_max);
    auto f = [&spec](complex z) { return eval_family(spec, DiskPoint(z)); };
    return {expand(f, alpha, m_max, n_max, rule), true};
  }

  CoefficientTable table(alpha);
  std::visit(overloaded{
                 [](const ProductKernel&) {},
                 [](const PoissonSzego&) {},
                 [&](const Exponential&) {
                   for (int m = 0; m <= m_max; ++m) {
                     for (int n = 0; n <= n_max; ++n) table.set(m, n, exponential_coefficient(q, m, n));
                   }
                 },
                 [&](const Aktas& p) {
                   // Series index (j, n) lands on (j+n, n).
                   for (int n = 0; n <= n_max; ++n) {
                     for (int m = n; m <= m_max; ++m) {
                       const int j = m - n;
                       table.set(m, n, pochhammer(q - 1.0, n) * std::pow(p.t, m) * inverse_factorial(j) *
                                           inverse_factorial(n));
                     }
                   }
                 },
                 [&](const Horn& p) {
                   // Series index (j, k) lands on (j, j+k).
                   for (int m = 0; m <= m_max; ++m) {
                     for (int n = m; n <= n_max; ++n) {
                       const int k = n - m;
                       table.set(m, n, pochhammer(q + k - 1.0, m) * pochhammer(p.b, k) * std::pow(p.t, k) *
                                           std::pow(p.s, m) * inverse_factorial(m) * inverse_factorial(k));
                     }
                   }
                 },
                 [&](const Lauricella& p) {
                   for (int n = 0; n <= n_max; ++n) {
                     for (int m = n; m <= m_max; ++m) {
                       const int j = m - n;
                       table.set(m, n, pochhammer(q - 1.0, n) * pochhammer(p.b, j) * std::pow(p.t, j) *
                                           std::pow(p.s, n) * inverse_factorial(j) * inverse_factorial(n));
                     }
                   }
                 },
             },
             spec.variant);
  table.set_support(family_support(spec));
  return {std::move(table), false};
}

IndexSet difference_pattern(const FamilySpec& spec, int m_max, int n_max) {
  spec.validate();
  if (auto support = family_support(spec)) return support->differences();
  if (const auto* p = std::get_if<ProductKernel>(&spec.variant)) {
    m_max = p->m;
    n_max = p->n;
  }
  return difference_set(family_coefficients(spec, m_max, n_max).table, 1e-10, 0);
}

}  // namespace diskwalk
