#include "diskwalk/dimension_walks.hpp"

#include <cmath>

#include "diskwalk/errors.hpp"

namespace diskwalk {

CoefficientTable descente_z(const CoefficientTable& table) {
  const double alpha = table.alpha();
  CoefficientTable out(alpha + 1.0);
  for (const auto& [key, value] : table.entries()) {
    const auto [m, n] = key;
    if (m == 0) continue;
    out.set(m - 1, n, c_factor(m, n, alpha) * value);
  }
  if (table.support()) out.set_support(table.support()->lower_m());
  return out;
}

CoefficientTable descente_zbar(const CoefficientTable& table) {
  const double alpha = table.alpha();
  CoefficientTable out(alpha + 1.0);
  for (const auto& [key, value] : table.entries()) {
    const auto [m, n] = key;
    if (n == 0) continue;
    out.set(m, n - 1, c_factor(n, m, alpha) * value);
  }
  if (table.support()) out.set_support(table.support()->lower_n());
  return out;
}

CoefficientTable descente_x(const CoefficientTable& table) {
  CoefficientTable out = descente_z(table);
  const CoefficientTable other = descente_zbar(table);
  for (const auto& [key, value] : other.entries()) out.accumulate(key.first, key.second, value);
  if (out.support() && other.support()) out.set_support(out.support()->united(*other.support()));
  return out;
}

namespace {

double lowered_alpha(const CoefficientTable& table) {
  const double alpha = table.alpha() - 1.0;
  if (!(alpha > -1.0)) throw domain_error("Montee needs an input table with alpha > 0");
  return alpha;
}

}  // namespace

MonteeResult montee_z(const CoefficientTable& table) {
  const double alpha = lowered_alpha(table);
  MonteeResult result{CoefficientTable(alpha), {}};
  for (const auto& [key, value] : table.entries()) {
    const int m = key.first + 1;
    const int n = key.second;
    const complex b = value / c_factor(m, n, alpha);
    result.table.set(m, n, b);
    result.constant -= b * disc_poly_at_origin({m, n, alpha});
  }
  if (table.support()) result.table.set_support(table.support()->raise_m());
  return result;
}

MonteeResult montee_zbar(const CoefficientTable& table) {
  const double alpha = lowered_alpha(table);
  MonteeResult result{CoefficientTable(alpha), {}};
  for (const auto& [key, value] : table.entries()) {
    const int m = key.first;
    const int n = key.second + 1;
    const complex b = value / c_factor(n, m, alpha);
    result.table.set(m, n, b);
    result.constant -= b * disc_poly_at_origin({m, n, alpha});
  }
  if (table.support()) result.table.set_support(table.support()->raise_n());
  return result;
}

namespace {

void require_stencil(complex z, double h) {
  if (!(h > 0.0)) throw domain_error("finite-difference step must be positive");
  if (!(std::abs(z) + h < 1.0)) throw domain_error("finite-difference stencil leaves the unit disk");
}

complex partial_y(const DiskFunction& f, complex z, double h) {
  return (f(z + complex{0.0, h}) - f(z - complex{0.0, h})) / (2.0 * h);
}

}  // namespace

complex partial_x(const DiskFunction& f, complex z, double h) {
  require_stencil(z, h);
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

complex wirtinger_dz(const DiskFunction& f, complex z, double h) {
  require_stencil(z, h);
  const complex i{0.0, 1.0};
  return 0.5 * (partial_x(f, z, h) - i * partial_y(f, z, h));
}

complex wirtinger_dzbar(const DiskFunction& f, complex z, double h) {
  require_stencil(z, h);
  const complex i{0.0, 1.0};
  return 0.5 * (partial_x(f, z, h) + i * partial_y(f, z, h));
}

}  // namespace diskwalk
