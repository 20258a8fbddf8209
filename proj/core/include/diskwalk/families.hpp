#pragma once

#include <optional>
#include <string>
#include <variant>

#include "diskwalk/coefficient_table.hpp"
#include "diskwalk/index_set.hpp"
#include "diskwalk/special_functions.hpp"

namespace diskwalk {

/// z^m z̄^n.
struct ProductKernel {
  int m = 0;
  int n = 0;
};

/// (1/σ_{2q}) (1−r²)^q / |1 − r z|^{2q}, r ∈ [0, 1).
struct PoissonSzego {
  double r = 0.5;
};

/// e^{z + z̄}.
struct Exponential {};

/// (1/R) (2/(1−t+R))^{q−2} exp(2tz/(1+t+R)), R = (1 − 2(2|z|²−1)t + t²)^{1/2}, t ∈ (0, 1).
struct Aktas {
  double t = 0.3;
};

/// (1−s)^{1−q} H₄(q−1, b; q−1, q−1; s(|z|²−1)/(1−s)², t z̄/(1−s)).
/// Validity: s < 1, s/(1−s)² < radius_x, t/(1−s) < radius_y with 4·radius_x = (radius_y − 1)².
struct Horn {
  double t = 0.1;
  double s = 0.1;
  int b = 2;
  double radius_x = 1.0;
  double radius_y = 3.0;
};

/// F₁₄(1,1,1,q−1,b,q−1; q−1,1,1; s(|z|²−1), tz, s|z|²).
/// Validity: s < r₂(1−r₂) and t < r₂ for a chosen r₂ ∈ (0, 1).
struct Lauricella {
  double t = 0.2;
  double s = 0.1;
  int b = 2;
  double r2 = 0.5;
};

using FamilyVariant = std::variant<ProductKernel, PoissonSzego, Exponential, Aktas, Horn, Lauricella>;

struct FamilySpec {
  FamilyVariant variant;
  int q = 2;

  /// Throws parameter_domain_error outside the family's validity region.
  void validate() const;
  /// "product", "poisson", "exponential", "aktas", "horn" or "lauricella".
  std::string name() const;
};

/// Total surface measure of the unit sphere of C^q: 2π^q/(q−1)!.
double sigma_2q(int q);

complex eval_family(const FamilySpec& spec, const DiskPoint& z);

struct FamilyExpansion {
  CoefficientTable table;
  /// True when the coefficients came from quadrature rather than a closed form.
  bool extracted;
};

/// Coefficients a^{q−2}_{m,n} for m ≤ m_max, n ≤ n_max. Closed-form families also carry
/// their exact support.
FamilyExpansion family_coefficients(const FamilySpec& spec, int m_max, int n_max);

/// Single closed-form coefficient of e^{z+z̄}:
/// (m+1)_{q−2}(n+1)_{q−2} / ((q−2)!(m+n+q−2)!) · Σ_j 1/(j!(m+n+q)_j).
double exponential_coefficient(int q, int m, int n);

/// Exact support of the untruncated expansion, when known in closed form.
std::optional<SupportPattern> family_support(const FamilySpec& spec);

/// Difference set of the family's coefficient support. Extracted families use the
/// table up to (m_max, n_max) with threshold 1e−10.
IndexSet difference_pattern(const FamilySpec& spec, int m_max = 12, int n_max = 12);

/// Double and triple hypergeometric series, summed by total degree until the largest
/// term magnitude of three consecutive degrees drops below 1e−13·|sum|. Throws
/// divergence_error after 200 degrees.
complex horn_h4(double a, double b, double c, double d, complex x, complex y);
complex lauricella_f14(double a1, double b1, double b2, double c1, double c2, complex x1, complex x2,
                       complex x3);

}  // namespace diskwalk
