#pragma once

#include <functional>
#include <vector>

#include "diskwalk/coefficient_table.hpp"
#include "diskwalk/special_functions.hpp"

namespace diskwalk {

/// A function on the closed unit disk. Must be reentrant.
using DiskFunction = std::function<complex(complex)>;

/// Gauss rule on [−1, 1] for the weight (1−u)^α (1+u)^β.
struct GaussRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to the total weight mass
};

/// Golub–Welsch: eigen-decomposition of the symmetric Jacobi matrix by implicit-shift QL.
/// Throws convergence_error after 50·order QL iterations.
GaussRule gauss_jacobi(int order, double alpha, double beta);

struct QuadratureNode {
  complex z;
  double weight;
};

/// Tensor rule for the probability measure dν_α on the unit disk. Radial nodes come from
/// Gauss–Jacobi(α, 0) in u = 2r²−1, angular nodes are equispaced.
class DiskQuadratureRule {
public:
  DiskQuadratureRule(double alpha, int radial_order, int angular_order);

  double alpha() const noexcept { return alpha_; }
  int radial_order() const noexcept { return radial_order_; }
  int angular_order() const noexcept { return angular_order_; }
  const std::vector<QuadratureNode>& nodes() const noexcept { return nodes_; }
  /// Nodes are stored ring by ring: node i·angular_order + k sits at radii()[i]·e^{2πik/angular_order}.
  const std::vector<double>& radii() const noexcept { return radii_; }
  /// Radial weights, summing to 1.
  const std::vector<double>& radial_weights() const noexcept { return radial_weights_; }

  /// Whether products R_{m,n} conj(R_{k,l}) with m+n, k+l ≤ max_degree integrate exactly.
  bool integrates_exactly(int max_degree) const noexcept;
  /// Throws capacity_error unless radial_order ≥ degree+2 and angular_order ≥ 2·degree+1.
  void require_capacity(int max_degree) const;

private:
  double alpha_;
  int radial_order_;
  int angular_order_;
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  std::vector<QuadratureNode> nodes_;
};

DiskQuadratureRule build_rule(double alpha, int radial_order, int angular_order);
/// Default orders for expansions up to m_max, n_max: small margin over exactness.
DiskQuadratureRule default_rule(double alpha, int m_max, int n_max);

complex integrate(const DiskQuadratureRule& rule, const DiskFunction& f);

/// a^α_{m,n} = h^α_{m,n} ∫ f conj(R^α_{m,n}) dν_α, with α taken from the rule.
complex extract_coefficient(const DiskFunction& f, int m, int n, const DiskQuadratureRule& rule);

/// All coefficients with m ≤ m_max, n ≤ n_max. No pruning.
CoefficientTable expand(const DiskFunction& f, double alpha, int m_max, int n_max,
                        const DiskQuadratureRule& rule);

complex synthesize(const CoefficientTable& table, const DiskPoint& z);

/// Σ a_{m,n} for a real nonnegative table (within 1e−10).
double coefficient_sum(const CoefficientTable& table);

}  // namespace diskwalk
