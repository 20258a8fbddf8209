#pragma once

#include <stdexcept>
#include <string>

namespace diskwalk {

/// Argument outside the mathematical domain (|z| > 1, α ≤ −1, q < 2, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Family parameters outside their validity region.
class parameter_domain_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// A quadrature rule too small to integrate the requested degrees exactly.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iterative eigen-solvers that ran out of sweeps.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Hypergeometric series whose terms stopped decreasing.
class divergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON input.
class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace diskwalk
