#pragma once

#include "diskwalk/coefficient_table.hpp"
#include "diskwalk/quadrature.hpp"

namespace diskwalk {

/// Descente operators on coefficient tables: a table at index α maps to one at α+1.
///
/// D_z keeps entries with m ≥ 1, moving a_{m,n} to (m−1, n) scaled by c_α(m, n);
/// D_z̄ is the mirror image; D_x = D_z + D_z̄. Declared supports are walked exactly.
CoefficientTable descente_z(const CoefficientTable& table);
CoefficientTable descente_zbar(const CoefficientTable& table);
CoefficientTable descente_x(const CoefficientTable& table);

/// Result of a Montée operator applied to a table at index α+1.
///
/// `table` holds the coefficients at index α with a zero (0,0) entry and
/// `constant + synthesize(table, ·)` is the primitive vanishing at the origin (I f or Ī f).
/// The shift c making `c + I f` equal to `synthesize(table, ·)` is `shift() = −constant`.
struct MonteeResult {
  CoefficientTable table;
  complex constant;

  complex shift() const { return -constant; }
};

/// z-primitive vanishing at 0: b_{m,n} = a_{m−1,n} / c_α(m, n) for m ≥ 1.
/// Throws domain_error when the input index is not above 0 (the output index must exceed −1).
MonteeResult montee_z(const CoefficientTable& table);
/// z̄-primitive vanishing at 0: b_{m,n} = a_{m,n−1} / c_α(n, m) for n ≥ 1.
MonteeResult montee_zbar(const CoefficientTable& table);

/// Default central-difference step.
inline constexpr double wirtinger_step = 1e-5;

/// Central-difference Wirtinger derivatives (D_x ∓ i D_y)/2. Throws domain_error if the
/// stencil leaves the open disk (|z| + h ≥ 1).
complex wirtinger_dz(const DiskFunction& f, complex z, double h = wirtinger_step);
complex wirtinger_dzbar(const DiskFunction& f, complex z, double h = wirtinger_step);
complex partial_x(const DiskFunction& f, complex z, double h = wirtinger_step);

}  // namespace diskwalk
