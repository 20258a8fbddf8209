#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>

#include "diskwalk/support_pattern.hpp"

namespace diskwalk {

/// Sparse table of disc-polynomial coefficients a^α_{m,n} at a fixed index α.
///
/// Absent entries are zero. An optional SupportPattern declares the exact support of
/// the untruncated expansion the table was cut from.
class CoefficientTable {
public:
  using Entries = std::map<IndexPair, std::complex<double>>;

  /// Throws domain_error unless alpha > −1.
  explicit CoefficientTable(double alpha);
  CoefficientTable(double alpha, Entries entries);

  double alpha() const noexcept { return alpha_; }
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  std::complex<double> at(int m, int n) const;
  bool contains(int m, int n) const { return entries_.count({m, n}) != 0; }
  /// Throws domain_error for negative indices or non-finite values.
  void set(int m, int n, std::complex<double> value);
  /// Adds to an existing entry (creating it if absent).
  void accumulate(int m, int n, std::complex<double> value);
  void erase(int m, int n) { entries_.erase({m, n}); }

  int max_m() const;
  int max_n() const;
  int max_degree() const;

  /// The table of the conjugate-reflected function: (m, n) ↦ (n, m), values conjugated.
  CoefficientTable swapped() const;
  /// Entries whose modulus exceeds threshold; the support pattern is kept.
  CoefficientTable pruned(double threshold) const;

  const std::optional<SupportPattern>& support() const noexcept { return support_; }
  void set_support(std::optional<SupportPattern> support) { support_ = std::move(support); }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
  double alpha_;
  Entries entries_;
  std::optional<SupportPattern> support_;
};

}  // namespace diskwalk
