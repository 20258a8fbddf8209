#pragma once

#include <utility>
#include <vector>

#include "diskwalk/index_set.hpp"

namespace diskwalk {

using IndexPair = std::pair<int, int>;

/// The lattice set { base + Σ k_i·g_i : k_i ∈ Z₊ } over at most two generators g_i
/// with nonnegative components. A cone without generators is a single point.
struct LatticeCone {
  IndexPair base;
  std::vector<IndexPair> generators;

  bool contains(int m, int n) const;
  friend bool operator==(const LatticeCone&, const LatticeCone&) = default;
};

/// Exact description of an infinite coefficient support as a finite union of lattice
/// cones. Used to decide strict positive definiteness of functions whose coefficient
/// tables are necessarily truncated.
class SupportPattern {
public:
  SupportPattern() = default;
  explicit SupportPattern(std::vector<LatticeCone> cones);

  static SupportPattern point(int m, int n);
  static SupportPattern ray(IndexPair base, IndexPair step);
  static SupportPattern cone(IndexPair base, IndexPair g1, IndexPair g2);

  const std::vector<LatticeCone>& cones() const noexcept { return cones_; }
  bool empty() const noexcept { return cones_.empty(); }
  bool contains(int m, int n) const;

  /// Support of D_z: points with m = 0 vanish, the rest shift to (m−1, n).
  SupportPattern lower_m() const;
  /// Support of D_z̄: points with n = 0 vanish, the rest shift to (m, n−1).
  SupportPattern lower_n() const;
  /// Support of the Montée images: every point shifts to (m+1, n) or (m, n+1).
  SupportPattern raise_m() const;
  SupportPattern raise_n() const;
  SupportPattern united(const SupportPattern& other) const;
  SupportPattern swapped() const;

  /// Points of the pattern with m ≤ max_m, n ≤ max_n and m+n ≤ max_degree.
  std::vector<IndexPair> enumerate(int max_m, int max_n, int max_degree) const;

  /// { m − n : (m, n) in the pattern } as an exact IndexSet.
  IndexSet differences() const;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

private:
  std::vector<LatticeCone> cones_;
};

}  // namespace diskwalk
