#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "diskwalk/coefficient_table.hpp"
#include "diskwalk/hermitian.hpp"
#include "diskwalk/index_set.hpp"
#include "diskwalk/quadrature.hpp"

namespace diskwalk {

// ---------------------------------------------------------------------------
// Positive definiteness from coefficients

struct PdReport {
  bool positive_definite = true;
  std::vector<IndexPair> violations;  // entries with |Im| > tol or Re < −tol
};

/// Coefficient test: every entry real and nonnegative within tol.
PdReport is_pd(const CoefficientTable& table, double tol = 1e-10);

/// Raised by is_spd when the table is not even positive definite.
class not_positive_definite : public std::domain_error {
public:
  explicit not_positive_definite(std::vector<IndexPair> violations);
  const std::vector<IndexPair>& violations() const noexcept { return violations_; }

private:
  std::vector<IndexPair> violations_;
};

/// { m − n : Re a_{m,n} > threshold, m, n ≥ min_index }.
IndexSet difference_set(const CoefficientTable& table, double threshold = 0.0, int min_index = 0);

// ---------------------------------------------------------------------------
// Strict positive definiteness

/// The set misses the residue class N·Z + j.
struct RefutedAt {
  std::int64_t modulus;
  std::int64_t residue;
  friend bool operator==(const RefutedAt&, const RefutedAt&) = default;
};

/// Every residue class of every modulus is met; `reason` names the rule that decided it.
struct CertifiedExact {
  std::string reason;
  friend bool operator==(const CertifiedExact&, const CertifiedExact&) = default;
};

/// Every residue class is met for all moduli up to n_max; larger moduli were not examined.
struct CertifiedUpTo {
  std::int64_t n_max;
  friend bool operator==(const CertifiedUpTo&, const CertifiedUpTo&) = default;
};

using SpdVerdict = std::variant<RefutedAt, CertifiedExact, CertifiedUpTo>;

inline constexpr std::int64_t default_n_max = 64;

/// Decides whether S meets N·Z + j for all N ≥ 1 and 0 ≤ j < N.
///
/// A step ±1 progression certifies immediately. Otherwise the progressions alone are
/// decided exactly over the divisors of the lcm of their steps; when that fails and S has a
/// finite part, moduli 1..n_max are checked one by one. RefutedAt always reports the
/// smallest failing modulus and, within it, the smallest residue.
SpdVerdict spd_verdict(const IndexSet& s, std::int64_t n_max = default_n_max);

/// True for CertifiedExact verdicts only.
bool certified_spd(const SpdVerdict& v);
std::string describe(const SpdVerdict& v);

/// Strict positive definiteness on Ω_{2q} of the function with these coefficients.
///
/// The table index must be q−2. Throws not_positive_definite if `is_pd` fails. When the table
/// declares its untruncated support, that support decides (after it is checked against the
/// table's positive entries); otherwise the table's own difference set is used.
SpdVerdict is_spd(const CoefficientTable& table, int q, std::int64_t n_max = default_n_max,
                  double threshold = 0.0);

// ---------------------------------------------------------------------------
// Empirical validation on sphere points

struct SpherePointSet {
  int q;
  std::uint64_t seed;
  std::vector<std::vector<complex>> points;
};

/// Independent complex Gaussian vectors normalized to the unit sphere of C^q.
/// Deterministic for a fixed seed on every platform.
SpherePointSet sample_sphere(int q, int count, std::uint64_t seed);

/// ⟨ξ, η⟩ = Σ ξ_k conj(η_k).
complex inner_product(const std::vector<complex>& xi, const std::vector<complex>& eta);

/// G[μ][ν] = f(⟨ξ_μ, ξ_ν⟩). Check `hermitian_defect()` of the result: values above 1e−9
/// mean f breaks f(z̄) = conj f(z).
ComplexMatrix gram_matrix(const DiskFunction& f, const SpherePointSet& points);

inline constexpr double gram_psd_tol = 1e-8;

// ---------------------------------------------------------------------------
// Counterexamples to preservation of strict positive definiteness by Descente

enum class CounterexampleCase { i, ii, iii };

CounterexampleCase parse_counterexample_case(const std::string& name);
std::string to_string(CounterexampleCase c);

struct CounterexampleFixture {
  CoefficientTable table;  // carries the exact support
  IndexSet differences;    // of the untruncated support
};

/// Entries 2^{−(m+n)} on the case's support up to degree `truncation`:
///   i:   a_{m,0}, m ≥ 0
///   ii:  a_{0,n}, n ≥ 0
///   iii: a_{0,n} for n ≡ 4 (mod 5); a_{m,0} for m ∈ 5Z₊∖{0}, 5Z₊+2, 5Z₊+3, 5Z₊+4
CounterexampleFixture counterexample_table(CounterexampleCase c, int q, int truncation);

struct WalkSpd {
  bool f;
  bool dz;
  bool dzbar;
  bool dx;
  friend bool operator==(const WalkSpd&, const WalkSpd&) = default;
};

/// Strict positive definiteness of f, D_z f, D_z̄ f and D_x f as stated for each case.
WalkSpd expected_conclusions(CounterexampleCase c);

struct WalkVerdicts {
  SpdVerdict f;
  SpdVerdict dz;
  SpdVerdict dzbar;
  SpdVerdict dx;

  WalkSpd conclusions() const;
};

WalkVerdicts counterexample_verdicts(CounterexampleCase c, int q, int truncation,
                                     std::int64_t n_max = default_n_max);

}  // namespace diskwalk
