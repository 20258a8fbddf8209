#include "diskwalk/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "diskwalk/dimension_walks.hpp"
#include "diskwalk/errors.hpp"

namespace diskwalk {

PdReport is_pd(const CoefficientTable& table, double tol) {
  PdReport report;
  for (const auto& [key, value] : table.entries()) {
    if (std::abs(value.imag()) > tol || value.real() < -tol) report.violations.push_back(key);
  }
  report.positive_definite = report.violations.empty();
  return report;
}

not_positive_definite::not_positive_definite(std::vector<IndexPair> violations)
    : std::domain_error("coefficient table is not positive definite (" + std::to_string(violations.size()) +
                        " offending entries)"),
      violations_(std::move(violations)) {}

IndexSet difference_set(const CoefficientTable& table, double threshold, int min_index) {
  if (threshold < 0.0) throw domain_error("difference_set threshold must be nonnegative");
  IndexSet out;
  for (const auto& [key, value] : table.entries()) {
    const auto [m, n] = key;
    if (m < min_index || n < min_index) continue;
    if (value.real() > threshold) out.insert(std::int64_t{m} - n);
  }
  return out;
}

namespace {

std::vector<std::int64_t> divisors(std::int64_t l) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= l; ++d) {
    if (l % d != 0) continue;
    small.push_back(d);
    if (d != l / d) large.push_back(l / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr std::int64_t max_step_lcm = 100'000'000;

}  // namespace

SpdVerdict spd_verdict(const IndexSet& set, std::int64_t n_max) {
  if (n_max < 1) throw domain_error("n_max must be at least 1");
  const IndexSet s = set.normalized();
  const auto& progs = s.progressions();

  if (std::any_of(progs.begin(), progs.end(), [](const Progression& p) { return p.step == 1 || p.step == -1; })) {
    return CertifiedExact{"step-1 progression"};
  }

  // Coverage of (N, j) by a progression of step d depends on gcd(d, N) = gcd(d, gcd(L, N)),
  // so the divisors of L decide every modulus, and the smallest failing modulus divides L.
  std::int64_t lcm = 1;
  for (const auto& p : progs) {
    lcm = std::lcm(lcm, p.step < 0 ? -p.step : p.step);
    if (lcm > max_step_lcm) throw domain_error("progression steps too large for an exact decision");
  }
  const IndexSet progressions_only({}, progs);
  std::optional<RefutedAt> failure;
  for (auto modulus : divisors(lcm)) {
    for (std::int64_t j = 0; j < modulus && !failure; ++j) {
      if (!intersects_progression(progressions_only, modulus, j)) failure = RefutedAt{modulus, j};
    }
    if (failure) break;
  }
  if (!failure) return CertifiedExact{"divisor closure"};
  if (s.finite_part().empty()) return *failure;

  for (std::int64_t modulus = 1; modulus <= n_max; ++modulus) {
    for (std::int64_t j = 0; j < modulus; ++j) {
      if (!intersects_progression(s, modulus, j)) return RefutedAt{modulus, j};
    }
  }
  return CertifiedUpTo{n_max};
}

bool certified_spd(const SpdVerdict& v) { return std::holds_alternative<CertifiedExact>(v); }

std::string describe(const SpdVerdict& v) {
  if (const auto* r = std::get_if<RefutedAt>(&v)) {
    return "RefutedAt(N=" + std::to_string(r->modulus) + ", j=" + std::to_string(r->residue) + ")";
  }
  if (const auto* c = std::get_if<CertifiedExact>(&v)) return "CertifiedExact(" + c->reason + ")";
  return "CertifiedUpTo(" + std::to_string(std::get<CertifiedUpTo>(v).n_max) + ")";
}

SpdVerdict is_spd(const CoefficientTable& table, int q, std::int64_t n_max, double threshold) {
  if (q < 2) throw domain_error("complex spheres need q >= 2");
  if (std::abs(table.alpha() - (q - 2)) > 1e-12) throw domain_error("table alpha does not equal q - 2");
  PdReport pd = is_pd(table);
  if (!pd.positive_definite) throw not_positive_definite(std::move(pd.violations));

  if (!table.support()) return spd_verdict(difference_set(table, threshold, 0), n_max);

  const SupportPattern& support = *table.support();
  for (const auto& [key, value] : table.entries()) {
    if (value.real() > threshold && !support.contains(key.first, key.second)) {
      throw domain_error("declared support misses positive entry (" + std::to_string(key.first) + ", " +
                         std::to_string(key.second) + ")");
    }
  }
  for (const auto& [m, n] : support.enumerate(table.max_m(), table.max_n(), table.max_degree())) {
    if (!(table.at(m, n).real() > threshold)) {
      throw domain_error("declared support contains (" + std::to_string(m) + ", " + std::to_string(n) +
                         ") but the table entry is not positive");
    }
  }
  return spd_verdict(support.differences(), n_max);
}

SpherePointSet sample_sphere(int q, int count, std::uint64_t seed) {
  if (q < 2) throw domain_error("complex spheres need q >= 2");
  if (count < 1) throw domain_error("point count must be at least 1");
  std::mt19937_64 engine(seed);
  // (0, 1]: 53 random bits, shifted off zero for the logarithm.
  const auto uniform = [&engine] { return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53; };

  SpherePointSet set{q, seed, {}};
  set.points.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<complex> xi(q);
    double norm2 = 0.0;
    for (auto& c : xi) {
      const double radius = std::sqrt(-2.0 * std::log(uniform()));
      const double angle = 2.0 * std::numbers::pi * uniform();
      c = std::polar(radius, angle);
      norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : xi) c *= inv;
    set.points.push_back(std::move(xi));
  }
  return set;
}

complex inner_product(const std::vector<complex>& xi, const std::vector<complex>& eta) {
  if (xi.size() != eta.size()) throw domain_error("inner product of vectors of different length");
  complex s{};
  for (std::size_t k = 0; k < xi.size(); ++k) s += xi[k] * std::conj(eta[k]);
  return s;
}

ComplexMatrix gram_matrix(const DiskFunction& f, const SpherePointSet& points) {
  const std::size_t n = points.points.size();
  ComplexMatrix g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      complex w = a == b ? complex{1.0, 0.0} : inner_product(points.points[a], points.points[b]);
      if (std::abs(w) > 1.0) w /= std::abs(w);
      g(a, b) = f(w);
    }
  }
  return g;
}

CounterexampleCase parse_counterexample_case(const std::string& name) {
  if (name == "i") return CounterexampleCase::i;
  if (name == "ii") return CounterexampleCase::ii;
  if (name == "iii") return CounterexampleCase::iii;
  throw domain_error("unknown counterexample case '" + name + "' (expected i, ii or iii)");
}

std::string to_string(CounterexampleCase c) {
  switch (c) {
    case CounterexampleCase::i:
      return "i";
    case CounterexampleCase::ii:
      return "ii";
    case CounterexampleCase::iii:
      return "iii";
  }
  return "?";
}

namespace {

SupportPattern counterexample_support(CounterexampleCase c) {
  switch (c) {
    case CounterexampleCase::i:
      return SupportPattern::ray({0, 0}, {1, 0});
    case CounterexampleCase::ii:
      return SupportPattern::ray({0, 0}, {0, 1});
    case CounterexampleCase::iii:
      return SupportPattern({
          {{0, 4}, {{0, 5}}},
          {{5, 0}, {{5, 0}}},
          {{2, 0}, {{5, 0}}},
          {{3, 0}, {{5, 0}}},
          {{4, 0}, {{5, 0}}},
      });
  }
  return {};
}

}  // namespace

CounterexampleFixture counterexample_table(CounterexampleCase c, int q, int truncation) {
  if (q < 2) throw domain_error("complex spheres need q >= 2");
  if (truncation < 0) throw domain_error("truncation must be nonnegative");
  const SupportPattern support = counterexample_support(c);
  CoefficientTable table(q - 2.0);
  for (const auto& [m, n] : support.enumerate(truncation, truncation, truncation)) {
    table.set(m, n, std::ldexp(1.0, -(m + n)));
  }
  table.set_support(support);
  return {std::move(table), support.differences()};
}

WalkSpd expected_conclusions(CounterexampleCase c) {
  switch (c) {
    case CounterexampleCase::i:
      return {true, true, false, true};
    case CounterexampleCase::ii:
      return {true, false, true, true};
    case CounterexampleCase::iii:
      return {true, false, false, false};
  }
  return {};
}

WalkSpd WalkVerdicts::conclusions() const {
  return {certified_spd(f), certified_spd(dz), certified_spd(dzbar), certified_spd(dx)};
}

WalkVerdicts counterexample_verdicts(CounterexampleCase c, int q, int truncation, std::int64_t n_max) {
  const auto fixture = counterexample_table(c, q, truncation);
  return {
      is_spd(fixture.table, q, n_max),
      is_spd(descente_z(fixture.table), q + 1, n_max),
      is_spd(descente_zbar(fixture.table), q + 1, n_max),
      is_spd(descente_x(fixture.table), q + 1, n_max),
  };
}

}  // namespace diskwalk
