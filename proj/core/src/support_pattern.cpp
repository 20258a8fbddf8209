#include "diskwalk/support_pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "diskwalk/errors.hpp"

namespace diskwalk {

namespace {

void validate(const LatticeCone& c) {
  if (c.base.first < 0 || c.base.second < 0) throw domain_error("lattice cone base must be nonnegative");
  if (c.generators.size() > 2) throw domain_error("lattice cones take at most two generators");
  for (const auto& g : c.generators) {
    if (g.first < 0 || g.second < 0 || (g.first == 0 && g.second == 0)) {
      throw domain_error("lattice cone generators must be nonnegative and nonzero");
    }
  }
}

IndexPair swap_pair(IndexPair p) { return {p.second, p.first}; }

// Differences of the cone { d0 + i·s1 + j·s2 : i, j ≥ 0 }.
void add_two_step_differences(IndexSet& out, std::int64_t d0, std::int64_t s1, std::int64_t s2) {
  if (s1 == 0 && s2 == 0) {
    out.insert(d0);
    return;
  }
  if (s1 == 0 || s2 == 0) {
    out.add_progression({d0, s1 == 0 ? s2 : s1});
    return;
  }
  const std::int64_t g = std::gcd(s1 < 0 ? -s1 : s1, s2 < 0 ? -s2 : s2);
  if ((s1 > 0) != (s2 > 0)) {
    // The steps generate the subgroup gZ.
    out.add_progression({d0, g});
    out.add_progression({d0, -g});
    return;
  }
  const std::int64_t sign = s1 > 0 ? 1 : -1;
  const std::int64_t a = (s1 < 0 ? -s1 : s1) / g;
  const std::int64_t b = (s2 < 0 ? -s2 : s2) / g;
  if (a == 1 || b == 1) {
    out.add_progression({d0, sign * g});
    return;
  }
  // Numerical semigroup ⟨a, b⟩: every integer ≥ (a−1)(b−1) is representable.
  const std::int64_t conductor = (a - 1) * (b - 1);
  for (std::int64_t x = 0; x < conductor; ++x) {
    bool representable = false;
    for (std::int64_t i = 0; i * a <= x && !representable; ++i) representable = (x - i * a) % b == 0;
    if (representable) out.insert(d0 + sign * g * x);
  }
  out.add_progression({d0 + sign * g * conductor, sign * g});
}

}  // namespace

bool LatticeCone::contains(int m, int n) const {
  const int dm = m - base.first;
  const int dn = n - base.second;
  if (dm < 0 || dn < 0) return false;
  if (generators.empty()) return dm == 0 && dn == 0;
  const auto fits = [](int rm, int rn, IndexPair g) {
    // rm = k·g.m and rn = k·g.n for one k ≥ 0.
    if (g.first == 0) return rm == 0 && rn % g.second == 0;
    if (rm % g.first != 0) return false;
    const int k = rm / g.first;
    return rn == k * g.second;
  };
  if (generators.size() == 1) return fits(dm, dn, generators[0]);
  const IndexPair g1 = generators[0];
  for (int k = 0; k * g1.first <= dm && k * g1.second <= dn; ++k) {
    if (fits(dm - k * g1.first, dn - k * g1.second, generators[1])) return true;
  }
  return false;
}

SupportPattern::SupportPattern(std::vector<LatticeCone> cones) : cones_(std::move(cones)) {
  for (const auto& c : cones_) validate(c);
}

SupportPattern SupportPattern::point(int m, int n) { return SupportPattern({LatticeCone{{m, n}, {}}}); }

SupportPattern SupportPattern::ray(IndexPair base, IndexPair step) {
  return SupportPattern({LatticeCone{base, {step}}});
}

SupportPattern SupportPattern::cone(IndexPair base, IndexPair g1, IndexPair g2) {
  return SupportPattern({LatticeCone{base, {g1, g2}}});
}

bool SupportPattern::contains(int m, int n) const {
  return std::any_of(cones_.begin(), cones_.end(), [m, n](const LatticeCone& c) { return c.contains(m, n); });
}

SupportPattern SupportPattern::lower_m() const {
  std::vector<LatticeCone> out;
  for (const auto& c : cones_) {
    if (c.base.first >= 1) {
      out.push_back({{c.base.first - 1, c.base.second}, c.generators});
      continue;
    }
    // Points with m ≥ 1 are exactly those using some generator with a positive m step.
    for (const auto& g : c.generators) {
      if (g.first == 0) continue;
      out.push_back({{c.base.first + g.first - 1, c.base.second + g.second}, c.generators});
    }
  }
  return SupportPattern(std::move(out));
}

SupportPattern SupportPattern::lower_n() const { return swapped().lower_m().swapped(); }

SupportPattern SupportPattern::raise_m() const {
  std::vector<LatticeCone> out;
  out.reserve(cones_.size());
  for (const auto& c : cones_) out.push_back({{c.base.first + 1, c.base.second}, c.generators});
  return SupportPattern(std::move(out));
}

SupportPattern SupportPattern::raise_n() const { return swapped().raise_m().swapped(); }

SupportPattern SupportPattern::united(const SupportPattern& other) const {
  std::vector<LatticeCone> out = cones_;
  for (const auto& c : other.cones_) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return SupportPattern(std::move(out));
}

SupportPattern SupportPattern::swapped() const {
  std::vector<LatticeCone> out;
  out.reserve(cones_.size());
  for (const auto& c : cones_) {
    LatticeCone s{swap_pair(c.base), {}};
    for (const auto& g : c.generators) s.generators.push_back(swap_pair(g));
    out.push_back(std::move(s));
  }
  return SupportPattern(std::move(out));
}

std::vector<IndexPair> SupportPattern::enumerate(int max_m, int max_n, int max_degree) const {
  std::set<IndexPair> points;
  const auto keep = [&](int m, int n) { return m <= max_m && n <= max_n && m + n <= max_degree; };
  for (const auto& c : cones_) {
    const auto [m0, n0] = c.base;
    if (c.generators.empty()) {
      if (keep(m0, n0)) points.insert(c.base);
      continue;
    }
    const IndexPair g1 = c.generators[0];
    const IndexPair g2 = c.generators.size() > 1 ? c.generators[1] : IndexPair{0, 0};
    for (int i = 0;; ++i) {
      const int m1 = m0 + i * g1.first;
      const int n1 = n0 + i * g1.second;
      if (m1 + n1 > max_degree) break;
      for (int j = 0;; ++j) {
        const int m = m1 + j * g2.first;
        const int n = n1 + j * g2.second;
        if (m + n > max_degree) break;
        if (keep(m, n)) points.insert({m, n});
        if (g2 == IndexPair{0, 0}) break;
      }
    }
  }
  return {points.begin(), points.end()};
}

IndexSet SupportPattern::differences() const {
  IndexSet out;
  for (const auto& c : cones_) {
    const std::int64_t d0 = c.base.first - c.base.second;
    const auto step = [](IndexPair g) { return std::int64_t{g.first} - g.second; };
    if (c.generators.empty()) {
      out.insert(d0);
    } else if (c.generators.size() == 1) {
      add_two_step_differences(out, d0, step(c.generators[0]), 0);
    } else {
      add_two_step_differences(out, d0, step(c.generators[0]), step(c.generators[1]));
    }
  }
  return out.normalized();
}

}  // namespace diskwalk
