#include "diskwalk/index_set.hpp"

#include <algorithm>
#include <numeric>

#include "diskwalk/errors.hpp"

namespace diskwalk {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool Progression::contains(std::int64_t x) const noexcept {
  const std::int64_t delta = x - offset;
  if (delta % step != 0) return false;
  return delta / step >= 0;
}

IndexSet::IndexSet(std::set<std::int64_t> finite, std::vector<Progression> progressions)
    : finite_(std::move(finite)) {
  for (const auto& p : progressions) add_progression(p);
}

void IndexSet::add_progression(Progression p) {
  if (p.step == 0) throw domain_error("progression step must be nonzero");
  progressions_.push_back(p);
}

bool IndexSet::contains(std::int64_t x) const {
  if (finite_.count(x) != 0) return true;
  return std::any_of(progressions_.begin(), progressions_.end(),
                     [x](const Progression& p) { return p.contains(x); });
}

IndexSet IndexSet::united(const IndexSet& other) const {
  IndexSet out = *this;
  out.finite_.insert(other.finite_.begin(), other.finite_.end());
  out.progressions_.insert(out.progressions_.end(), other.progressions_.begin(),
                           other.progressions_.end());
  return out.normalized();
}

IndexSet IndexSet::normalized() const {
  std::vector<Progression> progs = progressions_;
  std::sort(progs.begin(), progs.end());
  progs.erase(std::unique(progs.begin(), progs.end()), progs.end());
  std::set<std::int64_t> finite;
  for (auto x : finite_) {
    const bool covered =
        std::any_of(progs.begin(), progs.end(), [x](const Progression& p) { return p.contains(x); });
    if (!covered) finite.insert(x);
  }
  IndexSet out;
  out.finite_ = std::move(finite);
  out.progressions_ = std::move(progs);
  return out;
}

bool intersects_progression(const IndexSet& s, std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) throw domain_error("progression modulus must be at least 1");
  if (residue < 0 || residue >= modulus) throw domain_error("residue must lie in [0, N)");
  for (auto e : s.finite_part()) {
    if (floor_mod(e, modulus) == residue) return true;
  }
  // a + d·k ≡ j (mod N) is solvable iff gcd(d, N) | (j − a); solutions recur with
  // period N/gcd, so one with k ≥ 0 always exists.
  for (const auto& p : s.progressions()) {
    const std::int64_t g = std::gcd(p.step < 0 ? -p.step : p.step, modulus);
    if (floor_mod(residue - p.offset, g) == 0) return true;
  }
  return false;
}

}  // namespace diskwalk
