#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace diskwalk {

/// { offset + step·k : k ∈ Z₊ } with step ≠ 0.
struct Progression {
  std::int64_t offset;
  std::int64_t step;

  bool contains(std::int64_t x) const noexcept;
  friend bool operator==(const Progression&, const Progression&) = default;
  friend auto operator<=>(const Progression&, const Progression&) = default;
};

/// A set of integers: a finite part united with one-sided arithmetic progressions.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::set<std::int64_t> finite, std::vector<Progression> progressions);

  static IndexSet nonnegative() { return IndexSet({}, {{0, 1}}); }
  static IndexSet nonpositive() { return IndexSet({}, {{0, -1}}); }
  static IndexSet integers() { return IndexSet({}, {{0, 1}, {0, -1}}); }

  const std::set<std::int64_t>& finite_part() const noexcept { return finite_; }
  const std::vector<Progression>& progressions() const noexcept { return progressions_; }

  bool empty() const noexcept { return finite_.empty() && progressions_.empty(); }
  bool contains(std::int64_t x) const;
  void insert(std::int64_t x) { finite_.insert(x); }
  /// Throws domain_error on step 0.
  void add_progression(Progression p);
  IndexSet united(const IndexSet& other) const;

  /// Drops duplicate progressions and finite elements already covered by one.
  IndexSet normalized() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  std::set<std::int64_t> finite_;
  std::vector<Progression> progressions_;
};

/// Exact test of S ∩ (N·Z + j) ≠ ∅ for 0 ≤ j < N.
bool intersects_progression(const IndexSet& s, std::int64_t modulus, std::int64_t residue);

}  // namespace diskwalk
