#include <doctest.h>

#include <cmath>
#include <random>

#include "diskwalk/dimension_walks.hpp"
#include "diskwalk/errors.hpp"
#include "oracles.hpp"

using namespace diskwalk;

namespace {

CoefficientTable table_of(double alpha, std::initializer_list<std::pair<IndexPair, complex>> entries) {
  CoefficientTable t(alpha);
  for (const auto& [key, value] : entries) t.set(key.first, key.second, value);
  return t;
}

double max_gap(const CoefficientTable& a, const CoefficientTable& b) {
  double worst = 0.0;
  for (const auto& [key, value] : a.entries()) worst = std::max(worst, std::abs(value - b.at(key.first, key.second)));
  for (const auto& [key, value] : b.entries()) worst = std::max(worst, std::abs(value - a.at(key.first, key.second)));
  return worst;
}

}  // namespace

TEST_CASE("descente examples") {
  const auto dz = descente_z(table_of(0.0, {{{1, 0}, 2.0}}));
  CHECK(dz.alpha() == 1.0);
  CHECK(dz.entries() == CoefficientTable::Entries{{{0, 0}, 2.0}});
  CHECK(descente_z(table_of(1.0, {{{0, 3}, 5.0}})).empty());

  const auto dzbar = descente_zbar(table_of(0.0, {{{0, 1}, 2.0}}));
  CHECK(dzbar.entries() == CoefficientTable::Entries{{{0, 0}, 2.0}});
  CHECK(descente_zbar(table_of(1.0, {{{3, 0}, 5.0}})).empty());

  const auto dx = descente_x(table_of(0.0, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}));
  CHECK(dx.entries() == CoefficientTable::Entries{{{0, 0}, 2.0}});

  // (m+1)(n+α+1)/(α+1) at m = 1, n = 2, α = 1.
  const auto scaled = descente_z(table_of(1.0, {{{2, 2}, 1.0}}));
  CHECK(std::abs(scaled.at(1, 2) - 4.0) < 1e-14);
}

TEST_CASE("descente_zbar is descente_z conjugated by the index swap") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_table(rng, 1.5, 10, 15, false);
    CHECK(max_gap(descente_zbar(t), descente_z(t.swapped()).swapped()) < 1e-15);
  }
}

TEST_CASE("descente_x on a table supported on n = 0 equals descente_z") {
  std::mt19937_64 rng(12);
  CoefficientTable t(2.0);
  for (int m = 0; m <= 8; ++m) t.set(m, 0, std::uniform_real_distribution<double>(0.1, 1.0)(rng));
  CHECK(max_gap(descente_x(t), descente_z(t)) == 0.0);
}

TEST_CASE("montee examples") {
  for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
    const auto one = montee_z(table_of(alpha + 1.0, {{{0, 0}, 1.0}}));
    CHECK(one.table.alpha() == alpha);
    CHECK(one.table.entries() == CoefficientTable::Entries{{{1, 0}, 1.0}});
    CHECK(one.constant == complex{0.0, 0.0});

    const auto onebar = montee_zbar(table_of(alpha + 1.0, {{{0, 0}, 1.0}}));
    CHECK(onebar.table.entries() == CoefficientTable::Entries{{{0, 1}, 1.0}});
    CHECK(onebar.constant == complex{0.0, 0.0});

    const auto zbar = montee_z(table_of(alpha + 1.0, {{{0, 1}, 1.0}}));
    CHECK(zbar.table.size() == 1);
    CHECK(zbar.table.at(1, 1).real() == doctest::Approx((alpha + 1.0) / (alpha + 2.0)).epsilon(1e-15));
    CHECK(zbar.constant.real() == doctest::Approx(1.0 / (alpha + 2.0)).epsilon(1e-15));
    CHECK(zbar.shift() == -zbar.constant);
    for (const complex z : {complex{0.3, -0.2}, complex{-0.7, 0.1}, complex{0.0, 0.0}}) {
      CHECK(std::abs(zbar.constant + synthesize(zbar.table, DiskPoint(z)) - std::norm(z)) < 1e-15);
    }
  }
  CHECK_THROWS_AS(montee_z(table_of(0.0, {{{0, 0}, 1.0}})), domain_error);
  CHECK_THROWS_AS(montee_zbar(table_of(-0.5, {{{0, 0}, 1.0}})), domain_error);
}

TEST_CASE("montee_zbar mirrors montee_z under the index swap") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_table(rng, 2.0, 9, 12, false);
    const auto a = montee_zbar(t);
    const auto b = montee_z(t.swapped());
    CHECK(max_gap(a.table, b.table.swapped()) < 1e-15);
    CHECK(std::abs(a.constant - std::conj(b.constant)) < 1e-15);
  }
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_table(rng, 1.0 + trial % 3, 12, 20, false);
    CHECK(max_gap(descente_z(montee_z(t).table), t) <= 1e-13);
    CHECK(max_gap(descente_zbar(montee_zbar(t).table), t) <= 1e-13);

    // I(D_z f) drops the antiholomorphic column and shifts by the value at the origin.
    const auto back = montee_z(descente_z(t));
    CoefficientTable expected(t.alpha());
    complex origin{};
    for (const auto& [key, value] : t.entries()) {
      if (key.first == 0) continue;
      expected.set(key.first, key.second, value);
      origin += value * disc_poly_at_origin({key.first, key.second, t.alpha()});
    }
    CHECK(max_gap(back.table, expected) < 1e-12);
    CHECK(std::abs(back.constant + origin) < 1e-12);
  }
}

TEST_CASE("montee constant makes the primitive vanish at the origin") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = oracle::random_table(rng, 2.0, 8, 12, false);
    for (const auto& r : {montee_z(t), montee_zbar(t)}) {
      CHECK(r.table.at(0, 0) == complex{0.0, 0.0});
      CHECK(std::abs(r.constant + synthesize(r.table, DiskPoint(0.0, 0.0))) < 1e-13);
    }
  }
}

TEST_CASE("walks preserve nonnegative coefficients") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = oracle::random_table(rng, 1.0 + trial % 2, 10, 12, true);
    for (const auto& out : {descente_z(t), descente_zbar(t), descente_x(t), montee_z(t).table, montee_zbar(t).table}) {
      for (const auto& [key, value] : out.entries()) {
        CHECK(value.real() >= 0.0);
        CHECK(value.imag() == 0.0);
      }
    }
  }
}

TEST_CASE("walks transform declared supports") {
  CoefficientTable t(1.0);
  for (int k = 0; k <= 10; ++k) t.set(k, 0, 1.0);
  t.set_support(SupportPattern::ray({0, 0}, {1, 0}));
  REQUIRE(descente_z(t).support());
  CHECK(descente_z(t).support()->contains(3, 0));
  CHECK(descente_zbar(t).support()->empty());
  const auto up = montee_z(t);
  REQUIRE(up.table.support());
  CHECK(up.table.support()->contains(1, 0));
  CHECK_FALSE(up.table.support()->contains(0, 0));
}

TEST_CASE("Wirtinger finite differences") {
  auto id = [](complex z) { return z; };
  auto abs2 = [](complex z) { return complex{std::norm(z), 0.0}; };
  const complex z{0.3, -0.45};
  CHECK(std::abs(wirtinger_dz(id, z) - 1.0) < 1e-9);
  CHECK(std::abs(wirtinger_dzbar(id, z)) < 1e-9);
  CHECK(std::abs(wirtinger_dz(abs2, z) - std::conj(z)) < 1e-6);
  CHECK(std::abs(wirtinger_dzbar(abs2, z) - z) < 1e-6);
  CHECK(std::abs(partial_x(abs2, z) - 2.0 * z.real()) < 1e-6);
  CHECK_THROWS_AS(wirtinger_dz(id, complex{0.99999, 0.0}), domain_error);

  std::mt19937_64 rng(17);
  for (double alpha : {0.0, 1.0}) {
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        const complex p = oracle::random_disk_point(rng, 0.9);
        auto f = [&](complex w) { return disc_poly({m, n, alpha}, DiskPoint(w)); };
        const complex dz = disc_poly_dz({m, n, alpha}, DiskPoint(p));
        const complex dzbar = disc_poly_dzbar({m, n, alpha}, DiskPoint(p));
        CHECK(std::abs(wirtinger_dz(f, p) - dz) <= 1e-6 * std::max(1.0, std::abs(dz)));
        CHECK(std::abs(wirtinger_dzbar(f, p) - dzbar) <= 1e-6 * std::max(1.0, std::abs(dzbar)));
      }
    }
  }
}

TEST_CASE("descente matches expansions of numerical derivatives") {
  const double alpha = 1.0;
  auto f = [](complex z) { return std::exp(0.6 * z) * (1.0 + 0.5 * std::conj(z) * std::conj(z)) + std::conj(z) * z; };
  const auto rule_a = build_rule(alpha, 40, 80);
  const auto rule_b = build_rule(alpha + 1.0, 40, 80);
  const auto table = expand(f, alpha, 9, 9, rule_a);
  const auto dz_exact = descente_z(table);
  const auto dzbar_exact = descente_zbar(table);
  const auto dz_numeric = expand([&](complex z) { return oracle::fd_dz(f, z, 1e-3); }, alpha + 1.0, 6, 6, rule_b);
  const auto dzbar_numeric =
      expand([&](complex z) { return oracle::fd_dzbar(f, z, 1e-3); }, alpha + 1.0, 6, 6, rule_b);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(std::abs(dz_exact.at(m, n) - dz_numeric.at(m, n)) < 1e-8);
      CHECK(std::abs(dzbar_exact.at(m, n) - dzbar_numeric.at(m, n)) < 1e-8);
    }
  }
}

TEST_CASE("descente_x matches the x-derivative of the synthesized function") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = oracle::random_table(rng, 0.0, 8, 10, false);
    const auto dx = descente_x(t);
    auto f = [&](complex z) { return synthesize(t, DiskPoint(z)); };
    for (int k = 0; k < 10; ++k) {
      const complex z = oracle::random_disk_point(rng, 0.9);
      CHECK(std::abs(synthesize(dx, DiskPoint(z)) - partial_x(f, z)) < 1e-6);
    }
  }
}
