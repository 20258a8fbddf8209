#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diskwalk/errors.hpp"
#include "diskwalk/special_functions.hpp"
#include "oracles.hpp"

using namespace diskwalk;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(7.5, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("generalized binomial matches the Gamma ratio") {
  for (double alpha : {0.0, 1.0, 2.5, -0.5}) {
    for (int m = 0; m <= 20; ++m) {
      const double gamma_form = std::exp(std::lgamma(alpha + m + 1) - std::lgamma(alpha + 1) - std::lgamma(m + 1.0));
      CHECK(binomial_alpha(alpha, m) == doctest::Approx(gamma_form).epsilon(1e-12));
    }
  }
}

TEST_CASE("jacobi_R normalization and low degrees") {
  for (double a : {0.0, 1.0, 2.5}) {
    for (double b : {0.0, 1.0, 4.0}) {
      for (int k = 0; k <= 15; ++k) CHECK(jacobi_R(k, a, b, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(jacobi_R(0, a, b, -0.3) == 1.0);
    }
  }
  CHECK(jacobi_R(1, 0.0, 0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(jacobi_R(2, 0.0, 0.0, 0.5) == doctest::Approx(-0.125).epsilon(1e-14));
}

TEST_CASE("jacobi_R agrees with the explicit binomial sum") {
  for (double a : {0.0, 1.0, 2.0, 2.5}) {
    for (double b : {0.0, 1.0, 3.0, 7.0}) {
      for (int k = 0; k <= 12; ++k) {
        for (double t = -1.0; t <= 1.0; t += 0.125) {
          CHECK(jacobi_R(k, a, b, t) == doctest::Approx(oracle::jacobi_explicit(k, a, b, t)).epsilon(1e-11));
        }
      }
    }
  }
}

TEST_CASE("jacobi_R domain") {
  CHECK_THROWS_AS(jacobi_R(2, 0.0, 0.0, 1.1), domain_error);
  CHECK_THROWS_AS(jacobi_R(2, -1.0, 0.0, 0.0), domain_error);
  CHECK_THROWS_AS(jacobi_R(-1, 0.0, 0.0, 0.0), domain_error);
  CHECK_NOTHROW(jacobi_R(3, 0.0, 0.0, 1.0 + 5e-13));
}

TEST_CASE("DiskPoint and DiscIndex validation") {
  CHECK_THROWS_AS(DiskPoint(1.1, 0.0), domain_error);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.8), domain_error);
  CHECK_NOTHROW(DiskPoint(1.0 + 1e-13, 0.0));
  CHECK_THROWS_AS(disc_poly({-1, 0, 0.0}, DiskPoint(0.1, 0.0)), domain_error);
  CHECK_THROWS_AS(disc_poly({0, 1, -1.0}, DiskPoint(0.1, 0.0)), domain_error);
  const DiskPoint p(0.0, -0.5);
  CHECK(p.r() == 0.5);
  CHECK(p.theta() == doctest::Approx(-std::numbers::pi / 2));
}

TEST_CASE("disc_poly examples") {
  std::mt19937_64 rng(1);
  for (double alpha : {0.0, 1.0, 2.5}) {
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        CHECK(std::abs(disc_poly({m, n, alpha}, DiskPoint(1.0, 0.0)) - 1.0) < 1e-13);
      }
    }
    for (int k = 0; k < 10; ++k) {
      const complex z = oracle::random_disk_point(rng);
      CHECK(std::abs(disc_poly({1, 0, alpha}, DiskPoint(z)) - z) < 1e-15);
    }
  }
  // R^α_{n,n}(0) = (−1)^n n! α! / (n+α)! for integer α.
  for (int alpha = 0; alpha <= 3; ++alpha) {
    for (int n = 0; n <= 8; ++n) {
      const double expected = (n % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0) * std::tgamma(alpha + 1.0) /
                              std::tgamma(n + alpha + 1.0);
      CHECK(disc_poly({n, n, double(alpha)}, DiskPoint(0.0, 0.0)).real() == doctest::Approx(expected).epsilon(1e-13));
      CHECK(disc_poly_at_origin({n, n, double(alpha)}) == doctest::Approx(expected).epsilon(1e-13));
      CHECK(disc_poly({n + 1, n, double(alpha)}, DiskPoint(0.0, 0.0)) == complex{0.0, 0.0});
    }
  }
}

TEST_CASE("disc_poly matches the explicit Jacobi construction") {
  std::mt19937_64 rng(2);
  for (double alpha : {0.0, 1.0, 2.0, 2.5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const complex z = oracle::random_disk_point(rng, 1.0);
      for (int m = 0; m <= 7; ++m) {
        for (int n = 0; n <= 7; ++n) {
          const complex got = disc_poly({m, n, alpha}, DiskPoint(z));
          CHECK(std::abs(got - oracle::disc_poly_explicit(m, n, alpha, z)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("disc_poly boundedness on a disk grid") {
  double worst = 0.0;
  for (double alpha : {0.0, 1.0, 2.0, 2.5}) {
    for (int i = 0; i < 41; ++i) {
      for (int j = 0; j < 41; ++j) {
        const double x = -1.0 + i / 20.0;
        const double y = -1.0 + j / 20.0;
        if (std::hypot(x, y) > 1.0) continue;
        const DiskPoint p(x, y);
        for (int m = 0; m <= 12; ++m) {
          for (int n = 0; m + n <= 12; ++n) worst = std::max(worst, std::abs(disc_poly({m, n, alpha}, p)));
        }
      }
    }
  }
  CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("disc_poly conjugation symmetry") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const complex z = oracle::random_disk_point(rng, 1.0);
    for (double alpha : {0.0, 1.5}) {
      for (int m = 0; m <= 10; ++m) {
        for (int n = 0; m + n <= 10; ++n) {
          const complex v = disc_poly({m, n, alpha}, DiskPoint(z));
          CHECK(std::abs(disc_poly({n, m, alpha}, DiskPoint(z)) - std::conj(v)) < 1e-13);
          CHECK(std::abs(disc_poly({m, n, alpha}, DiskPoint(std::conj(z))) - std::conj(v)) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("disc_norm_h and c_factor") {
  for (double alpha : {0.0, 1.0, 2.5}) {
    CHECK(disc_norm_h({0, 0, alpha}) == doctest::Approx(1.0));
    CHECK(disc_norm_h({1, 0, alpha}) == doctest::Approx(alpha + 2.0));
    CHECK(c_factor(0, 4, alpha) == 0.0);
  }
  CHECK(disc_norm_h({1, 1, 0.0}) == doctest::Approx(3.0));
  CHECK(c_factor(1, 0, 0.0) == 1.0);
  CHECK(c_factor(2, 3, 1.0) == 5.0);
}

TEST_CASE("derivative identities against finite differences") {
  std::mt19937_64 rng(4);
  for (double alpha : {0.0, 1.0, 2.5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const complex z = oracle::random_disk_point(rng, 0.9);
      for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
          const DiscIndex idx{m, n, alpha};
          auto f = [&](complex w) { return disc_poly(idx, DiskPoint(w)); };
          const complex dz = disc_poly_dz(idx, DiskPoint(z));
          const complex dzbar = disc_poly_dzbar(idx, DiskPoint(z));
          CHECK(std::abs(dz - oracle::fd_dz(f, z)) < 1e-7 * std::max(1.0, std::abs(dz)));
          CHECK(std::abs(dzbar - oracle::fd_dzbar(f, z)) < 1e-7 * std::max(1.0, std::abs(dzbar)));
        }
      }
    }
  }
  CHECK(disc_poly_dz({0, 3, 1.0}, DiskPoint(0.3, 0.2)) == complex{0.0, 0.0});
  CHECK(disc_poly_dz({1, 0, 1.0}, DiskPoint(0.3, 0.2)) == complex{1.0, 0.0});
  CHECK(disc_poly_dzbar({4, 0, 1.0}, DiskPoint(0.3, 0.2)) == complex{0.0, 0.0});
}

TEST_CASE("recurrences connecting alpha and alpha+1") {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (double alpha : {0.0, 1.0, 2.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const complex z = oracle::random_disk_point(rng, 0.999);
      const DiskPoint p(z);
      const double s = 1.0 - std::norm(z);
      for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
          const complex lhs = (alpha + 1.0) * disc_poly({m, n + 1, alpha}, p);
          const complex rhs = (alpha + 1.0) * std::conj(z) * disc_poly({m, n, alpha + 1.0}, p) -
                              s * disc_poly_dz({m, n, alpha + 1.0}, p);
          const complex lhs2 = (alpha + 1.0) * disc_poly({n + 1, m, alpha}, p);
          const complex rhs2 =
              (alpha + 1.0) * z * disc_poly({n, m, alpha + 1.0}, p) - s * disc_poly_dzbar({n, m, alpha + 1.0}, p);
          worst = std::max({worst, std::abs(lhs - rhs), std::abs(lhs2 - rhs2)});
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}
