#include "loghankel/caratheodory.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "loghankel/series.hpp"
#include "util.hpp"

using namespace loghankel;

TEST_CASE("herglotz series realizes kernel moments") {
  // Single atom at angle 0 is (1+z)/(1-z): c_n = 2.
  const auto half = herglotz_series({{{1.0, 0.0}}}, 10);
  CHECK(std::abs(half[0] - Complex(1.0)) <= 1e-15);
  for (int n = 1; n <= 10; ++n) CHECK(std::abs(half[n] - Complex(2.0)) <= 1e-14);

  // Equal atoms at 0 and pi give (1+z^2)/(1-z^2).
  const double pi = 3.14159265358979323846;
  const auto even = herglotz_series({{{0.5, 0.0}, {0.5, pi}}}, 8);
  for (int n = 1; n <= 8; ++n) {
    const double want = (n % 2 == 0) ? 2.0 : 0.0;
    CHECK(std::abs(even[n] - Complex(want)) <= 1e-13);
  }

  // Single atom at pi/2: c_n = 2 i^n.
  const auto rot = herglotz_series({{{1.0, pi / 2.0}}}, 6);
  Complex in(1.0);
  for (int n = 1; n <= 6; ++n) {
    in *= Complex(0.0, 1.0);
    CHECK(std::abs(rot[n] - 2.0 * in) <= 1e-13);
  }
}

TEST_CASE("herglotz series rejects invalid weights") {
  CHECK_THROWS_AS(herglotz_series({{{-0.1, 0.0}, {1.1, 1.0}}}, 6),
                  std::domain_error);
  CHECK_THROWS_AS(herglotz_series({{{0.4, 0.0}, {0.4, 1.0}}}, 6),
                  std::domain_error);
  CHECK_THROWS_AS(herglotz_series({{}}, 6), std::domain_error);
}

TEST_CASE("herglotz coefficients never exceed 2 in magnitude") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto m = testutil::random_mixture(rng, 1 + static_cast<int>(i % 4));
    const auto p = herglotz_series(m, 10);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(p[n]) <= 2.0 + 1e-12);
  }
}

TEST_CASE("lz_coefficients closed form on pinned inputs") {
  // c1 = 2 collapses the parametrization regardless of x, w.
  const auto t1 = lz_coefficients({2.0, Complex(0.3, 0.4), Complex(-0.5, 0.1)});
  CHECK(std::abs(t1.c1 - Complex(2.0)) <= 1e-15);
  CHECK(std::abs(t1.c2 - Complex(2.0)) <= 1e-15);
  CHECK(std::abs(t1.c3 - Complex(2.0)) <= 1e-15);

  const auto t2 = lz_coefficients({0.0, Complex(1.0), Complex(0.0)});
  CHECK(std::abs(t2.c1) <= 1e-15);
  CHECK(std::abs(t2.c2 - Complex(2.0)) <= 1e-15);
  CHECK(std::abs(t2.c3) <= 1e-15);

  const auto t3 = lz_coefficients({0.0, Complex(0.0), Complex(1.0)});
  CHECK(std::abs(t3.c1) <= 1e-15);
  CHECK(std::abs(t3.c2) <= 1e-15);
  CHECK(std::abs(t3.c3 - Complex(2.0)) <= 1e-15);

  CHECK_THROWS_AS(lz_coefficients({2.5, Complex(0.0), Complex(0.0)}),
                  std::domain_error);
  CHECK_THROWS_AS(lz_coefficients({-0.5, Complex(0.0), Complex(0.0)}),
                  std::domain_error);
  CHECK_THROWS_AS(lz_coefficients({1.0, Complex(1.2, 0.0), Complex(0.0)}),
                  std::domain_error);
  CHECK_THROWS_AS(lz_coefficients({1.0, Complex(0.0), Complex(0.0, -1.2)}),
                  std::domain_error);
}

TEST_CASE("lz triples stay admissible") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const auto t = lz_coefficients(testutil::random_lz(rng));
    CHECK(std::abs(t.c2) <= 2.0 + 1e-12);
    CHECK(std::abs(t.c3) <= 2.0 + 1e-12);
  }
}

TEST_CASE("membership predicate accepts members and rejects violators") {
  const auto half = herglotz_series({{{1.0, 0.0}}}, 10);
  CHECK(is_caratheodory_approx(half, 24));

  CHECK_FALSE(is_caratheodory_approx(testutil::from_reals({1, 3, 0, 0}), 24));
  CHECK_FALSE(is_caratheodory_approx(testutil::from_reals({0.5, 0, 0, 0}), 24));

  const auto t = lz_coefficients({1.3, Complex(0.2, -0.6), Complex(0.4, 0.3)});
  std::vector<Complex> c(11, Complex(0.0));
  c[0] = Complex(1.0);
  c[1] = t.c1;
  c[2] = t.c2;
  c[3] = t.c3;
  CHECK(is_caratheodory_approx(TruncatedSeries(std::move(c)), 24));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto m = testutil::random_mixture(rng, 3);
    CHECK(is_caratheodory_approx(herglotz_series(m, 10), 16));
  }
}

TEST_CASE("two-atom moments solve the parametrization on the bidisk boundary") {
  // A two-point measure sits on the boundary of the (c1,c2) moment body, so
  // the solved x has |x| = 1 and c3 is then pinned with no w freedom; this
  // nails the x^2 term of the third-moment formula.
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> ulam(0.1, 0.9);
  std::uniform_real_distribution<double> uth(0.1, 3.0);
  int accepted = 0;
  for (int i = 0; i < 2000 && accepted < 200; ++i) {
    const double lam = ulam(rng);
    const double th1 = uth(rng);
    const double s = -lam * std::sin(th1) / (1.0 - lam);
    if (std::abs(s) > 1.0) continue;
    double th2 = std::asin(s);
    double c1 = 2.0 * (lam * std::cos(th1) + (1.0 - lam) * std::cos(th2));
    if (!(c1 > 0.05 && c1 < 1.95)) {
      th2 = 3.14159265358979323846 - th2;
      c1 = 2.0 * (lam * std::cos(th1) + (1.0 - lam) * std::cos(th2));
      if (!(c1 > 0.05 && c1 < 1.95)) continue;
    }
    ++accepted;
    const auto atom = [&](int n) {
      return 2.0 * (lam * std::polar(1.0, n * th1) +
                    (1.0 - lam) * std::polar(1.0, n * th2));
    };
    const Complex c2 = atom(2);
    const Complex c3 = atom(3);
    const double r = 4.0 - c1 * c1;
    const Complex x = (2.0 * c2 - c1 * c1) / r;
    CHECK(std::abs(x) <= 1.0 + 1e-9);
    const Complex c3_pred =
        0.25 * (Complex(c1 * c1 * c1) + (2.0 * r * c1) * x - (c1 * r) * (x * x));
    CHECK(std::abs(c3 - c3_pred) <= 1e-9);
  }
  CHECK(accepted == 200);
}

TEST_CASE("interior three-atom moments solve for w inside the disk") {
  // Conjugation-symmetric three-atom mixtures give real moments with |x| < 1;
  // the solved w must land in the closed unit disk.
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> uth(0.2, 2.9);
  std::uniform_real_distribution<double> ulam(0.05, 0.45);
  int solved = 0;
  for (int i = 0; i < 2000 && solved < 200; ++i) {
    const double lam = ulam(rng);
    const double th = uth(rng);
    const double mu = 1.0 - 2.0 * lam;
    const double c1 = 2.0 * (2.0 * lam * std::cos(th) + mu);
    if (!(c1 > 0.05 && c1 < 1.95)) continue;
    const double c2 = 2.0 * (2.0 * lam * std::cos(2.0 * th) + mu);
    const double c3 = 2.0 * (2.0 * lam * std::cos(3.0 * th) + mu);
    const double r = 4.0 - c1 * c1;
    const double x = (2.0 * c2 - c1 * c1) / r;
    CHECK(std::abs(x) <= 1.0 + 1e-9);
    if (1.0 - x * x <= 1e-6) continue;
    ++solved;
    const double w = (4.0 * c3 - c1 * c1 * c1 - 2.0 * r * c1 * x + c1 * r * x * x) /
                     (2.0 * r * (1.0 - x * x));
    CHECK(std::abs(w) <= 1.0 + 1e-6);
  }
  CHECK(solved == 200);
}
