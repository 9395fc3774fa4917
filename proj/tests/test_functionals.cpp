#include "loghankel/functionals.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "loghankel/series.hpp"
#include "util.hpp"

using namespace loghankel;

namespace {

TruncatedSeries koebe(int order) {
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = Complex(n);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries wedge(int order) {  // z/(1-z): all coefficients 1
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(1.0));
  c[0] = Complex(0.0);
  return TruncatedSeries(std::move(c));
}

Complex random_c(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("log_coeffs on closed forms") {
  const auto gk = log_coeffs(koebe(10), 5);
  REQUIRE(gk.size() == 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(gk[static_cast<size_t>(n - 1)] - Complex(1.0 / n)) <= 1e-12);
  }

  const auto gw = log_coeffs(wedge(10), 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(gw[static_cast<size_t>(n - 1)] - Complex(0.5 / n)) <= 1e-12);
  }

  CHECK_THROWS_AS(log_coeffs(koebe(10), 0), std::range_error);
  CHECK_THROWS_AS(log_coeffs(koebe(10), 10), std::range_error);
  CHECK_THROWS_AS(log_coeffs(wedge(10) + wedge(10), 3), std::domain_error);
}

TEST_CASE("Koebe inverse and log-inverse coefficients") {
  const auto f = koebe(10);
  const auto inv = inverse_coeffs(f);
  CHECK(std::abs(inv.A2 - Complex(-2.0)) <= 1e-12);
  CHECK(std::abs(inv.A3 - Complex(5.0)) <= 1e-12);
  CHECK(std::abs(inv.A4 - Complex(-14.0)) <= 1e-12);

  const auto g = log_inverse_coeffs(f);
  CHECK(std::abs(g.gamma1 - Complex(-1.0)) <= 1e-12);
  CHECK(std::abs(g.gamma2 - Complex(1.5)) <= 1e-12);
  CHECK(std::abs(g.gamma3 - Complex(-10.0 / 3.0)) <= 1e-12);

  CHECK(std::abs(h21_log_inverse(f) - Complex(13.0 / 12.0)) <= 1e-12);
}

TEST_CASE("half-plane map z/(1-z) values") {
  const auto f = wedge(10);
  const auto g = log_inverse_coeffs(f);
  CHECK(std::abs(g.gamma1 - Complex(-0.5)) <= 1e-12);
  CHECK(std::abs(g.gamma2 - Complex(0.25)) <= 1e-12);
  CHECK(std::abs(g.gamma3 - Complex(-1.0 / 6.0)) <= 1e-12);
  CHECK(std::abs(h21_log_inverse(f) - Complex(1.0 / 48.0)) <= 1e-12);
}

TEST_CASE("determinant: product form equals quartic form") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const Complex a2 = random_c(rng), a3 = random_c(rng), a4 = random_c(rng);
    CHECK(std::abs(h21_from_a234(a2, a3, a4) - h21_quartic(a2, a3, a4)) <=
          1e-12);
  }
}

TEST_CASE("determinant rotates by e^{4 i theta}") {
  std::mt19937_64 rng(42);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < 50; ++i) {
    const Complex a2 = random_c(rng), a3 = random_c(rng), a4 = random_c(rng);
    const Complex h = h21_from_a234(a2, a3, a4);
    for (double th : {0.0, pi / 7.0, pi / 3.0, 1.0, 2.5}) {
      // Rotation f -> e^{-i th} f(e^{i th} z) maps a_n to e^{i(n-1) th} a_n.
      const Complex r1 = std::polar(1.0, th);
      const Complex hr = h21_from_a234(r1 * a2, r1 * r1 * a3, r1 * r1 * r1 * a4);
      CHECK(std::abs(hr - std::polar(1.0, 4.0 * th) * h) <= 1e-12);
      CHECK(std::abs(std::abs(hr) - std::abs(h)) <= 1e-12);
    }
  }
}

TEST_CASE("log-inverse coefficients match the reverted series") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto f = testutil::random_normalized(rng, 10);
    const auto direct = log_inverse_coeffs(f);
    const auto via_series = log_coeffs(revert(f), 3);
    CHECK(std::abs(direct.gamma1 - via_series[0]) <= 1e-10);
    CHECK(std::abs(direct.gamma2 - via_series[1]) <= 1e-10);
    CHECK(std::abs(direct.gamma3 - via_series[2]) <= 1e-10);
  }
}

TEST_CASE("functional guards") {
  CHECK_THROWS_AS(inverse_coeffs(TruncatedSeries::identity(3)),
                  std::range_error);
  CHECK_THROWS_AS(h21_log_inverse(testutil::from_reals({0, 2, 0, 0, 0})),
                  std::domain_error);
}
