// Copyright (c) 2026 the cpgraphene developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "cpg/numerics.hpp"

using namespace cpg::numerics;

TEST_CASE("integrate_decaying on closed-form references") {
  auto one = integrate_decaying([](double y) { return std::exp(-y); }, 0.0, 1e-10);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(one.abs_error < 1e-8);

  auto gamma3 =
      integrate_decaying([](double y) { return y * y * std::exp(-y); }, 0.0, 1e-10);
  CHECK(gamma3.value == doctest::Approx(2.0).epsilon(1e-10));

  // int_0^inf t^3/(e^{2 pi t} - 1) dt = Gamma(4) zeta(4) / (2 pi)^4 = 1/240
  auto bose = integrate_decaying(
      [](double t) { return t * t * t / std::expm1(2.0 * M_PI * t); }, 0.0, 1e-12, 0.2);
  CHECK(bose.value == doctest::Approx(1.0 / 240.0).epsilon(1e-11));
}

TEST_CASE("integrate_finite on closed-form references") {
  auto unit = integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-13));

  // Beta(3/2, 3/2) = pi/8
  auto beta = integrate_finite([](double x) { return std::sqrt(x * (1.0 - x)); }, 0.0,
                               1.0, 1e-12, /*endpoint_sqrt=*/true);
  CHECK(beta.value == doctest::Approx(M_PI / 8.0).epsilon(1e-12));

  // kernel of the I_2 integral at b = 0.25; frozen from the closed form
  auto i2 = integrate_finite(
      [](double x) {
        const double s = 0.25 + std::sqrt(x * (1.0 - x));
        return 1.0 / (s * s);
      },
      0.0, 1.0, 1e-12, /*endpoint_sqrt=*/true);
  CHECK(i2.value == doctest::Approx(2.77702396054).epsilon(1e-10));
}

TEST_CASE("tolerance halving does not hurt on the reference set") {
  auto f = [](double y) { return y * y * std::exp(-y); };
  double err_loose = std::abs(integrate_decaying(f, 0.0, 1e-6).value - 2.0);
  double err_tight = std::abs(integrate_decaying(f, 0.0, 5e-7).value - 2.0);
  CHECK(err_tight <= err_loose + 1e-15);
}

TEST_CASE("failure paths raise with the partial result attached") {
  SUBCASE("logarithmically divergent tail") {
    CHECK_THROWS_AS(integrate_decaying([](double y) { return 1.0 / (1.0 + y); }, 0.0,
                                       1e-10),
                    numeric_error);
  }
  SUBCASE("derivative of a rapidly oscillating function") {
    auto f = [](double x) { return std::sin(1e9 * x); };
    CHECK_THROWS_AS(derivative_central(f, 0.3, 0.1), numeric_error);
  }
}

TEST_CASE("sum_matsubara") {
  SUBCASE("geometric series with primed zero term") {
    auto r = sum_matsubara([](long l) { return std::exp(-static_cast<double>(l)); },
                           1e-12, 1000);
    CHECK(r.value == doctest::Approx(0.5 + 1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-12));
    CHECK(r.tail_bound < 1e-11);
  }
  SUBCASE("only the halved zero term") {
    auto r = sum_matsubara([](long l) { return l == 0 ? 2.0 : 0.0; }, 1e-10, 100);
    CHECK(r.value == doctest::Approx(1.0));
  }
  SUBCASE("shifted Basel sum") {
    // polynomially decaying terms: the tail-bound contract sets the cost
    auto r = sum_matsubara(
        [](long l) {
          const double x = static_cast<double>(l) + 1.0;
          return 1.0 / (x * x);
        },
        1e-5, 3000000);
    CHECK(r.value == doctest::Approx(0.5 + M_PI * M_PI / 6.0 - 1.0).epsilon(2e-5));
    CHECK(r.tail_bound <= 1e-5 * r.value);
  }
  SUBCASE("l_max too small raises") {
    CHECK_THROWS_AS(sum_matsubara([](long) { return 1.0; }, 1e-10, 100), numeric_error);
  }
}

TEST_CASE("sum_alternating") {
  SUBCASE("ln 2") {
    auto r = sum_alternating(
        [](long n) { return (n % 2 ? 1.0 : -1.0) / static_cast<double>(n); }, 1e-6);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-6));
    CHECK(r.tail_bound <= 1.1e-6 * std::abs(r.value) + 1e-12);
  }
  SUBCASE("eta(3) = (3/4) zeta(3)") {
    auto r = sum_alternating(
        [](long n) {
          const double x = static_cast<double>(n);
          return (n % 2 ? 1.0 : -1.0) / (x * x * x);
        },
        1e-10);
    CHECK(r.value == doctest::Approx(0.9015426773696957).epsilon(1e-9));
  }
  SUBCASE("single nonzero term") {
    auto r = sum_alternating([](long n) { return n == 1 ? 0.7 : 0.0; }, 1e-10);
    CHECK(r.value == doctest::Approx(0.7));
  }
  SUBCASE("growing terms raise") {
    CHECK_THROWS_AS(
        sum_alternating([](long n) { return static_cast<double>(n); }, 1e-10, 100),
        numeric_error);
  }
}

TEST_CASE("derivative_central") {
  SUBCASE("exact on low-degree polynomials") {
    auto sq = [](double x) { return x * x; };
    CHECK(derivative_central(sq, 3.0, 0.1) == doctest::Approx(6.0).epsilon(1e-12));
    auto cube = [](double x) { return x * x * x; };
    CHECK(derivative_central(cube, 0.0, 0.1) == doctest::Approx(0.0).scale(1.0));
    CHECK(derivative_central(cube, 2.0, 0.1) == doctest::Approx(12.0).epsilon(1e-12));
  }
  SUBCASE("transcendental") {
    CHECK(derivative_central([](double x) { return std::sin(x); }, 0.7, 0.05) ==
          doctest::Approx(std::cos(0.7)).epsilon(1e-9));
  }
}

TEST_CASE("abel_plana_residual") {
  CHECK(abel_plana_residual(0.5) <= 1e-10);
  CHECK(abel_plana_residual(1.0) <= 1e-10);
  CHECK(abel_plana_residual(5.0) <= 1e-10);
  CHECK(abel_plana_residual(50.0) <= 1e-10);
}

TEST_CASE("parallel_map is deterministic and ordered") {
  auto f = [](long i) { return std::sin(static_cast<double>(i) * 0.1); };
  std::vector<double> a, b;
  parallel_map(1000, f, a, 1);
  parallel_map(1000, f, b, 8);
  CHECK(a == b);
}
