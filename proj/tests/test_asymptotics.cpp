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

#include "cpg/asymptotics.hpp"
#include "cpg/numerics.hpp"
#include "cpg/poltensor.hpp"

using namespace cpg;
using namespace cpg::asymptotics;

namespace {
const GrapheneModel kG{1.0 / 300.0, false};
const Constants& kC = Constants::codata2018();
const double kA = 2e-7;

AtomSpec unit_atom() { return make_atom(kA * kA * kA, kA * kA * kA, "unit"); }
}  // namespace

TEST_CASE("low-temperature coefficients") {
  const auto k = coefficients(unit_atom(), kA, kG);
  SUBCASE("cubic-law coefficients and their ratio") {
    CHECK(k.q1 == doctest::Approx(1141.9).epsilon(2e-4));
    CHECK(k.q2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k.q1 / k.q2 == doctest::Approx(2283.9).epsilon(2.2e-4));
  }
  SUBCASE("quartic-law coefficients") {
    const double ap = kC.alpha_fs * M_PI;
    const double v = kG.v_tilde;
    const double first_term = 2.0 * ap / (v * std::pow(ap + 2.0 * v, 3));
    CHECK(first_term == doctest::Approx(5.31e5).epsilon(1e-3));
    CHECK(std::abs(k.c_te) == doctest::Approx(3.439).epsilon(1e-3));
    CHECK(first_term / std::abs(k.c_te) == doctest::Approx(1.54e5).epsilon(3e-3));
    CHECK(k.c_tm ==
          doctest::Approx(first_term + 4.0 / (3.0 * (ap + 2.0 * v))).epsilon(1e-12));
  }
  SUBCASE("zero-frequency coefficients") {
    CHECK(k.r1 > 0.0);
    CHECK(k.r2 == doctest::Approx(0.25).epsilon(1e-12));
    const auto e_only = coefficients(make_atom(kA * kA * kA, 0.0), kA, kG);
    CHECK(e_only.q1 > 0.0);
    CHECK(e_only.q2 < 0.0);
    CHECK(e_only.r1 > 0.0);
    CHECK(e_only.r2 == 0.0);
  }
  SUBCASE("empty atom zeroes everything") {
    const auto z = coefficients(make_atom(0.0, 0.0), kA, kG);
    CHECK(z.c_tm == 0.0);
    CHECK(z.c_te == 0.0);
    CHECK(z.q1 == 0.0);
    CHECK(z.q2 == 0.0);
    CHECK(z.r1 == 0.0);
    CHECK(z.r2 == 0.0);
  }
}

TEST_CASE("monomial scaling laws") {
  const auto atom = unit_atom();
  const double T = 1.7;
  CHECK(delta1_asymptotic(atom, kA, 2.0 * T, kG) ==
        doctest::Approx(16.0 * delta1_asymptotic(atom, kA, T, kG)).epsilon(1e-12));
  CHECK(delta2_lgeq1_asymptotic(atom, kA, 2.0 * T, kG) ==
        doctest::Approx(8.0 * delta2_lgeq1_asymptotic(atom, kA, T, kG)).epsilon(1e-12));
  CHECK(entropy_low_t(atom, kA, 2.0 * T, kG) ==
        doctest::Approx(4.0 * entropy_low_t(atom, kA, T, kG)).epsilon(1e-12));
  CHECK(delta1_asymptotic(atom, kA, 0.0, kG) == 0.0);
  CHECK(delta2_lgeq1_asymptotic(atom, kA, 0.0, kG) == 0.0);
  CHECK(entropy_low_t(atom, kA, 0.0, kG) == 0.0);
}

TEST_CASE("signs in the validity regime") {
  const auto atom = unit_atom();
  const auto tg = make_thermal_geometry(kA, 1.0, kG);
  const double T_low = 0.05 * tg.T_eff_g;
  CHECK(delta1_asymptotic(make_atom(atom.alpha0, 0.0), kA, T_low, kG) < 0.0);
  CHECK(delta2_lgeq1_asymptotic(atom, kA, T_low, kG) < 0.0);
  CHECK(delta2_l0_asymptotic(atom, kA, T_low, kG) < 0.0);  // log argument < 1
  CHECK(entropy_low_t(atom, kA, T_low, kG) > 0.0);
}

TEST_CASE("entropy law is minus the derivative of the cubic term") {
  const auto atom = unit_atom();
  const double T = 0.8;
  const double h = 1e-4;
  const double num = -(delta2_lgeq1_asymptotic(atom, kA, T + h, kG) -
                       delta2_lgeq1_asymptotic(atom, kA, T - h, kG)) /
                     (2.0 * h);
  CHECK(entropy_low_t(atom, kA, T, kG) == doctest::Approx(num).epsilon(1e-7));
}

TEST_CASE("dominance ordering of the closed forms at tau = 1e-3") {
  const auto atom = unit_atom();
  const auto probe = make_thermal_geometry(kA, 1.0, kG);
  const double T = 1e-3 * probe.T_eff / (2.0 * M_PI);
  const double d1 = std::abs(delta1_asymptotic(atom, kA, T, kG));
  const double d2a = std::abs(delta2_lgeq1_asymptotic(atom, kA, T, kG));
  const double d2b = std::abs(delta2_l0_asymptotic(atom, kA, T, kG));
  CHECK(d2a > d2b);
  CHECK(d2b > d1);
}

TEST_CASE("dropping q2 barely moves the cubic coefficient") {
  const auto k = coefficients(unit_atom(), kA, kG);
  CHECK(std::abs(k.q2 / (k.q1 + k.q2)) < 1e-3);
}

TEST_CASE("I-integrals") {
  SUBCASE("closed forms against direct quadrature") {
    for (double b : {0.05, 0.1, 0.25, 0.4}) {
      auto quad = [&](int k) {
        return numerics::integrate_finite(
                   [&](double x) {
                     return 1.0 / std::pow(b + std::sqrt(x * (1.0 - x)), k);
                   },
                   0.0, 1.0, 1e-12, /*endpoint_sqrt=*/true)
            .value;
      };
      CHECK(i2(b) == doctest::Approx(quad(2)).epsilon(1e-9));
      CHECK(i3(b) == doctest::Approx(quad(3)).epsilon(1e-9));
    }
  }
  SUBCASE("frozen values at b = 0.25") {
    CHECK(i2(0.25) == doctest::Approx(2.77702396054).epsilon(1e-10));
    CHECK(i3(0.25) == doctest::Approx(5.11261874558).epsilon(1e-10));
    CHECK(i2(0.25) == doctest::Approx(2.7771).epsilon(1e-4));
    CHECK(i3(0.25) == doctest::Approx(5.1126).epsilon(1e-4));
  }
  SUBCASE("small-b remainders stay bounded") {
    for (double b : {1e-2, 1e-3, 1e-4}) {
      const double rem2 = i2(b) + 4.0 * std::log(b);
      const double rem2_coarse = i2(2.0 * b) + 4.0 * std::log(2.0 * b);
      CHECK(std::abs(rem2) <= std::abs(rem2_coarse) + 0.1);
      const double rem3 = i3(b) - 2.0 / b - 24.0 * b * std::log(b);
      const double rem3_coarse =
          i3(2.0 * b) - 1.0 / b - 48.0 * b * std::log(2.0 * b);
      CHECK(std::abs(rem3) <= std::abs(rem3_coarse) + 0.1);
    }
  }
  SUBCASE("quadrature fallback beyond the closed-form domain") {
    CHECK(i2(0.7) == doctest::Approx(0.8700899017).epsilon(1e-9));
    CHECK(i3(0.7) == doctest::Approx(0.8304528439).epsilon(1e-9));
    CHECK(i2(0.5) > 0.0);  // no NaN at the degeneracy point
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(i2(0.0), std::domain_error);
    CHECK_THROWS_AS(i3(-0.1), std::domain_error);
  }
}

TEST_CASE("tensor-ratio asymptotics") {
  SUBCASE("vanish with temperature") {
    const auto r = pol_ratio_asymptotics({1e-6, 1.0, 1e-6}, kG);
    CHECK(std::abs(r.first) < 1e-11);
    CHECK(std::abs(r.second) < 1e-11);
  }
  SUBCASE("second ratio flips sign at 3 zeta^2 = 2 g^2") {
    // with the small-v form this happens at zeta^2 = 2 v^2 y^2
    const double y = 1.0;
    const double v = kG.v_tilde;
    const double z_flip = std::sqrt(2.0) * v * y;
    const auto below = pol_ratio_asymptotics({0.5 * z_flip, y, 1e-3}, kG);
    const auto above = pol_ratio_asymptotics({2.0 * z_flip, y, 1e-3}, kG);
    CHECK(below.second < 0.0);
    CHECK(above.second > 0.0);
  }
  SUBCASE("first ratio matches the computed tensor at tau = 1e-3") {
    const double tau = 1e-3;
    const poltensor::TensorPoint p{tau, 1.0, tau};
    const auto t = poltensor::thermal_corrections(p, kG, 1e-11);
    const auto r = pol_ratio_asymptotics(p, kG);
    CHECK(t.dpi00 / t.pi00_zero == doctest::Approx(r.first).epsilon(0.05));
  }
}

TEST_CASE("low-temperature free energy composition") {
  const auto atom = unit_atom();
  CHECK(free_energy_low_t(make_atom(0.0, 0.0), kA, 1.0, kG) == 0.0);
  const double e0 = lifshitz::energy_zero_t(atom, kA, kG);
  CHECK(free_energy_low_t(atom, kA, 0.0, kG) == doctest::Approx(e0).epsilon(1e-12));
  const double T = 1.0;
  CHECK(free_energy_low_t(atom, kA, T, kG) ==
        doctest::Approx(e0 + delta2_lgeq1_asymptotic(atom, kA, T, kG)).epsilon(1e-12));
  CHECK(entropy_next_order_magnitude(atom, kA, T, kG) >= 0.0);
}
