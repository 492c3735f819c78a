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

#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cpg::numerics {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
};

struct SumResult {
  double value = 0.0;
  long terms_used = 0;
  double tail_bound = 0.0;
};

/// Thrown when an integral or sum fails to meet its tolerance. Carries the
/// partial result and the internal error estimate at the point of failure.
struct numeric_error : std::runtime_error {
  double partial;
  double error_estimate;
  numeric_error(const std::string& what, double partial_, double err_)
      : std::runtime_error(what), partial(partial_), error_estimate(err_) {}
};

// Absolute floor below which convergence is accepted regardless of the
// relative criterion; keeps exactly-zero integrands from subdividing forever.
inline constexpr double kAbsFloor = 1e-300;

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. When endpoint_sqrt
/// is set the interval is mapped through x = lo + (hi-lo) sin^2(theta), which
/// removes the endpoint derivative blowup of sqrt(x(1-x))-type integrands.
/// Convergence: total error <= max(rel_tol * |value|, abs_tol, kAbsFloor).
QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo,
                                  double hi, double rel_tol, bool endpoint_sqrt = false,
                                  int max_panels = 400, double abs_tol = 0.0);

/// Semi-infinite integral of a decaying integrand: a first panel of length
/// ~scale followed by geometrically growing panels, each integrated
/// adaptively, until the running tail estimate is negligible.
QuadratureResult integrate_decaying(const std::function<double(double)>& f, double lower,
                                    double rel_tol, double scale = 1.0);

/// Same adaptive core for an N-component integrand evaluated in one pass.
/// Convergence requires every component to meet the relative criterion.
template <int N>
struct QuadratureResultN {
  std::array<double, N> value{};
  std::array<double, N> abs_error{};
  long evaluations = 0;
};

QuadratureResultN<2> integrate_pair(const std::function<std::array<double, 2>(double)>& f,
                                    double lo, double hi, double rel_tol,
                                    int max_panels = 400, double abs_tol = 0.0);

/// Matsubara-style primed sum: value = term(0)/2 + sum_{l>=1} term(l).
/// Truncates once three consecutive terms each contribute less than rel_tol
/// of the running sum; the reported tail bound comes from a geometric
/// extrapolation of the last terms.
SumResult sum_matsubara(const std::function<double(long)>& term, double rel_tol,
                        long l_max);

/// Alternating (or more generally sign-mixed, eventually monotone) series
/// sum_{n>=1} a(n); remainder bounded by the first omitted term.
SumResult sum_alternating(const std::function<double(long)>& a, double rel_tol,
                          long n_max = 200000000L);

/// Central difference with Richardson extrapolation; the step is halved until
/// two successive extrapolated values agree to 1e-6 relative, or h reaches
/// h_floor. Oscillatory non-agreement raises numeric_error with the best
/// estimate attached.
double derivative_central(const std::function<double(double)>& f, double x, double h0,
                          double h_floor = 0.0);

/// Self-test of the summation/quadrature stack on the identity
///   sum'_{l>=0} e^{-s l} = int_0^inf e^{-s t} dt
///                        + 2 int_0^inf sin(s t)/(e^{2 pi t}-1) dt,
/// valid for s > 0. Returns the absolute residual.
double abel_plana_residual(double s, double rel_tol = 1e-12);

/// Deterministic parallel map: fills out[i] = f(i) for i in [0, n) using a
/// fixed block decomposition, then the caller reduces in index order.
void parallel_map(long n, const std::function<double(long)>& f, std::vector<double>& out,
                  int threads);

int default_thread_count();

}  // namespace cpg::numerics
