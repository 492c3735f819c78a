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

#include "cpg/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace cpg::numerics {

namespace {

// G7,K15 nodes and weights on [-1,1] (QUADPACK dqk15 constants).
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {0.129484966168870, 0.279705391489277,
                                       0.381830050505119, 0.417959183673469};

template <int N>
using ValueN = std::array<double, N>;

template <int N>
struct Panel {
  double lo, hi;
  ValueN<N> val;
  ValueN<N> err;
  double badness;  // subdivision priority
};

template <int N, typename F>
Panel<N> gk15(const F& f, double lo, double hi, long& evals) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  ValueN<N> fc = f(c);
  ValueN<N> kron{}, gauss{}, resabs{};
  for (int j = 0; j < N; ++j) {
    kron[j] = kWgk[7] * fc[j];
    gauss[j] = kWg[3] * fc[j];
    resabs[j] = kWgk[7] * std::abs(fc[j]);
  }
  for (int i = 0; i < 7; ++i) {
    ValueN<N> fa = f(c - h * kXgk[i]);
    ValueN<N> fb = f(c + h * kXgk[i]);
    for (int j = 0; j < N; ++j) {
      const double s = fa[j] + fb[j];
      kron[j] += kWgk[i] * s;
      resabs[j] += kWgk[i] * (std::abs(fa[j]) + std::abs(fb[j]));
      if (i % 2 == 1) gauss[j] += kWg[i / 2] * s;
    }
  }
  evals += 15;
  Panel<N> p;
  p.lo = lo;
  p.hi = hi;
  double worst = 0.0;
  for (int j = 0; j < N; ++j) {
    p.val[j] = kron[j] * h;
    const double diff = std::abs(kron[j] - gauss[j]) * h;
    // QUADPACK-style rescaling keeps the estimate tight when the
    // integrand is smooth and conservative when it is not.
    const double ra = resabs[j] * h;
    double e = diff;
    if (ra > 0.0 && diff > 0.0) {
      const double r = std::min(200.0 * diff / ra, 1.0);
      e = std::min(diff, ra * r * std::sqrt(r));
      e = std::max(e, 50.0 * 2.2e-16 * ra);
    }
    p.err[j] = e;
    worst = std::max(worst, p.err[j]);
  }
  p.badness = worst;
  return p;
}

template <int N, typename F>
QuadratureResultN<N> adaptive(const F& f, double lo, double hi, double rel_tol,
                              int max_panels, double abs_tol) {
  QuadratureResultN<N> out;
  if (!(hi > lo)) return out;
  long evals = 0;
  std::vector<Panel<N>> panels;
  panels.push_back(gk15<N>(f, lo, hi, evals));

  auto converged = [&](ValueN<N>& total, ValueN<N>& toterr) {
    total.fill(0.0);
    toterr.fill(0.0);
    for (const auto& p : panels)
      for (int j = 0; j < N; ++j) {
        total[j] += p.val[j];
        toterr[j] += p.err[j];
      }
    for (int j = 0; j < N; ++j)
      if (toterr[j] >
          std::max({rel_tol * std::abs(total[j]), abs_tol, kAbsFloor}))
        return false;
    return true;
  };

  ValueN<N> total, toterr;
  while (!converged(total, toterr)) {
    if (static_cast<int>(panels.size()) >= max_panels) {
      double worst_val = 0.0, worst_err = 0.0;
      for (int j = 0; j < N; ++j) {
        worst_val = total[j];
        worst_err = std::max(worst_err, toterr[j]);
      }
      throw numeric_error("adaptive quadrature did not converge", worst_val, worst_err);
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel<N>& a, const Panel<N>& b) {
                                    return a.badness < b.badness;
                                  });
    const double a = worst->lo, b = worst->hi, m = 0.5 * (a + b);
    *worst = gk15<N>(f, a, m, evals);
    panels.push_back(gk15<N>(f, m, b, evals));
  }
  out.value = total;
  out.abs_error = toterr;
  out.evaluations = evals;
  return out;
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo,
                                  double hi, double rel_tol, bool endpoint_sqrt,
                                  int max_panels, double abs_tol) {
  if (!(hi > lo)) {
    if (hi == lo) return {0.0, 0.0, 0};
    throw std::invalid_argument("integrate_finite: lo must be below hi");
  }
  auto wrap1 = [&](auto&& g) {
    auto r = adaptive<1>([&](double x) { return ValueN<1>{g(x)}; }, 0.0, 1.0, rel_tol,
                         max_panels, abs_tol);
    return QuadratureResult{r.value[0], r.abs_error[0], r.evaluations};
  };
  const double len = hi - lo;
  if (endpoint_sqrt) {
    // x = lo + len sin^2(theta); dx = len sin(2 theta) d(theta)
    return wrap1([&](double t) {
      const double th = t * (M_PI / 2.0);
      const double s = std::sin(th);
      return f(lo + len * s * s) * len * std::sin(2.0 * th) * (M_PI / 2.0);
    });
  }
  return wrap1([&](double t) { return f(lo + len * t) * len; });
}

QuadratureResultN<2> integrate_pair(const std::function<std::array<double, 2>(double)>& f,
                                    double lo, double hi, double rel_tol, int max_panels,
                                    double abs_tol) {
  return adaptive<2>(f, lo, hi, rel_tol, max_panels, abs_tol);
}

QuadratureResult integrate_decaying(const std::function<double(double)>& f, double lower,
                                    double rel_tol, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_decaying: bad scale");
  QuadratureResult acc;
  double a = lower;
  double len = scale;
  double prev_mag = -1.0;
  int quiet = 0;
  const int max_segments = 120;
  for (int k = 0; k < max_segments; ++k) {
    const double b = a + len;
    // a far-tail segment may be negligible next to the accumulated value;
    // its own relative criterion is then unreachable and unnecessary
    const double seg_abs_tol = 0.1 * rel_tol * std::abs(acc.value);
    QuadratureResult seg =
        integrate_finite(f, a, b, rel_tol * 0.5, false, 400, seg_abs_tol);
    acc.value += seg.value;
    acc.abs_error += seg.abs_error;
    acc.evaluations += seg.evaluations;
    const double mag = std::abs(seg.value);
    const double floor = std::max(rel_tol * std::abs(acc.value) * 0.25, kAbsFloor);
    if (mag < floor) {
      if (++quiet >= 2) {
        // geometric tail estimate from the decay of the last two segments
        double tail = mag;
        if (prev_mag > 0.0 && mag < 0.9 * prev_mag)
          tail = mag * (mag / prev_mag) / (1.0 - mag / prev_mag);
        acc.abs_error += tail;
        return acc;
      }
    } else {
      quiet = 0;
    }
    prev_mag = mag;
    a = b;
    len *= 2.0;
  }
  throw numeric_error("integrate_decaying: tail did not become negligible", acc.value,
                      acc.abs_error);
}

SumResult sum_matsubara(const std::function<double(long)>& term, double rel_tol,
                        long l_max) {
  if (l_max < 16) throw std::invalid_argument("sum_matsubara: l_max must be >= 16");
  SumResult out;
  out.value = 0.5 * term(0);
  out.terms_used = 1;
  int small_streak = 0;
  double t_prev = 0.0, t_prev2 = 0.0;
  double tail = 0.0;
  for (long l = 1; l <= l_max; ++l) {
    const double t = term(l);
    out.value += t;
    ++out.terms_used;
    const double thresh = rel_tol * std::max(std::abs(out.value), kAbsFloor);
    small_streak = (std::abs(t) < thresh) ? small_streak + 1 : 0;
    if (small_streak >= 3) {
      // tail estimate: geometric from the ratio of the last terms when the
      // decay is clearly geometric, integral comparison otherwise
      double r = 0.0;
      if (std::abs(t_prev) > 0.0) r = std::abs(t) / std::abs(t_prev);
      if (std::abs(t_prev2) > 0.0) r = std::max(r, std::abs(t_prev) / std::abs(t_prev2));
      tail = std::abs(t) * static_cast<double>(l);
      if (r > 0.0 && r < 0.999) tail = std::min(tail, std::abs(t) * r / (1.0 - r));
      if (tail <= thresh) {
        out.tail_bound = tail;
        return out;
      }
      small_streak = 2;  // keep summing until the tail itself is negligible
    }
    t_prev2 = t_prev;
    t_prev = t;
  }
  throw numeric_error("sum_matsubara: truncation criterion unmet at l_max", out.value,
                      tail);
}

SumResult sum_alternating(const std::function<double(long)>& a, double rel_tol,
                          long n_max) {
  SumResult out;
  double prev_abs = 0.0;
  int nonmono = 0;
  for (long n = 1; n <= n_max; ++n) {
    const double t = a(n);
    const double mag = std::abs(t);
    out.value += t;
    ++out.terms_used;
    if (n > 4) {
      if (mag > prev_abs * (1.0 + 1e-12)) {
        if (++nonmono >= 3)
          throw numeric_error("sum_alternating: non-monotone tail", out.value, mag);
      } else {
        nonmono = 0;
      }
    }
    if (n > 2 && mag < rel_tol * std::max(std::abs(out.value), kAbsFloor)) {
      out.tail_bound = mag;  // remainder bounded by first omitted term
      return out;
    }
    prev_abs = mag;
  }
  throw numeric_error("sum_alternating: did not converge", out.value, prev_abs);
}

double derivative_central(const std::function<double(double)>& f, double x, double h0,
                          double h_floor) {
  if (!(h0 > 0.0)) throw std::invalid_argument("derivative_central: h0 must be positive");
  auto central = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  double h = h0;
  double d_prev = central(h);
  double best = d_prev;
  double best_gap = std::numeric_limits<double>::infinity();
  double r_prev = 0.0;
  bool have_prev = false;
  int worsened = 0;
  for (int it = 0; it < 40; ++it) {
    const double d_half = central(0.5 * h);
    const double r = (4.0 * d_half - d_prev) / 3.0;  // two-level Richardson
    if (have_prev) {
      const double gap = std::abs(r - r_prev);
      const double scale = std::max({std::abs(r), std::abs(r_prev), kAbsFloor});
      if (gap <= 1e-6 * scale) return r;
      if (gap < best_gap) {
        best_gap = gap;
        best = r;
        worsened = 0;
      } else if (++worsened >= 3) {
        throw numeric_error("derivative_central: estimates oscillate", best, best_gap);
      }
    }
    r_prev = r;
    have_prev = true;
    d_prev = d_half;
    h *= 0.5;
    if (h < h_floor && have_prev) return r_prev;
  }
  return best;
}

double abel_plana_residual(double s, double rel_tol) {
  if (!(s > 0.0)) throw std::invalid_argument("abel_plana_residual: s must be positive");
  const SumResult sum =
      sum_matsubara([&](long l) { return std::exp(-s * static_cast<double>(l)); },
                    rel_tol, 100000000L);
  const QuadratureResult direct =
      integrate_decaying([&](double t) { return std::exp(-s * t); }, 0.0, rel_tol,
                         1.0 / s);
  // i [f(it) - f(-it)] = 2 sin(s t) for f(t) = exp(-s t)
  const QuadratureResult boundary = integrate_decaying(
      [&](double t) { return std::sin(s * t) / std::expm1(2.0 * M_PI * t); }, 0.0,
      rel_tol, 0.5 / M_PI);
  return std::abs(sum.value - direct.value - 2.0 * boundary.value);
}

int default_thread_count() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_map(long n, const std::function<double(long)>& f, std::vector<double>& out,
                  int threads) {
  out.assign(static_cast<size_t>(n), 0.0);
  if (n == 0) return;
  if (threads <= 0) threads = default_thread_count();
  threads = static_cast<int>(std::min<long>(threads, n));
  if (threads == 1) {
    for (long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
    return;
  }
  std::vector<std::future<void>> workers;
  workers.reserve(static_cast<size_t>(threads));
  std::atomic<long> next{0};
  for (int w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= n) return;
        out[static_cast<size_t>(i)] = f(i);
      }
    }));
  }
  for (auto& w : workers) w.get();
}

}  // namespace cpg::numerics
