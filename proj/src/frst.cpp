// Copyright 2026 The frst-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frst/frst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "frst/frft.hpp"
#include "frst/parallel.hpp"
#include "frst/windows.hpp"

namespace frst {

namespace {

constexpr double kPi = std::numbers::pi;
// Largest FFT the spectral path will allocate.
constexpr std::size_t kMaxSpectralSize = std::size_t{1} << 22;

void require_inside(const UniformGrid& tau_grid, const UniformGrid& t_grid) {
  const double tol = 1e-9 * t_grid.step();
  if (tau_grid.start() < t_grid.start() - tol || tau_grid.last() > t_grid.last() + tol) {
    std::ostringstream os;
    os << "tau grid [" << tau_grid.start() << ", " << tau_grid.last()
       << "] leaves the signal grid [" << t_grid.start() << ", " << t_grid.last()
       << "]";
    fail(ErrorCode::GridMismatch, os.str());
  }
}

std::size_t count_edge_columns(const UniformGrid& tau_grid, const UniformGrid& t_grid,
                               double sigma) {
  const double reach = 10.0 * sigma;
  std::size_t n = 0;
  for (std::size_t j = 0; j < tau_grid.count(); ++j) {
    const double tau = tau_grid.point(j);
    if (tau - reach < t_grid.start() || tau + reach > t_grid.last()) ++n;
  }
  return n;
}

}  // namespace

double classical_window_ft(double k, double alpha, double xi) {
  const double r = k * alpha / xi;
  return std::exp(-2.0 * kPi * kPi * r * r);
}

UniformGrid default_xi_grid(const UniformGrid& time_grid) {
  const std::size_t half = time_grid.count() / 2;
  if (half < 2)
    fail(ErrorCode::InvalidArgument, "default frequency grid needs at least 4 samples");
  const double bin = 1.0 / (static_cast<double>(time_grid.count()) * time_grid.step());
  return UniformGrid(bin, bin, half);
}

TimeFreqMatrix s_transform_direct(const SampledSignal& f, double k,
                                  const UniformGrid& tau_grid,
                                  const UniformGrid& xi_grid) {
  require_nonzero_frequencies(xi_grid);
  require_inside(tau_grid, f.grid());
  const UniformGrid& tg = f.grid();
  const double dt = tg.step();
  const std::size_t cols = tau_grid.count();
  std::vector<cplx> values(xi_grid.count() * cols);
  parallel_for(xi_grid.count(), [&](std::size_t r) {
    const double xi = xi_grid.point(r);
    std::vector<cplx> modulated(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      modulated[i] = f[i] * detail::unit_phase(-xi * tg.point(i));
    for (std::size_t j = 0; j < cols; ++j) {
      const double tau = tau_grid.point(j);
      cplx acc{};
      for (std::size_t i = 0; i < f.size(); ++i)
        acc += modulated[i] * classical_window(k, tau - tg.point(i), xi);
      values[r * cols + j] = acc * dt;
    }
  });
  TimeFreqMatrix tf(tau_grid, xi_grid, std::move(values), classify_order(1.0),
                    WindowSpec(k, 1.0));
  std::vector<std::size_t> edges(xi_grid.count());
  for (std::size_t r = 0; r < edges.size(); ++r)
    edges[r] = count_edge_columns(tau_grid, tg, k / std::abs(xi_grid.point(r)));
  tf.set_edge_columns(std::move(edges));
  return tf;
}

TimeFreqMatrix s_transform_spectral(const SampledSignal& f, double k,
                                    const UniformGrid& xi_grid) {
  require_nonzero_frequencies(xi_grid);
  if (!(k > 0.0)) fail(ErrorCode::InvalidArgument, "window scale k must be positive");
  const UniformGrid& tg = f.grid();
  const std::size_t n = f.size();
  const double dt = tg.step();

  // Pad so the periodised window has decayed before it wraps onto the
  // signal: P - N samples must cover 12 deviations of the widest row.
  double min_xi = std::abs(xi_grid.start());
  for (std::size_t r = 0; r < xi_grid.count(); ++r)
    min_xi = std::min(min_xi, std::abs(xi_grid.point(r)));
  const double widest = 12.0 * k / min_xi / dt;
  const double want = 2.0 * static_cast<double>(n) + std::ceil(widest);
  const std::size_t size = detail::fft_size(static_cast<std::size_t>(
      std::min(want, static_cast<double>(kMaxSpectralSize))));
  const double span = static_cast<double>(size) * dt;

  std::vector<cplx> spectrum(size);
  std::copy(f.values().begin(), f.values().end(), spectrum.begin());
  detail::fft(spectrum, detail::FftDirection::Forward);

  const std::size_t cols = n;
  std::vector<cplx> values(xi_grid.count() * cols);
  parallel_for(xi_grid.count(), [&](std::size_t r) {
    const double xi = xi_grid.point(r);
    // F^(alpha_m + xi) on the bins alpha_m = m / span. When xi sits on a bin
    // this is an index shift of the signal's DFT, otherwise the shifted
    // samples come from the DFT of the modulated signal.
    std::vector<cplx> row(size);
    const double shift = xi * span;
    const double nearest = std::round(shift);
    if (std::abs(shift - nearest) < 1e-9) {
      const auto s = static_cast<long long>(nearest);
      const auto sz = static_cast<long long>(size);
      for (std::size_t m = 0; m < size; ++m) {
        const long long idx = ((static_cast<long long>(m) + s) % sz + sz) % sz;
        row[m] = spectrum[static_cast<std::size_t>(idx)];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        row[i] = f[i] * detail::unit_phase(-xi * static_cast<double>(i) * dt);
      detail::fft(row, detail::FftDirection::Forward);
    }
    const cplx phase = detail::unit_phase(-xi * tg.start());
    // Transform of the sampled window: the analytic one summed over
    // replicas spaced by the sampling rate.
    const double rate = 1.0 / dt;
    const auto replicas = static_cast<long long>(std::ceil(2.0 * dt * std::abs(xi) / k)) + 1;
    for (std::size_t m = 0; m < size; ++m) {
      const double signed_m = m < (size + 1) / 2 ? static_cast<double>(m)
                                                 : static_cast<double>(m) -
                                                       static_cast<double>(size);
      double w = 0.0;
      for (long long l = -replicas; l <= replicas; ++l)
        w += classical_window_ft(k, signed_m / span + static_cast<double>(l) * rate, xi);
      row[m] *= phase * w;
    }
    detail::fft(row, detail::FftDirection::Backward);
    const double scale = 1.0 / static_cast<double>(size);
    for (std::size_t j = 0; j < cols; ++j) values[r * cols + j] = row[j] * scale;
  });
  TimeFreqMatrix tf(tg, xi_grid, std::move(values), classify_order(1.0),
                    WindowSpec(k, 1.0));
  std::vector<std::size_t> edges(xi_grid.count());
  for (std::size_t r = 0; r < edges.size(); ++r)
    edges[r] = count_edge_columns(tg, tg, k / std::abs(xi_grid.point(r)));
  tf.set_edge_columns(std::move(edges));
  return tf;
}

std::vector<cplx> frst_row(const SampledSignal& f, const FractionalOrder& order,
                           const WindowSpec& spec, const UniformGrid& tau_grid,
                           double xi, FrstMode mode) {
  order.require_generic("frst_forward");
  if (std::abs(xi) <= kXiTolerance) fail(ErrorCode::ZeroFrequency, "frst row at xi=0");
  require_inside(tau_grid, f.grid());
  const UniformGrid& tg = f.grid();
  const std::size_t n = f.size();
  const std::size_t cols = tau_grid.count();
  const double dt = tg.step();

  std::vector<cplx> weighted(n);
  for (std::size_t i = 0; i < n; ++i)
    weighted[i] = f[i] * kernel_eval(order, tg.point(i), xi);

  std::vector<cplx> out(cols);
  if (mode == FrstMode::Direct) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double tau = tau_grid.point(j);
      cplx acc{};
      for (std::size_t i = 0; i < n; ++i)
        acc += weighted[i] * frst_window(spec, order, tau - tg.point(i), xi);
      out[j] = acc * dt;
    }
    return out;
  }

  if (std::abs(tau_grid.step() - dt) > 1e-9 * dt)
    fail(ErrorCode::GridMismatch, "fast FRST needs the tau grid to share the signal step");
  // Lags tau_j - t_i = offset + (j - i) dt with j - i in [-(n-1), cols-1].
  const double offset = tau_grid.start() - tg.start();
  std::vector<cplx> window(n + cols - 1);
  for (std::size_t q = 0; q < window.size(); ++q) {
    const double lag =
        offset + (static_cast<double>(q) - static_cast<double>(n - 1)) * dt;
    window[q] = frst_window(spec, order, lag, xi);
  }
  const std::vector<cplx> conv = detail::linear_convolve(weighted, window);
  for (std::size_t j = 0; j < cols; ++j) out[j] = conv[j + n - 1] * dt;
  return out;
}

TimeFreqMatrix frst_forward(const SampledSignal& f, const FractionalOrder& order,
                            const WindowSpec& spec, const UniformGrid& tau_grid,
                            const UniformGrid& xi_grid, FrstMode mode) {
  order.require_generic("frst_forward");
  require_nonzero_frequencies(xi_grid);
  require_inside(tau_grid, f.grid());
  const std::size_t cols = tau_grid.count();
  std::vector<cplx> values(xi_grid.count() * cols);
  parallel_for(xi_grid.count(), [&](std::size_t r) {
    const auto row = frst_row(f, order, spec, tau_grid, xi_grid.point(r), mode);
    std::copy(row.begin(), row.end(), values.begin() + static_cast<long>(r * cols));
  });
  TimeFreqMatrix tf(tau_grid, xi_grid, std::move(values), order, spec);
  std::vector<std::size_t> edges(xi_grid.count());
  for (std::size_t r = 0; r < edges.size(); ++r)
    edges[r] = count_edge_columns(tau_grid, f.grid(),
                                  window_sigma(spec, order, xi_grid.point(r)));
  tf.set_edge_columns(std::move(edges));
  return tf;
}

Spectrum frst_marginal(const TimeFreqMatrix& tf) {
  const double dtau = tf.tau_grid().step();
  std::vector<cplx> out(tf.rows());
  for (std::size_t r = 0; r < tf.rows(); ++r) {
    cplx acc{};
    for (const cplx& v : tf.row(r)) acc += v;
    out[r] = acc * dtau;
  }
  return Spectrum(tf.xi_grid(), std::move(out));
}

SampledSignal frst_inverse(const TimeFreqMatrix& tf, const FractionalOrder& order,
                           const UniformGrid& t_grid) {
  order.require_generic("frst_inverse");
  return ifrft(frst_marginal(tf), order, t_grid);
}

}  // namespace frst
