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

#include "frst/frft.hpp"

#include <cmath>
#include <sstream>

#include "fft.hpp"
#include "frst/parallel.hpp"

namespace frst {

namespace {

// exp(i pi (xi^2 cot - 2 xi t csc + t^2 cot)) without the amplitude.
cplx kernel_phase(const FractionalOrder& o, double t, double xi) {
  const double turns =
      0.5 * (xi * xi * o.cot() - 2.0 * xi * t * o.csc() + t * t * o.cot());
  return detail::unit_phase(turns);
}

void check_fast_preconditions(const SampledSignal& f, const FractionalOrder& order,
                              const UniformGrid& xi_grid) {
  order.require_generic("frft_fast");
  if (std::abs(std::sin(order.theta())) < kMinSinTheta) {
    std::ostringstream os;
    os << "order a=" << order.a() << " is too close to a delta branch for the "
       << "FFT path (|sin theta| < " << kMinSinTheta << ")";
    fail(ErrorCode::NearSingularOrder, os.str());
  }
  const double nyquist = 0.5 / f.grid().step();
  const double reach = std::max(std::abs(xi_grid.start()), std::abs(xi_grid.last())) *
                       std::abs(order.csc());
  if (reach > nyquist * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "mapped frequency |xi csc theta| = " << reach
       << " exceeds the Nyquist frequency " << nyquist << " of the input grid";
    fail(ErrorCode::GridMismatch, os.str());
  }
}

}  // namespace

cplx kernel_eval(const FractionalOrder& order, double t, double xi) {
  order.require_generic("kernel_eval");
  return order.amplitude() * kernel_phase(order, t, xi);
}

Spectrum frft_direct(const SampledSignal& f, const FractionalOrder& order,
                     const UniformGrid& xi_grid) {
  order.require_generic("frft_direct");
  const cplx amp = order.amplitude();
  const double dt = f.grid().step();
  std::vector<cplx> out(xi_grid.count());
  parallel_for(out.size(), [&](std::size_t j) {
    const double xi = xi_grid.point(j);
    cplx acc{};
    for (std::size_t i = 0; i < f.size(); ++i)
      acc += f[i] * kernel_phase(order, f.grid().point(i), xi);
    out[j] = amp * acc * dt;
  });
  return Spectrum(xi_grid, std::move(out));
}

Spectrum frft_fast(const SampledSignal& f, const FractionalOrder& order,
                   const UniformGrid& xi_grid, const FrftFastOptions& options) {
  check_fast_preconditions(f, order, xi_grid);
  const UniformGrid& tg = f.grid();
  const double dt = tg.step();
  const double cot = order.cot();
  const double csc = order.csc();

  std::vector<cplx> chirped(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double t = tg.point(i);
    chirped[i] = f[i] * detail::unit_phase(0.5 * t * t * cot);
  }

  // H(u) = sum_i chirped_i exp(-i 2 pi u t_i), wanted at u_j = xi_j csc.
  std::vector<cplx> h;
  if (options.method == FrftFastMethod::ChirpZ) {
    h = detail::chirp_z(chirped, tg.start(), dt, xi_grid.start() * csc,
                        xi_grid.step() * csc, xi_grid.count(), -1);
  } else {
    if (options.pad_factor < 1)
      fail(ErrorCode::InvalidArgument, "pad_factor must be at least 1");
    const std::size_t n = detail::fft_size(options.pad_factor * f.size());
    std::vector<cplx> buf(n);
    std::copy(chirped.begin(), chirped.end(), buf.begin());
    detail::fft(buf, detail::FftDirection::Forward);
    // buf[m] samples G(u) = sum_i chirped_i exp(-i 2 pi u i dt), which has
    // period 1/dt in u, at u = m / (n dt).
    h.resize(xi_grid.count());
    const auto nn = static_cast<long long>(n);
    for (std::size_t j = 0; j < h.size(); ++j) {
      const double u = xi_grid.point(j) * csc;
      const double pos = u * static_cast<double>(n) * dt;
      const double base = std::floor(pos);
      const double frac = pos - base;
      const auto m0 = static_cast<long long>(base);
      const auto i0 = static_cast<std::size_t>(((m0 % nn) + nn) % nn);
      const auto i1 = static_cast<std::size_t>((((m0 + 1) % nn) + nn) % nn);
      const cplx g = (1.0 - frac) * buf[i0] + frac * buf[i1];
      h[j] = g * detail::unit_phase(-u * tg.start());
    }
  }

  const cplx amp = order.amplitude();
  std::vector<cplx> out(xi_grid.count());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double xi = xi_grid.point(j);
    out[j] = amp * detail::unit_phase(0.5 * xi * xi * cot) * h[j] * dt;
  }
  return Spectrum(xi_grid, std::move(out));
}

Spectrum frft_apply(const SampledSignal& f, const FractionalOrder& order,
                    const UniformGrid& xi_grid, FrftPath path) {
  if (order.is_generic()) {
    return path == FrftPath::Fast ? frft_fast(f, order, xi_grid)
                                  : frft_direct(f, order, xi_grid);
  }
  const double sign = order.branch() == Branch::Identity ? 1.0 : -1.0;
  std::vector<cplx> out(xi_grid.count());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double x = sign * xi_grid.point(j);
    std::size_t idx = 0;
    if (!f.grid().exact_index(x, idx)) {
      std::ostringstream os;
      os << "delta-branch resampling needs f at x=" << x
         << ", which is not a point of the input grid";
      fail(ErrorCode::GridMismatch, os.str());
    }
    out[j] = f[idx];
  }
  return Spectrum(xi_grid, std::move(out));
}

SampledSignal ifrft(const Spectrum& spectrum, const FractionalOrder& order,
                    const UniformGrid& t_grid) {
  order.require_generic("ifrft");
  const cplx amp = std::conj(order.amplitude());
  const UniformGrid& xg = spectrum.grid();
  const double dxi = xg.step();
  std::vector<cplx> out(t_grid.count());
  parallel_for(out.size(), [&](std::size_t i) {
    const double t = t_grid.point(i);
    cplx acc{};
    for (std::size_t j = 0; j < spectrum.size(); ++j)
      acc += spectrum[j] * std::conj(kernel_phase(order, t, xg.point(j)));
    out[i] = amp * acc * dxi;
  });
  return SampledSignal(t_grid, std::move(out));
}

}  // namespace frst
