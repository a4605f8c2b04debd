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

#pragma once

#include <vector>

#include "frst/model.hpp"

namespace frst {

/// Fourier transform of the classical Gaussian window in its time argument,
/// exp(-2 pi^2 k^2 alpha^2 / xi^2). Equal to 1 at alpha = 0.
double classical_window_ft(double k, double alpha, double xi);

/// Positive FFT bin frequencies m / (N dt), m = 1 .. N/2, of a time grid.
/// The zero bin is left out so every row is a valid S-transform frequency.
UniformGrid default_xi_grid(const UniformGrid& time_grid);

/// Classical S-transform by direct quadrature:
///   S(tau, xi) = sum_i f(t_i) w(tau - t_i, xi) exp(-i 2 pi xi t_i) dt.
/// The result carries order a = 1 and window (k, 1).
/// Errors: ZeroFrequency for a row at xi = 0, GridMismatch when tau_grid
/// leaves the span of f's grid.
TimeFreqMatrix s_transform_direct(const SampledSignal& f, double k,
                                  const UniformGrid& tau_grid,
                                  const UniformGrid& xi_grid);

/// Classical S-transform through the Fourier domain: per row, the inverse
/// transform of f^(alpha + xi) times the window transform, periodised over
/// the sampling rate so it is the transform of the sampled window. The tau
/// grid is f's grid. Agrees with s_transform_direct to rounding.
TimeFreqMatrix s_transform_spectral(const SampledSignal& f, double k,
                                    const UniformGrid& xi_grid);

enum class FrstMode {
  /// O(N M) quadrature per row.
  Direct,
  /// Zero-padded FFT convolution per row; tau_grid must share f's step.
  Fast,
};

/// One row (fixed xi) of the fractional S-transform on tau_grid.
std::vector<cplx> frst_row(const SampledSignal& f, const FractionalOrder& order,
                           const WindowSpec& spec, const UniformGrid& tau_grid,
                           double xi, FrstMode mode);

/// Fractional S-transform
///   FRST(tau, xi) = sum_i f(t_i) g(tau - t_i, xi) K_a(t_i, xi) dt,
/// with f extended by zero beyond its grid. Rows are computed in parallel.
/// Columns whose window support passes the grid edge are counted per row in
/// edge_columns().
/// Errors: DegenerateOrder on the delta branches (use frft_apply for the
/// sifted values there), ZeroFrequency, GridMismatch.
TimeFreqMatrix frst_forward(const SampledSignal& f, const FractionalOrder& order,
                            const WindowSpec& spec, const UniformGrid& tau_grid,
                            const UniformGrid& xi_grid, FrstMode mode);

/// Per row: sum over tau of tf(tau, xi) dtau. Since every window has unit
/// area this recovers the fractional Fourier transform.
Spectrum frst_marginal(const TimeFreqMatrix& tf);

/// ifrft of the marginal, evaluated on t_grid.
SampledSignal frst_inverse(const TimeFreqMatrix& tf, const FractionalOrder& order,
                           const UniformGrid& t_grid);

}  // namespace frst
