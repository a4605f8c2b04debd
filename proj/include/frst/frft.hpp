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

#include <cstddef>

#include "frst/model.hpp"

namespace frst {

/// K_a(t, xi) = A exp(i pi (xi^2 cot - 2 xi t csc + t^2 cot)). Throws
/// DegenerateOrder on the delta branches, which have no pointwise kernel.
cplx kernel_eval(const FractionalOrder& order, double t, double xi);

/// O(N M) rectangle-rule quadrature of  sum_i f(t_i) K_a(t_i, xi) dt.
/// This is the reference path every faster route is checked against.
Spectrum frft_direct(const SampledSignal& f, const FractionalOrder& order,
                     const UniformGrid& xi_grid);

enum class FrftFastMethod {
  /// Exact chirp-z (Bluestein) evaluation on the mapped grid xi * csc.
  ChirpZ,
  /// Zero-padded FFT followed by linear interpolation between bins.
  LinearInterp,
};

struct FrftFastOptions {
  FrftFastMethod method = FrftFastMethod::ChirpZ;
  /// Zero-padding factor for LinearInterp; ignored by ChirpZ.
  std::size_t pad_factor = 16;
};

/// Minimum |sin theta| accepted by the FFT-based transform paths.
inline constexpr double kMinSinTheta = 1e-6;

/// Chirp, Fourier, chirp factorisation of the kernel:
///   F(xi) = A e^{i pi xi^2 cot} FT[f(t) e^{i pi t^2 cot}](xi csc).
/// Same discrete sum as frft_direct, computed in O((N + M) log(N + M)).
/// Errors: DegenerateOrder, NearSingularOrder when |sin theta| < 1e-6,
/// GridMismatch when |xi csc| exceeds the Nyquist frequency 1 / (2 dt).
Spectrum frft_fast(const SampledSignal& f, const FractionalOrder& order,
                   const UniformGrid& xi_grid, const FrftFastOptions& options = {});

enum class FrftPath { Fast, Direct };

/// All three kernel branches. Identity resamples f onto xi_grid, Reflection
/// resamples f(-x); both require every xi to coincide with a grid point of
/// f (GridMismatch otherwise).
Spectrum frft_apply(const SampledSignal& f, const FractionalOrder& order,
                    const UniformGrid& xi_grid, FrftPath path = FrftPath::Fast);

/// Quadrature of the inversion integral  sum_j F(xi_j) conj(K_a(t, xi_j)) dxi.
SampledSignal ifrft(const Spectrum& spectrum, const FractionalOrder& order,
                    const UniformGrid& t_grid);

}  // namespace frst
