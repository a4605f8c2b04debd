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

// FFT plumbing over FFTW. Internal to the core library.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frst/model.hpp"

namespace frst::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalised in-place DFT: Forward uses exp(-2 pi i jk/n), Backward
/// exp(+2 pi i jk/n).
void fft(std::span<cplx> data, FftDirection dir);

/// Smallest size >= n whose prime factors are 2, 3, 5 or 7.
std::size_t fft_size(std::size_t n);

/// Full linear convolution, length a.size() + b.size() - 1, computed with a
/// zero-padded FFT.
std::vector<cplx> linear_convolve(std::span<const cplx> a, std::span<const cplx> b);

/// Chirp-z evaluation of the sums
///   X_j = sum_i x_i exp(sign * 2 pi i * u_j * t_i),  j in [0, m),
/// with t_i = t0 + i dt and u_j = u0 + j du. Exact up to rounding.
std::vector<cplx> chirp_z(std::span<const cplx> x, double t0, double dt,
                          double u0, double du, std::size_t m, int sign);

/// exp(i * 2 pi * turns), reducing `turns` modulo 1 first.
cplx unit_phase(double turns);

}  // namespace frst::detail
