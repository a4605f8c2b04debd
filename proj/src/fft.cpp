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

#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace frst::detail {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface
// is. Plans are made once per (size, direction) and kept for the process.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, FftDirection dir) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, dir);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* buf = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(n), buf, buf,
        dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, FftDirection>, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void fft(std::span<cplx> data, FftDirection dir) {
  if (data.empty()) return;
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans().get(data.size(), dir), p, p);
}

std::size_t fft_size(std::size_t n) {
  for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
    std::size_t r = m;
    for (std::size_t f : {2u, 3u, 5u, 7u})
      while (r % f == 0) r /= f;
    if (r == 1) return m;
  }
}

std::vector<cplx> linear_convolve(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = fft_size(out_len);
  std::vector<cplx> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fft(fa, FftDirection::Forward);
  fft(fb, FftDirection::Forward);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i] * scale;
  fft(fa, FftDirection::Backward);
  fa.resize(out_len);
  return fa;
}

cplx unit_phase(double turns) {
  const double r = turns - std::floor(turns);
  const double ang = 2.0 * std::numbers::pi * r;
  return {std::cos(ang), std::sin(ang)};
}

std::vector<cplx> chirp_z(std::span<const cplx> x, double t0, double dt,
                          double u0, double du, std::size_t m, int sign) {
  const std::size_t n = x.size();
  if (n == 0 || m == 0) return std::vector<cplx>(m);
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double beta = du * dt;
  // u_j t_i splits into constant, i-only, j-only and i*j terms; the i*j term
  // is (i^2 + j^2 - (j - i)^2) / 2, which turns the sum into a convolution.
  auto half_square = [beta](double idx) { return 0.5 * beta * (idx * idx); };

  std::vector<cplx> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(i);
    const double turns = s * (u0 * dt * di + half_square(di));
    a[i] = x[i] * unit_phase(turns);
  }
  std::vector<cplx> b(n + m - 1);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double l = static_cast<double>(k) - static_cast<double>(n - 1);
    b[k] = unit_phase(-s * half_square(l));
  }
  const std::vector<cplx> c = linear_convolve(a, b);
  std::vector<cplx> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double dj = static_cast<double>(j);
    const double turns = s * (u0 * t0 + dj * du * t0 + half_square(dj));
    out[j] = c[j + n - 1] * unit_phase(turns);
  }
  return out;
}

}  // namespace frst::detail
