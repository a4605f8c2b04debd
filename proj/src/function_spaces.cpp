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

#include "frst/function_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace frst {

namespace {

void require_family(const SampledSignal& f, const IntervalFamily& family) {
  if (family.empty()) fail(ErrorCode::EmptyFamily, "interval family is empty");
  if (family.host_count() != f.size()) {
    std::ostringstream os;
    os << "interval family built for " << family.host_count()
       << " samples, signal has " << f.size();
    fail(ErrorCode::BadInterval, os.str());
  }
}

std::vector<double> weight_samples(const TemperedWeight& w, const UniformGrid& grid) {
  std::vector<double> k(grid.count());
  for (std::size_t i = 0; i < k.size(); ++i) {
    k[i] = w(grid.point(i));
    if (!(k[i] > 0.0) || !std::isfinite(k[i])) {
      std::ostringstream os;
      os << "weight " << w.name << " is not positive and finite at x="
         << grid.point(i) << " (value " << k[i] << ")";
      fail(ErrorCode::NonpositiveWeight, os.str());
    }
  }
  return k;
}

// Largest (sum_I |f_i - f_I| kappa_i) / (sum_I kappa_i) over the family,
// kappa = 1 when `kappa` is empty. The dt factors of numerator and
// denominator cancel.
double sup_oscillation(const SampledSignal& f, const std::vector<double>& kappa,
                       const IntervalFamily& family) {
  const std::size_t n = f.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = f[i].real();
    im[i] = f[i].imag();
  }
  const bool weighted = !kappa.empty();
  const double dt = f.grid().step();
  double best = 0.0;
  for (const auto& [first, last] : family.intervals()) {
    double sr = 0.0, si = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
      sr += re[i];
      si += im[i];
    }
    const double count = static_cast<double>(last - first + 1);
    const double mr = sr / count, mi = si / count;
    double acc = 0.0, measure = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
      const double dr = re[i] - mr, di = im[i] - mi;
      const double kw = weighted ? kappa[i] : 1.0;
      acc += std::sqrt(dr * dr + di * di) * kw;
      measure += kw;
    }
    best = std::max(best, (acc * dt) / (measure * dt));
  }
  return best;
}

// Rows of lag-indexed phi_t(l dt) samples, truncated at the support radius.
std::vector<double> dilated_taps(const TestFunction& phi, double t, double dt,
                                 std::size_t max_lag) {
  const auto reach = static_cast<std::size_t>(
      std::min(static_cast<double>(max_lag), std::floor(phi.support_radius * t / dt)));
  std::vector<double> taps(2 * reach + 1);
  for (std::size_t q = 0; q < taps.size(); ++q) {
    const double y = (static_cast<double>(q) - static_cast<double>(reach)) * dt;
    taps[q] = phi(y / t) / t;
  }
  return taps;
}

}  // namespace

cplx interval_mean(const SampledSignal& f, IntervalFamily::Interval interval) {
  const auto [first, last] = interval;
  if (!(first < last) || last >= f.size()) {
    std::ostringstream os;
    os << "interval (" << first << ", " << last << ") invalid on " << f.size()
       << " samples";
    fail(ErrorCode::BadInterval, os.str());
  }
  cplx acc{};
  for (std::size_t i = first; i <= last; ++i) acc += f[i];
  // (1/|I|) sum f dt with |I| = count dt.
  const double dt = f.grid().step();
  return acc * dt / (static_cast<double>(last - first + 1) * dt);
}

double bmo_norm(const SampledSignal& f, const IntervalFamily& family) {
  require_family(f, family);
  return sup_oscillation(f, {}, family);
}

double mean_bound_m(const SampledSignal& f, const IntervalFamily& family) {
  require_family(f, family);
  std::vector<double> prefix(f.size() + 1, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) prefix[i + 1] = prefix[i] + std::abs(f[i]);
  double best = 0.0;
  for (const auto& [first, last] : family.intervals()) {
    const double count = static_cast<double>(last - first + 1);
    best = std::max(best, (prefix[last + 1] - prefix[first]) / count);
  }
  return best;
}

std::vector<double> default_scales(const UniformGrid& grid) {
  const double span = grid.last() - grid.start();
  std::vector<double> out;
  for (int j = 0;; ++j) {
    const double t = 2.0 * grid.step() * std::pow(2.0, 0.5 * j);
    if (t > span * (1.0 + 1e-12)) break;
    out.push_back(t);
  }
  return out;
}

std::vector<double> maximal_function(const SampledSignal& f, const TestFunction& phi,
                                     std::span<const double> scales) {
  if (scales.empty()) fail(ErrorCode::UnresolvableScale, "no dilation scales given");
  const double dt = f.grid().step();
  for (double t : scales) {
    if (!(t >= 2.0 * dt * (1.0 - 1e-12))) {
      std::ostringstream os;
      os << "scale " << t << " is below twice the grid step " << dt;
      fail(ErrorCode::UnresolvableScale, os.str());
    }
  }
  const std::size_t n = f.size();
  std::vector<double> best(n, 0.0);
  for (double t : scales) {
    const auto taps = dilated_taps(phi, t, dt, n - 1);
    const std::size_t reach = taps.size() / 2;
    for (std::size_t j = 0; j < n; ++j) {
      // (f * phi_t)(x_j) = sum_i f_i phi_t(x_j - t_i) dt over |j - i| <= reach.
      const std::size_t lo = j >= reach ? j - reach : 0;
      const std::size_t hi = std::min(n - 1, j + reach);
      cplx acc{};
      for (std::size_t i = lo; i <= hi; ++i) acc += f[i] * taps[j + reach - i];
      best[j] = std::max(best[j], std::abs(acc * dt));
    }
  }
  return best;
}

double hardy_norm(const SampledSignal& f, const TestFunction& phi,
                  std::span<const double> scales) {
  const auto m = maximal_function(f, phi, scales);
  double acc = 0.0;
  for (double v : m) acc += v;
  return acc * f.grid().step();
}

TemperedReport tempered_check(const TemperedWeight& w, std::span<const double> xi_samples,
                              std::span<const double> eta_samples) {
  if (xi_samples.empty() || eta_samples.empty())
    fail(ErrorCode::InvalidArgument, "tempered_check needs nonempty sample lists");
  auto eval = [&](double x) {
    const double v = w(x);
    if (!(v > 0.0)) {
      std::ostringstream os;
      os << "weight " << w.name << " is not positive at x=" << x;
      fail(ErrorCode::NonpositiveWeight, os.str());
    }
    return v;
  };
  TemperedReport report;
  for (double xi : xi_samples) {
    const double growth = std::pow(1.0 + w.C * std::abs(xi), w.N);
    for (double eta : eta_samples) {
      double ratio = eval(xi + eta) / (growth * eval(eta));
      if (std::isnan(ratio)) ratio = std::numeric_limits<double>::infinity();
      report.worst_ratio = std::max(report.worst_ratio, ratio);
    }
  }
  report.pass = report.worst_ratio <= 1.0 + 1e-12;
  return report;
}

std::vector<double> weighted_interval_measure(const IntervalFamily& family,
                                              const TemperedWeight& w,
                                              const UniformGrid& grid) {
  if (family.host_count() != grid.count())
    fail(ErrorCode::BadInterval, "interval family does not match the grid");
  const auto kappa = weight_samples(w, grid);
  std::vector<double> out;
  out.reserve(family.size());
  for (const auto& [first, last] : family.intervals()) {
    double acc = 0.0;
    for (std::size_t i = first; i <= last; ++i) acc += kappa[i];
    out.push_back(acc * grid.step());
  }
  return out;
}

double bmo_kappa_norm(const SampledSignal& f, const TemperedWeight& w,
                      const IntervalFamily& family) {
  require_family(f, family);
  return sup_oscillation(f, weight_samples(w, f.grid()), family);
}

double hardy_kappa_norm(const SampledSignal& f, const TestFunction& phi,
                        std::span<const double> scales, const TemperedWeight& w) {
  const auto kappa = weight_samples(w, f.grid());
  const auto m = maximal_function(f, phi, scales);
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * kappa[i];
  return acc * f.grid().step();
}

double lp_kappa_norm(const SampledSignal& f, double p, const TemperedWeight& w) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "exponent p=" << p << " must be finite and >= 1";
    fail(ErrorCode::BadExponent, os.str());
  }
  const auto kappa = weight_samples(w, f.grid());
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::pow(std::abs(f[i]), p) * kappa[i];
  return std::pow(acc * f.grid().step(), 1.0 / p);
}

}  // namespace frst
