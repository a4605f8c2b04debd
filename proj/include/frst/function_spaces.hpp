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

#include <span>
#include <vector>

#include "frst/model.hpp"

namespace frst {

/// Mean of f over the samples of `interval`. BadInterval if the indices do
/// not fit f's grid.
cplx interval_mean(const SampledSignal& f, IntervalFamily::Interval interval);

/// Discrete BMO seminorm: the largest mean oscillation
///   (1/|I|) sum_{i in I} |f_i - f_I| dt
/// over the family, |I| = (samples in I) * dt. EmptyFamily if the family
/// has no intervals.
double bmo_norm(const SampledSignal& f, const IntervalFamily& family);

/// Largest interval mean of |f| over the family.
double mean_bound_m(const SampledSignal& f, const IntervalFamily& family);

/// Dilation scales 2 dt 2^(j/2), j = 0, 1, ..., up to the span of `grid`.
std::vector<double> default_scales(const UniformGrid& grid);

/// Pointwise max over `scales` of |(f * phi_t)(x)|, phi_t(y) = phi(y/t) / t,
/// with f extended by zero. UnresolvableScale for a scale below 2 dt.
std::vector<double> maximal_function(const SampledSignal& f, const TestFunction& phi,
                                     std::span<const double> scales);

/// sum_x maximal_function(x) dx.
double hardy_norm(const SampledSignal& f, const TestFunction& phi,
                  std::span<const double> scales);

struct TemperedReport {
  bool pass = true;
  /// max of kappa(xi + eta) / ((1 + C|xi|)^N kappa(eta)) over the samples.
  double worst_ratio = 0.0;
};

/// Checks the weight's (C, N) certificate on every (xi, eta) sample pair.
/// Passes iff worst_ratio <= 1 + 1e-12. NonpositiveWeight on a sample with
/// kappa <= 0.
TemperedReport tempered_check(const TemperedWeight& w, std::span<const double> xi_samples,
                              std::span<const double> eta_samples);

/// |I|_kappa = sum_{i in I} kappa(t_i) dt for each interval of the family.
std::vector<double> weighted_interval_measure(const IntervalFamily& family,
                                              const TemperedWeight& w,
                                              const UniformGrid& grid);

/// Weighted BMO seminorm
///   max_I (1/|I|_kappa) sum_{i in I} |f_i - f_I| kappa(t_i) dt,
/// where f_I is the plain (unweighted) interval mean.
double bmo_kappa_norm(const SampledSignal& f, const TemperedWeight& w,
                      const IntervalFamily& family);

/// sum_x maximal_function(x) kappa(x) dx.
double hardy_kappa_norm(const SampledSignal& f, const TestFunction& phi,
                        std::span<const double> scales, const TemperedWeight& w);

/// (sum_i |f_i|^p kappa(t_i) dt)^(1/p). BadExponent unless p >= 1.
double lp_kappa_norm(const SampledSignal& f, double p, const TemperedWeight& w);

}  // namespace frst
