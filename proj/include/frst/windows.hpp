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

#include "frst/model.hpp"

namespace frst {

/// Gaussian S-transform window |xi| / (k sqrt(2 pi)) exp(-xi^2 t^2 / (2 k^2)).
/// Throws ZeroFrequency for |xi| <= kXiTolerance, InvalidArgument for k <= 0.
double classical_window(double k, double t, double xi);

/// Fractional S-transform window
///   g(t, xi) = s / (k sqrt(2 pi)) exp(-t^2 s^2 / (2 k^2)),  s = |xi csc theta|^p.
/// The exponent uses |xi csc theta|^(2p), so negative xi and non-integer 2p
/// are well defined and the window keeps unit area.
double frst_window(const WindowSpec& spec, const FractionalOrder& order, double t,
                   double xi);

/// Standard deviation k / |xi csc theta|^p of g(., xi).
double window_sigma(const WindowSpec& spec, const FractionalOrder& order, double xi);

/// Midpoint-rule integral of g(., xi) over [-radius, radius] with the step
/// shrunk so that it divides the interval evenly. Throws InsufficientRadius
/// when radius < 10 window_sigma.
double window_area(const WindowSpec& spec, const FractionalOrder& order, double xi,
                   double radius, double step);
/// Same with radius = 12 sigma and 64 samples per sigma.
double window_area(const WindowSpec& spec, const FractionalOrder& order, double xi);

/// Closed-form bound A_{xi,N} on  int |g(x, xi)| (1 + C|x|)^N dx :
///   2^n (1 + 2 C^(n+1) 2^((n+1)/2) k^(n+1) Gamma(n/2 + 1)
///          / (2 sqrt(pi) |xi csc theta|^(p(n+1)))),   n = floor(N).
double moment_bound_closed(const WindowSpec& spec, const FractionalOrder& order,
                           double xi, double C, double N);

/// Midpoint-rule value of  int g(x, xi) (1 + C|x|)^N dx  over [-radius, radius].
double moment_integral(const WindowSpec& spec, const FractionalOrder& order,
                       double xi, double C, double N, double radius, double step);
/// Same with radius = (12 + N) sigma and 64 samples per sigma.
double moment_integral(const WindowSpec& spec, const FractionalOrder& order,
                       double xi, double C, double N);

}  // namespace frst
