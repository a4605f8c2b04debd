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

#include "frst/windows.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace frst {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

void require_nonzero(double xi) {
  if (!(std::abs(xi) > kXiTolerance)) {
    std::ostringstream os;
    os << "window undefined at xi=" << xi << " (|xi| <= " << kXiTolerance << ")";
    fail(ErrorCode::ZeroFrequency, os.str());
  }
}

double frst_scale(const WindowSpec& spec, const FractionalOrder& order, double xi) {
  order.require_generic("frst window");
  require_nonzero(xi);
  return std::pow(std::abs(xi * order.csc()), spec.p);
}

template <class Fn>
double midpoint(double radius, double step, Fn&& fn) {
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * radius / step));
  const double h = 2.0 * radius / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += fn(-radius + (static_cast<double>(i) + 0.5) * h);
  return acc * h;
}

void require_radius(const WindowSpec& spec, const FractionalOrder& order, double xi,
                    double radius, double step) {
  const double need = 10.0 * window_sigma(spec, order, xi);
  if (radius < need * (1.0 - 1e-12)) {
    std::ostringstream os;
    os << "integration radius " << radius << " is below 10 window deviations ("
       << need << ")";
    fail(ErrorCode::InsufficientRadius, os.str());
  }
  if (!(step > 0.0)) fail(ErrorCode::InvalidArgument, "quadrature step must be positive");
}

}  // namespace

double classical_window(double k, double t, double xi) {
  if (!(k > 0.0)) fail(ErrorCode::InvalidArgument, "window scale k must be positive");
  require_nonzero(xi);
  const double u = xi * t / k;
  return std::abs(xi) / k * kInvSqrt2Pi * std::exp(-0.5 * u * u);
}

double frst_window(const WindowSpec& spec, const FractionalOrder& order, double t,
                   double xi) {
  const double s = frst_scale(spec, order, xi);
  const double u = t * s / spec.k;
  return s / spec.k * kInvSqrt2Pi * std::exp(-0.5 * u * u);
}

double window_sigma(const WindowSpec& spec, const FractionalOrder& order, double xi) {
  return spec.k / frst_scale(spec, order, xi);
}

double window_area(const WindowSpec& spec, const FractionalOrder& order, double xi,
                   double radius, double step) {
  require_radius(spec, order, xi, radius, step);
  return midpoint(radius, step,
                  [&](double t) { return frst_window(spec, order, t, xi); });
}

double window_area(const WindowSpec& spec, const FractionalOrder& order, double xi) {
  const double sigma = window_sigma(spec, order, xi);
  return window_area(spec, order, xi, 12.0 * sigma, sigma / 64.0);
}

double moment_bound_closed(const WindowSpec& spec, const FractionalOrder& order,
                           double xi, double C, double N) {
  if (!(C > 0.0) || !(N > 0.0))
    fail(ErrorCode::InvalidArgument, "moment bound needs C > 0 and N > 0");
  const double s = frst_scale(spec, order, xi);
  const double n = std::floor(N);
  const double moment = 2.0 * std::pow(C, n + 1.0) * std::pow(2.0, (n + 1.0) / 2.0) *
                        std::pow(spec.k, n + 1.0) /
                        (2.0 * std::sqrt(std::numbers::pi) * std::pow(s, n + 1.0)) *
                        std::tgamma(n / 2.0 + 1.0);
  return std::pow(2.0, n) * (1.0 + moment);
}

double moment_integral(const WindowSpec& spec, const FractionalOrder& order,
                       double xi, double C, double N, double radius, double step) {
  if (!(C > 0.0) || !(N > 0.0))
    fail(ErrorCode::InvalidArgument, "moment integral needs C > 0 and N > 0");
  require_radius(spec, order, xi, radius, step);
  return midpoint(radius, step, [&](double x) {
    return frst_window(spec, order, x, xi) * std::pow(1.0 + C * std::abs(x), N);
  });
}

double moment_integral(const WindowSpec& spec, const FractionalOrder& order,
                       double xi, double C, double N) {
  const double sigma = window_sigma(spec, order, xi);
  return moment_integral(spec, order, xi, C, N, (12.0 + N) * sigma, sigma / 64.0);
}

}  // namespace frst
