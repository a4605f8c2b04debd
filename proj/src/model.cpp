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

#include "frst/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace frst {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Range: return "RangeError";
    case ErrorCode::DegenerateOrder: return "DegenerateOrder";
    case ErrorCode::NearSingularOrder: return "NearSingularOrder";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::ZeroFrequency: return "ZeroFrequency";
    case ErrorCode::InsufficientRadius: return "InsufficientRadius";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::UnresolvableScale: return "UnresolvableScale";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::WeightCertificateFailed: return "WeightCertificateFailed";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- grid

UniformGrid::UniformGrid(double start, double step, std::size_t count)
    : start_(start), step_(step), count_(count) {
  if (!std::isfinite(start) || !std::isfinite(step) || !(step > 0.0)) {
    std::ostringstream os;
    os << "grid step must be finite and positive (start=" << start
       << ", step=" << step << ")";
    fail(ErrorCode::InvalidArgument, os.str());
  }
  if (count < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 points");
}

UniformGrid UniformGrid::spanning(double first, double last, std::size_t count) {
  if (count < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  return UniformGrid(first, (last - first) / static_cast<double>(count - 1), count);
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = point(i);
  return out;
}

bool UniformGrid::exact_index(double x, std::size_t& index, double rel_tol) const {
  const double pos = (x - start_) / step_;
  const double nearest = std::round(pos);
  if (nearest < 0.0 || nearest > static_cast<double>(count_ - 1)) return false;
  if (std::abs(pos - nearest) > rel_tol) return false;
  index = static_cast<std::size_t>(nearest);
  return true;
}

// ------------------------------------------------------------- signals

SampledFunction::SampledFunction(UniformGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count()) {
    std::ostringstream os;
    os << "sample count " << values_.size() << " does not match grid count "
       << grid_.count();
    fail(ErrorCode::InvalidArgument, os.str());
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::InvalidArgument, "signal contains non-finite samples");
  }
}

SampledFunction SampledFunction::from_real(UniformGrid grid,
                                           std::span<const double> values) {
  return SampledFunction(grid, std::vector<cplx>(values.begin(), values.end()));
}

SampledFunction SampledFunction::zeros(UniformGrid grid) {
  return SampledFunction(grid, std::vector<cplx>(grid.count()));
}

SampledFunction SampledFunction::sample(UniformGrid grid,
                                        const std::function<cplx(double)>& fn) {
  std::vector<cplx> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.point(i));
  return SampledFunction(grid, std::move(v));
}

bool SampledFunction::is_nonnegative() const noexcept {
  for (const cplx& v : values_)
    if (v.imag() != 0.0 || v.real() < 0.0) return false;
  return true;
}

// --------------------------------------------------------------- order

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Generic: return "Generic";
    case Branch::Identity: return "Identity";
    case Branch::Reflection: return "Reflection";
  }
  return "Unknown";
}

FractionalOrder classify_order(double a) {
  if (!(a >= 0.0 && a < 4.0)) {
    std::ostringstream os;
    os << "fractional order a=" << a << " outside [0, 4)";
    fail(ErrorCode::Range, os.str());
  }
  constexpr double pi = std::numbers::pi;
  FractionalOrder o;
  o.a_ = a;
  o.theta_ = a * pi / 2.0;
  // theta lies in [0, 2pi), so the delta angles are 0, pi and 2pi.
  const double t = o.theta_;
  if (t < kThetaTolerance || 2.0 * pi - t < kThetaTolerance) {
    o.branch_ = Branch::Identity;
  } else if (std::abs(t - pi) < kThetaTolerance) {
    o.branch_ = Branch::Reflection;
  } else {
    o.branch_ = Branch::Generic;
    const double s = std::sin(t);
    o.cot_ = std::cos(t) / s;
    o.csc_ = 1.0 / s;
    o.amplitude_ = std::sqrt(cplx(1.0, -o.cot_));
  }
  return o;
}

cplx FractionalOrder::amplitude() const {
  require_generic("kernel amplitude");
  return amplitude_;
}

double FractionalOrder::abs_amplitude() const { return std::abs(amplitude()); }

void FractionalOrder::require_generic(std::string_view what) const {
  if (branch_ != Branch::Generic) {
    std::ostringstream os;
    os << what << " is undefined on the " << to_string(branch_)
       << " branch (a=" << a_ << ")";
    fail(ErrorCode::DegenerateOrder, os.str());
  }
}

// -------------------------------------------------------------- window

WindowSpec::WindowSpec(double k_, double p_) : k(k_), p(p_) {
  if (!(k > 0.0) || !(p > 0.0) || !std::isfinite(k) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "window parameters must be positive (k=" << k << ", p=" << p << ")";
    fail(ErrorCode::InvalidArgument, os.str());
  }
}

// ------------------------------------------------------------- tf matrix

void require_nonzero_frequencies(const UniformGrid& xi_grid) {
  for (std::size_t r = 0; r < xi_grid.count(); ++r) {
    if (std::abs(xi_grid.point(r)) <= kXiTolerance) {
      std::ostringstream os;
      os << "frequency grid row " << r << " sits at xi=0";
      fail(ErrorCode::ZeroFrequency, os.str());
    }
  }
}

TimeFreqMatrix::TimeFreqMatrix(UniformGrid tau_grid, UniformGrid xi_grid,
                               std::vector<cplx> values, FractionalOrder order,
                               WindowSpec window)
    : tau_grid_(tau_grid),
      xi_grid_(xi_grid),
      values_(std::move(values)),
      order_(order),
      window_(window) {
  if (values_.size() != tau_grid_.count() * xi_grid_.count())
    fail(ErrorCode::InvalidArgument, "matrix size does not match its grids");
  require_nonzero_frequencies(xi_grid_);
}

void TimeFreqMatrix::set_edge_columns(std::vector<std::size_t> counts) {
  if (!counts.empty() && counts.size() != rows())
    fail(ErrorCode::InvalidArgument, "edge metadata needs one entry per row");
  edge_columns_ = std::move(counts);
}

// -------------------------------------------------------------- weights

TemperedWeight TemperedWeight::constant(double C, double N) {
  return TemperedWeight{[](double) { return 1.0; }, C, N, "const"};
}

TemperedWeight TemperedWeight::polynomial(double s) {
  if (!(s > 0.0)) fail(ErrorCode::InvalidArgument, "polynomial weight needs s > 0");
  std::ostringstream name;
  name << "poly(s=" << s << ")";
  return TemperedWeight{
      [s](double x) { return std::pow(1.0 + std::abs(x), s); }, 1.0, s, name.str()};
}

TestFunction TestFunction::gaussian() {
  return TestFunction{
      [](double x) {
        return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
      },
      1.0, 10.0};
}

// ------------------------------------------------------------ intervals

IntervalFamily::IntervalFamily(std::vector<Interval> intervals,
                               std::size_t host_count)
    : intervals_(std::move(intervals)), host_count_(host_count) {
  for (const auto& [first, last] : intervals_) {
    if (!(first < last) || last >= host_count_) {
      std::ostringstream os;
      os << "interval (" << first << ", " << last << ") invalid on a host of "
         << host_count_ << " samples";
      fail(ErrorCode::BadInterval, os.str());
    }
  }
}

IntervalFamily all_intervals(std::size_t host_count, std::size_t max_count) {
  if (host_count < 2)
    fail(ErrorCode::InvalidArgument, "interval family needs at least 2 samples");
  std::vector<IntervalFamily::Interval> out;
  const std::size_t n = host_count;
  if (n * (n - 1) / 2 <= max_count) {
    out.reserve(n * (n - 1) / 2);
    for (std::size_t len = 1; len < n; ++len)
      for (std::size_t first = 0; first + len < n; ++first)
        out.emplace_back(first, first + len);
  } else {
    for (std::size_t len = 1; len < n; len *= 2) {
      const std::size_t hop = len > 1 ? len / 2 : 1;
      for (std::size_t first = 0; first + len < n; first += hop)
        out.emplace_back(first, first + len);
    }
  }
  return IntervalFamily(std::move(out), host_count);
}

}  // namespace frst
