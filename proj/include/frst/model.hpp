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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frst/error.hpp"

namespace frst {

using cplx = std::complex<double>;

/// Angle tolerance for recognising the delta branches of the kernel.
inline constexpr double kThetaTolerance = 1e-9;
/// Frequencies with |xi| at or below this are treated as xi = 0.
inline constexpr double kXiTolerance = 1e-12;

/// Uniform axis: point(i) = start + i * step, i in [0, count).
class UniformGrid {
 public:
  /// Throws Error(InvalidArgument) unless step > 0, count >= 2 and both
  /// start and step are finite.
  UniformGrid(double start, double step, std::size_t count);

  /// Grid with `count` points spanning [first, last] inclusive.
  static UniformGrid spanning(double first, double last, std::size_t count);

  double start() const noexcept { return start_; }
  double step() const noexcept { return step_; }
  std::size_t count() const noexcept { return count_; }
  double point(std::size_t i) const noexcept {
    return start_ + static_cast<double>(i) * step_;
  }
  double last() const noexcept { return point(count_ - 1); }
  std::vector<double> points() const;

  /// Index of the grid point equal to x within `rel_tol * step`, if any.
  bool exact_index(double x, std::size_t& index, double rel_tol = 1e-9) const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double start_;
  double step_;
  std::size_t count_;
};

/// Complex samples on a uniform axis. Used for time signals and spectra
/// alike; the two aliases only document intent.
class SampledFunction {
 public:
  SampledFunction(UniformGrid grid, std::vector<cplx> values);

  /// Real-valued samples.
  static SampledFunction from_real(UniformGrid grid, std::span<const double> values);
  static SampledFunction zeros(UniformGrid grid);
  /// Samples `fn` at every grid point.
  static SampledFunction sample(UniformGrid grid,
                                const std::function<cplx(double)>& fn);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

  /// True when every sample has zero imaginary part and a non-negative
  /// real part.
  bool is_nonnegative() const noexcept;

 private:
  UniformGrid grid_;
  std::vector<cplx> values_;
};

using SampledSignal = SampledFunction;
using Spectrum = SampledFunction;

enum class Branch { Generic, Identity, Reflection };

std::string_view to_string(Branch b) noexcept;

/// Order a of the fractional transform, with theta = a * pi / 2 and the
/// kernel amplitude A = sqrt(1 - i cot theta) (principal branch).
class FractionalOrder {
 public:
  double a() const noexcept { return a_; }
  double theta() const noexcept { return theta_; }
  Branch branch() const noexcept { return branch_; }
  bool is_generic() const noexcept { return branch_ == Branch::Generic; }
  /// Throws Error(DegenerateOrder) on the delta branches.
  cplx amplitude() const;
  double abs_amplitude() const;
  double cot() const noexcept { return cot_; }
  double csc() const noexcept { return csc_; }

  /// Throws DegenerateOrder unless the branch is Generic.
  void require_generic(std::string_view what) const;

 private:
  friend FractionalOrder classify_order(double a);
  FractionalOrder() = default;

  double a_ = 0.0;
  double theta_ = 0.0;
  Branch branch_ = Branch::Identity;
  cplx amplitude_{};
  double cot_ = 0.0;
  double csc_ = 0.0;
};

/// Throws Error(Range) for a outside [0, 4).
FractionalOrder classify_order(double a);

/// Gaussian window parameters for the fractional S-transform.
struct WindowSpec {
  WindowSpec(double k, double p);
  double k;
  double p;
};

/// Output of the (fractional) S-transform. Rows are indexed by xi, columns
/// by tau; storage is row-major.
class TimeFreqMatrix {
 public:
  TimeFreqMatrix(UniformGrid tau_grid, UniformGrid xi_grid,
                 std::vector<cplx> values, FractionalOrder order,
                 WindowSpec window);

  const UniformGrid& tau_grid() const noexcept { return tau_grid_; }
  const UniformGrid& xi_grid() const noexcept { return xi_grid_; }
  const FractionalOrder& order() const noexcept { return order_; }
  const WindowSpec& window() const noexcept { return window_; }
  std::size_t rows() const noexcept { return xi_grid_.count(); }
  std::size_t cols() const noexcept { return tau_grid_.count(); }
  std::span<const cplx> values() const noexcept { return values_; }
  std::span<const cplx> row(std::size_t r) const noexcept {
    return std::span<const cplx>(values_).subspan(r * cols(), cols());
  }
  const cplx& at(std::size_t r, std::size_t c) const noexcept {
    return values_[r * cols() + c];
  }

  /// Per row: number of tau columns whose window support (10 standard
  /// deviations) reaches beyond the input signal's grid. Empty if unknown.
  const std::vector<std::size_t>& edge_columns() const noexcept {
    return edge_columns_;
  }
  void set_edge_columns(std::vector<std::size_t> counts);

 private:
  UniformGrid tau_grid_;
  UniformGrid xi_grid_;
  std::vector<cplx> values_;
  FractionalOrder order_;
  WindowSpec window_;
  std::vector<std::size_t> edge_columns_;
};

/// Throws ZeroFrequency if any grid point lies within kXiTolerance of 0.
void require_nonzero_frequencies(const UniformGrid& xi_grid);

/// Positive weight kappa with its tempered-growth certificate (C, N):
/// kappa(x + y) <= (1 + C|x|)^N kappa(y).
struct TemperedWeight {
  std::function<double(double)> eval;
  double C = 1.0;
  double N = 1.0;
  std::string name;

  double operator()(double x) const { return eval(x); }

  /// kappa = 1, certified with (C, N).
  static TemperedWeight constant(double C = 1.0, double N = 0.5);
  /// kappa = (1 + |x|)^s, certified with (C, N) = (1, s).
  static TemperedWeight polynomial(double s);
};

/// Kernel for the maximal function: phi with a nonzero integral and an
/// effective support radius beyond which it is treated as zero.
struct TestFunction {
  std::function<double(double)> eval;
  double total_integral = 1.0;
  double support_radius = 10.0;

  double operator()(double x) const { return eval(x); }

  /// Standard normal density.
  static TestFunction gaussian();
};

/// Inclusive index ranges over a host grid; each holds at least two samples.
class IntervalFamily {
 public:
  using Interval = std::pair<std::size_t, std::size_t>;

  IntervalFamily(std::vector<Interval> intervals, std::size_t host_count);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t host_count() const noexcept { return host_count_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }

 private:
  std::vector<Interval> intervals_;
  std::size_t host_count_;
};

/// Every contiguous interval when there are at most `max_count` of them,
/// otherwise the dyadic family: intervals spanning 2^j steps whose first
/// index is a multiple of 2^(j-1) (a multiple of 1 at j = 0).
IntervalFamily all_intervals(std::size_t host_count, std::size_t max_count);

}  // namespace frst
