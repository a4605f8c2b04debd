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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frst/model.hpp"

namespace frst {

inline constexpr double kDefaultSlack = 0.05;

/// Parameters recorded with each check. Fields that do not apply stay empty.
struct CheckParams {
  std::optional<double> a, k, p, xi, C, N;
  std::string weight;
  std::string signal;
};

/// One numerically evaluated inequality lhs <= rhs (1 + slack).
struct CheckResult {
  std::string check_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double slack = 0.0;
  bool pass = false;
  CheckParams params;
};

CheckResult make_check(std::string check_id, double lhs, double rhs, double slack,
                       CheckParams params);

/// f-side quantities shared by every check on one signal. Computing them
/// once per signal is what keeps the suite tractable.
struct SignalNorms {
  double bmo = 0.0;
  double mean_bound = 0.0;
  std::map<std::string, double> bmo_kappa;    // keyed by weight name
  std::optional<double> hardy;
  std::map<std::string, double> hardy_kappa;  // keyed by weight name
};

// Each check below evaluates one boundedness inequality for the fractional
// S-transform at a fixed frequency xi. The convenience overloads compute the
// f-side norms themselves; the suite passes them in precomputed.

/// ||f K_a(., xi)||_BMO <= |A| (||f||_BMO + 2m).
CheckResult check_lemma_2_3(const SampledSignal& f, const FractionalOrder& order,
                            double xi, const IntervalFamily& family,
                            double slack = kDefaultSlack);

/// ||FRST(., xi)||_BMO <= |A| (||f||_BMO + 2m), tau grid = f's grid.
CheckResult check_theorem_2_4(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const IntervalFamily& family,
                              double slack = kDefaultSlack);

/// ||FRST(., xi)||_H1 <= |A| ||f||_H1 for nonnegative f and phi.
/// NegativeInput if f or phi takes negative values.
CheckResult check_theorem_2_5(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TestFunction& phi,
                              const std::vector<double>& scales,
                              double slack = kDefaultSlack);

/// moment_integral <= moment_bound_closed, slack 0.
CheckResult check_lemma_3_1(const WindowSpec& spec, const FractionalOrder& order,
                            double xi, double C, double N);

/// ||f K_a(., xi)||_BMO_kappa <= |A| (||f||_BMO_kappa + 2m), with m the
/// unweighted mean bound.
CheckResult check_lemma_3_2(const SampledSignal& f, const FractionalOrder& order,
                            double xi, const TemperedWeight& w,
                            const IntervalFamily& family,
                            double slack = kDefaultSlack);

/// ||FRST(., xi)||_BMO_kappa <= A_{xi,N} |A| (||f||_BMO_kappa + 2m).
/// WeightCertificateFailed if the weight's (C, N) does not hold on samples.
CheckResult check_theorem_3_5(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TemperedWeight& w, const IntervalFamily& family,
                              double slack = kDefaultSlack);

/// ||FRST(., xi)||_H1_kappa <= A_{xi,N} |A| ||f||_H1_kappa.
CheckResult check_theorem_3_6(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TestFunction& phi,
                              const std::vector<double>& scales,
                              const TemperedWeight& w, double slack = kDefaultSlack);

/// Throws WeightCertificateFailed unless tempered_check passes on a sample
/// lattice covering twice the extent of `grid`.
void require_certificate(const TemperedWeight& w, const UniformGrid& grid);

/// Weight selection for the suite.
struct WeightChoice {
  enum class Kind { Constant, Polynomial } kind = Kind::Constant;
  double s = 1.0;   // polynomial exponent
  double C = 1.0;   // certificate constants, checked before the suite runs
  double N = 0.5;
  TemperedWeight build() const;
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  /// General corpus (steps, Gaussians, chirps, band-limited) size.
  std::size_t signal_count = 50;
  /// Nonnegative corpus size for the Hardy checks.
  std::size_t nonneg_count = 50;
  std::size_t samples = 256;
  double half_width = 8.0;
  std::vector<double> orders{0.4, 0.8, 1.0, 1.6};
  std::vector<double> xis{0.5, 1.0, 2.0};
  double k = 1.0;
  double p = 1.0;
  std::vector<WeightChoice> weights{
      WeightChoice{WeightChoice::Kind::Constant, 0.0, 1.0, 0.5},
      WeightChoice{WeightChoice::Kind::Polynomial, 1.0, 1.0, 1.0},
      WeightChoice{WeightChoice::Kind::Polynomial, 2.0, 1.0, 2.0}};
  double slack = kDefaultSlack;
  std::size_t max_intervals = 100000;
  /// Random (k, p, a, xi, C, N) draws for the window-area and moment checks.
  std::size_t parameter_draws = 100;
  /// Corpus signals also used for the transform invariants (oracle
  /// equivalence, round trips, marginal identity).
  std::size_t invariant_signals = 4;

  /// No signals and no draws: the suite runs zero checks.
  static SuiteConfig empty();
  /// Throws Error(Config) on an unusable configuration.
  void validate() const;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;
  std::vector<CheckResult> checks;  // sorted by check id, then params
  std::size_t failed = 0;
  std::map<std::string, double> min_margin_by_family;

  bool passed() const noexcept { return failed == 0; }
  /// JSON document {meta, checks, summary}.
  std::string to_json(int indent = 2) const;
  /// The same document without meta; identical for identical configs.
  std::string body_json(int indent = 2) const;
};

/// A named corpus member.
struct CorpusSignal {
  std::string id;
  SampledSignal signal;
};

/// Deterministic corpora on [-half_width, half_width) with `samples` points.
std::vector<CorpusSignal> general_corpus(const SuiteConfig& config);
std::vector<CorpusSignal> nonnegative_corpus(const SuiteConfig& config);

/// Runs every check family on the configured corpora. Deterministic in the
/// config; checks run in parallel but the report order is fixed.
SuiteReport run_suite(const SuiteConfig& config);

std::string library_version();

}  // namespace frst
