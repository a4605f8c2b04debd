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

#include "frst/inequality_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "frst/frft.hpp"
#include "frst/frst.hpp"
#include "frst/function_spaces.hpp"
#include "frst/parallel.hpp"
#include "frst/windows.hpp"

namespace frst {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoherenceTolerance = 1e-12;

SampledSignal times_kernel(const SampledSignal& f, const FractionalOrder& order,
                           double xi) {
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = f[i] * kernel_eval(order, f.grid().point(i), xi);
  return SampledSignal(f.grid(), std::move(v));
}

SampledSignal frst_row_signal(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi) {
  return SampledSignal(f.grid(), frst_row(f, order, spec, f.grid(), xi, FrstMode::Fast));
}

CheckParams params_for(const FractionalOrder& order, double xi,
                       std::optional<WindowSpec> spec = std::nullopt) {
  CheckParams p;
  p.a = order.a();
  p.xi = xi;
  if (spec) {
    p.k = spec->k;
    p.p = spec->p;
  }
  return p;
}

void require_nonnegative(const SampledSignal& f, const TestFunction& phi) {
  if (!f.is_nonnegative())
    fail(ErrorCode::NegativeInput, "Hardy-space check needs a nonnegative real signal");
  const double r = phi.support_radius;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -r + 2.0 * r * i / 2000.0;
    if (phi(x) < 0.0)
      fail(ErrorCode::NegativeInput, "Hardy-space check needs a nonnegative test function");
  }
}

void require_valid_xi(double xi) {
  if (!(std::abs(xi) > kXiTolerance) || !std::isfinite(xi))
    fail(ErrorCode::ZeroFrequency, "inequality checks need xi != 0");
}

// ---- check cores over precomputed f-side norms

CheckResult lemma_2_3_core(const SampledSignal& product, const FractionalOrder& order,
                           double xi, const IntervalFamily& family,
                           const SignalNorms& norms, double slack) {
  const double lhs = bmo_norm(product, family);
  const double rhs = order.abs_amplitude() * (norms.bmo + 2.0 * norms.mean_bound);
  return make_check("lemma_2_3", lhs, rhs, slack, params_for(order, xi));
}

CheckResult theorem_2_4_core(const SampledSignal& row, const FractionalOrder& order,
                             const WindowSpec& spec, double xi,
                             const IntervalFamily& family, const SignalNorms& norms,
                             double slack) {
  const double lhs = bmo_norm(row, family);
  const double rhs = order.abs_amplitude() * (norms.bmo + 2.0 * norms.mean_bound);
  return make_check("theorem_2_4", lhs, rhs, slack, params_for(order, xi, spec));
}

CheckResult theorem_2_5_core(const SampledSignal& row, const FractionalOrder& order,
                             const WindowSpec& spec, double xi, const TestFunction& phi,
                             const std::vector<double>& scales, const SignalNorms& norms,
                             double slack) {
  const double lhs = hardy_norm(row, phi, scales);
  const double rhs = order.abs_amplitude() * norms.hardy.value();
  return make_check("theorem_2_5", lhs, rhs, slack, params_for(order, xi, spec));
}

CheckResult lemma_3_2_core(const SampledSignal& product, const FractionalOrder& order,
                           double xi, const TemperedWeight& w,
                           const IntervalFamily& family, const SignalNorms& norms,
                           double slack) {
  const double lhs = bmo_kappa_norm(product, w, family);
  const double rhs =
      order.abs_amplitude() * (norms.bmo_kappa.at(w.name) + 2.0 * norms.mean_bound);
  auto params = params_for(order, xi);
  params.weight = w.name;
  params.C = w.C;
  params.N = w.N;
  return make_check("lemma_3_2", lhs, rhs, slack, params);
}

CheckResult theorem_3_5_core(const SampledSignal& row, const FractionalOrder& order,
                             const WindowSpec& spec, double xi, const TemperedWeight& w,
                             const IntervalFamily& family, const SignalNorms& norms,
                             double slack) {
  const double lhs = bmo_kappa_norm(row, w, family);
  const double moment = moment_bound_closed(spec, order, xi, w.C, w.N);
  const double rhs = moment * order.abs_amplitude() *
                     (norms.bmo_kappa.at(w.name) + 2.0 * norms.mean_bound);
  auto params = params_for(order, xi, spec);
  params.weight = w.name;
  params.C = w.C;
  params.N = w.N;
  return make_check("theorem_3_5", lhs, rhs, slack, params);
}

CheckResult theorem_3_6_core(const SampledSignal& row, const FractionalOrder& order,
                             const WindowSpec& spec, double xi, const TestFunction& phi,
                             const std::vector<double>& scales, const TemperedWeight& w,
                             const SignalNorms& norms, double slack) {
  const double lhs = hardy_kappa_norm(row, phi, scales, w);
  const double moment = moment_bound_closed(spec, order, xi, w.C, w.N);
  const double rhs = moment * order.abs_amplitude() * norms.hardy_kappa.at(w.name);
  auto params = params_for(order, xi, spec);
  params.weight = w.name;
  params.C = w.C;
  params.N = w.N;
  return make_check("theorem_3_6", lhs, rhs, slack, params);
}

SignalNorms bmo_side(const SampledSignal& f, const IntervalFamily& family,
                     const std::vector<TemperedWeight>& weights) {
  SignalNorms n;
  n.bmo = bmo_norm(f, family);
  n.mean_bound = mean_bound_m(f, family);
  for (const auto& w : weights) n.bmo_kappa[w.name] = bmo_kappa_norm(f, w, family);
  return n;
}

SignalNorms hardy_side(const SampledSignal& f, const TestFunction& phi,
                       const std::vector<double>& scales,
                       const std::vector<TemperedWeight>& weights) {
  SignalNorms n;
  // One maximal function serves every weight.
  const auto m = maximal_function(f, phi, scales);
  const double dt = f.grid().step();
  double plain = 0.0;
  for (double v : m) plain += v;
  n.hardy = plain * dt;
  for (const auto& w : weights) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * w(f.grid().point(i));
    n.hardy_kappa[w.name] = acc * dt;
  }
  return n;
}

double relative_sup_error(std::span<const cplx> got, std::span<const cplx> ref) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    diff = std::max(diff, std::abs(got[i] - ref[i]));
    scale = std::max(scale, std::abs(ref[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

double relative_l2_error(std::span<const cplx> got, std::span<const cplx> ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    num += std::norm(got[i] - ref[i]);
    den += std::norm(ref[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double coherence_gap(double weighted, double plain) {
  return std::abs(weighted - plain) / std::max(1.0, std::abs(plain));
}

std::string indexed(const char* prefix, std::size_t i) {
  std::ostringstream os;
  os << prefix << '_' << std::setw(3) << std::setfill('0') << i;
  return os.str();
}

}  // namespace

// ------------------------------------------------------------------ results

CheckResult make_check(std::string check_id, double lhs, double rhs, double slack,
                       CheckParams params) {
  CheckResult r;
  r.check_id = std::move(check_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.slack = slack;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs * (1.0 + slack);
  r.params = std::move(params);
  return r;
}

// ------------------------------------------------------------ public checks

CheckResult check_lemma_2_3(const SampledSignal& f, const FractionalOrder& order,
                            double xi, const IntervalFamily& family, double slack) {
  order.require_generic("lemma_2_3 check");
  require_valid_xi(xi);
  const auto norms = bmo_side(f, family, {});
  return lemma_2_3_core(times_kernel(f, order, xi), order, xi, family, norms, slack);
}

CheckResult check_theorem_2_4(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const IntervalFamily& family, double slack) {
  order.require_generic("theorem_2_4 check");
  require_valid_xi(xi);
  const auto norms = bmo_side(f, family, {});
  return theorem_2_4_core(frst_row_signal(f, order, spec, xi), order, spec, xi, family,
                          norms, slack);
}

CheckResult check_theorem_2_5(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TestFunction& phi,
                              const std::vector<double>& scales, double slack) {
  order.require_generic("theorem_2_5 check");
  require_valid_xi(xi);
  require_nonnegative(f, phi);
  const auto norms = hardy_side(f, phi, scales, {});
  return theorem_2_5_core(frst_row_signal(f, order, spec, xi), order, spec, xi, phi,
                          scales, norms, slack);
}

CheckResult check_lemma_3_1(const WindowSpec& spec, const FractionalOrder& order,
                            double xi, double C, double N) {
  const double lhs = moment_integral(spec, order, xi, C, N);
  const double rhs = moment_bound_closed(spec, order, xi, C, N);
  auto params = params_for(order, xi, spec);
  params.C = C;
  params.N = N;
  return make_check("lemma_3_1", lhs, rhs, 0.0, params);
}

CheckResult check_lemma_3_2(const SampledSignal& f, const FractionalOrder& order,
                            double xi, const TemperedWeight& w,
                            const IntervalFamily& family, double slack) {
  order.require_generic("lemma_3_2 check");
  require_valid_xi(xi);
  const auto norms = bmo_side(f, family, {w});
  return lemma_3_2_core(times_kernel(f, order, xi), order, xi, w, family, norms, slack);
}

void require_certificate(const TemperedWeight& w, const UniformGrid& grid) {
  const double reach = 2.0 * std::max(std::abs(grid.start()), std::abs(grid.last()));
  std::vector<double> samples(81);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = -reach + 2.0 * reach * static_cast<double>(i) / 80.0;
  const auto report = tempered_check(w, samples, samples);
  if (!report.pass) {
    std::ostringstream os;
    os << "weight " << w.name << " violates its (C, N) = (" << w.C << ", " << w.N
       << ") certificate; worst ratio " << report.worst_ratio;
    fail(ErrorCode::WeightCertificateFailed, os.str());
  }
}

CheckResult check_theorem_3_5(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TemperedWeight& w, const IntervalFamily& family,
                              double slack) {
  order.require_generic("theorem_3_5 check");
  require_valid_xi(xi);
  require_certificate(w, f.grid());
  const auto norms = bmo_side(f, family, {w});
  return theorem_3_5_core(frst_row_signal(f, order, spec, xi), order, spec, xi, w,
                          family, norms, slack);
}

CheckResult check_theorem_3_6(const SampledSignal& f, const FractionalOrder& order,
                              const WindowSpec& spec, double xi,
                              const TestFunction& phi,
                              const std::vector<double>& scales,
                              const TemperedWeight& w, double slack) {
  order.require_generic("theorem_3_6 check");
  require_valid_xi(xi);
  require_nonnegative(f, phi);
  require_certificate(w, f.grid());
  const auto norms = hardy_side(f, phi, scales, {w});
  return theorem_3_6_core(frst_row_signal(f, order, spec, xi), order, spec, xi, phi,
                          scales, w, norms, slack);
}

// ------------------------------------------------------------------- config

TemperedWeight WeightChoice::build() const {
  if (kind == Kind::Constant) return TemperedWeight::constant(C, N);
  auto w = TemperedWeight::polynomial(s);
  w.C = C;
  w.N = N;
  return w;
}

SuiteConfig SuiteConfig::empty() {
  SuiteConfig c;
  c.signal_count = 0;
  c.nonneg_count = 0;
  c.parameter_draws = 0;
  c.invariant_signals = 0;
  return c;
}

void SuiteConfig::validate() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::Config, what); };
  if (samples < 8) bad("samples must be at least 8");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) bad("half_width must be positive");
  if (!(k > 0.0) || !(p > 0.0)) bad("window parameters k and p must be positive");
  if (!(slack >= 0.0)) bad("slack must be non-negative");
  if (max_intervals < 1) bad("max_intervals must be positive");
  for (double a : orders) {
    try {
      if (!classify_order(a).is_generic()) bad("suite orders must avoid the delta branches");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Config) throw;
      bad(e.what());
    }
  }
  for (double xi : xis)
    if (!(std::abs(xi) > kXiTolerance) || !std::isfinite(xi)) bad("suite frequencies must be nonzero");
  for (const auto& w : weights) {
    if (!(w.C > 0.0) || !(w.N > 0.0)) bad("weight certificates need C > 0 and N > 0");
    if (w.kind == WeightChoice::Kind::Polynomial && !(w.s > 0.0))
      bad("polynomial weights need s > 0");
  }
}

// -------------------------------------------------------------------- corpus

namespace {

UniformGrid corpus_grid(const SuiteConfig& c) {
  return UniformGrid(-c.half_width, 2.0 * c.half_width / static_cast<double>(c.samples),
                     c.samples);
}

}  // namespace

std::vector<CorpusSignal> general_corpus(const SuiteConfig& config) {
  const UniformGrid grid = corpus_grid(config);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto range = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
  const double nyquist = 0.5 / grid.step();
  std::vector<CorpusSignal> out;
  for (std::size_t i = 0; i < config.signal_count; ++i) {
    switch (i % 4) {
      case 0: {
        const double amp = range(0.5, 2.0) * (u(rng) < 0.5 ? -1.0 : 1.0);
        const double jump = range(-4.0, 4.0);
        const double offset = range(-1.0, 1.0);
        out.push_back({indexed("step", i), SampledSignal::sample(grid, [=](double t) {
                         return cplx(offset + (t >= jump ? amp : 0.0));
                       })});
        break;
      }
      case 1: {
        const cplx amp = std::polar(range(0.5, 2.0), range(0.0, 2.0 * kPi));
        const double center = range(-3.0, 3.0);
        const double width = range(0.3, 2.0);
        out.push_back({indexed("gauss", i), SampledSignal::sample(grid, [=](double t) {
                         const double z = (t - center) / width;
                         return amp * std::exp(-kPi * z * z);
                       })});
        break;
      }
      case 2: {
        const double f0 = range(-0.25, 0.25) * nyquist;
        const double rate = range(-0.5, 0.5) * nyquist / (2.0 * config.half_width);
        const double width = range(3.0, 8.0);
        out.push_back({indexed("chirp", i), SampledSignal::sample(grid, [=](double t) {
                         const double z = t / width;
                         return std::exp(-kPi * z * z) *
                                std::polar(1.0, 2.0 * kPi * (f0 * t + 0.5 * rate * t * t));
                       })});
        break;
      }
      default: {
        std::vector<std::pair<cplx, double>> tones(6);
        for (auto& [a, nu] : tones) {
          a = std::polar(range(0.0, 1.0) / std::sqrt(6.0), range(0.0, 2.0 * kPi));
          nu = range(-0.25, 0.25) * nyquist;
        }
        out.push_back({indexed("bandlimited", i),
                       SampledSignal::sample(grid, [tones](double t) {
                         cplx acc{};
                         for (const auto& [a, nu] : tones)
                           acc += a * std::polar(1.0, 2.0 * kPi * nu * t);
                         return acc;
                       })});
        break;
      }
    }
  }
  return out;
}

std::vector<CorpusSignal> nonnegative_corpus(const SuiteConfig& config) {
  const UniformGrid grid = corpus_grid(config);
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto range = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
  std::vector<CorpusSignal> out;
  for (std::size_t i = 0; i < config.nonneg_count; ++i) {
    switch (i % 4) {
      case 0: {
        const int bumps = 1 + static_cast<int>(u(rng) * 3.0);
        std::vector<std::array<double, 3>> b(static_cast<std::size_t>(bumps));
        for (auto& x : b) x = {range(0.2, 2.0), range(-3.0, 3.0), range(0.3, 1.5)};
        out.push_back({indexed("bumps", i), SampledSignal::sample(grid, [b](double t) {
                         double acc = 0.0;
                         for (const auto& [amp, c, w] : b) {
                           const double z = (t - c) / w;
                           acc += amp * std::exp(-kPi * z * z);
                         }
                         return cplx(acc);
                       })});
        break;
      }
      case 1: {
        double lo = range(-5.0, 5.0), hi = range(-5.0, 5.0);
        if (lo > hi) std::swap(lo, hi);
        hi = std::max(hi, lo + 0.5);
        const double amp = range(0.5, 2.0);
        out.push_back({indexed("box", i), SampledSignal::sample(grid, [=](double t) {
                         return cplx(t >= lo && t <= hi ? amp : 0.0);
                       })});
        break;
      }
      case 2: {
        std::vector<std::pair<cplx, double>> tones(4);
        for (auto& [a, nu] : tones) {
          a = std::polar(range(0.0, 1.0) / 2.0, range(0.0, 2.0 * kPi));
          nu = range(-1.5, 1.5);
        }
        const double width = range(2.0, 4.0);
        out.push_back({indexed("envelope", i),
                       SampledSignal::sample(grid, [tones, width](double t) {
                         cplx acc{};
                         for (const auto& [a, nu] : tones)
                           acc += a * std::polar(1.0, 2.0 * kPi * nu * t);
                         const double z = t / width;
                         return cplx(std::norm(acc) * std::exp(-kPi * z * z));
                       })});
        break;
      }
      default: {
        const double c = range(-3.0, 3.0), w = range(0.5, 3.0), amp = range(0.5, 2.0);
        out.push_back({indexed("triangle", i), SampledSignal::sample(grid, [=](double t) {
                         return cplx(amp * std::max(0.0, 1.0 - std::abs(t - c) / w));
                       })});
        break;
      }
    }
  }
  return out;
}

// --------------------------------------------------------------------- suite

namespace {

struct Draw {
  double k, p, a, xi, C, N;
};

std::vector<Draw> parameter_draws(const SuiteConfig& config) {
  std::mt19937_64 rng(config.seed + 0x5bd1e995ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto range = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
  std::vector<Draw> out(config.parameter_draws);
  for (auto& d : out) {
    d.k = range(0.2, 3.0);
    d.p = range(0.25, 2.0);
    // Orders in [0.1, 1.9] or [2.1, 3.9], away from the delta branches.
    d.a = range(0.1, 1.9) + (u(rng) < 0.5 ? 0.0 : 2.0);
    d.xi = range(0.1, 5.0) * (u(rng) < 0.5 ? -1.0 : 1.0);
    d.C = range(0.05, 3.0);
    d.N = range(0.1, 5.0);
  }
  return out;
}

SampledSignal smooth_test_signal(std::uint64_t seed, std::size_t index,
                                 const UniformGrid& grid) {
  std::mt19937_64 rng(seed + 1000003ULL * (index + 1));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double center = -1.0 + 2.0 * u(rng);
  const double width = 0.7 + 0.8 * u(rng);
  const cplx amp = std::polar(1.0, 2.0 * kPi * u(rng));
  return SampledSignal::sample(grid, [=](double t) {
    const double z = (t - center) / width;
    return amp * std::exp(-kPi * z * z);
  });
}

// Oracle equivalences, round trips and the marginal identity for one
// signal of the general corpus plus one smooth test signal.
std::vector<CheckResult> invariant_checks(const SuiteConfig& config,
                                          const CorpusSignal& member,
                                          std::size_t index) {
  std::vector<CheckResult> out;
  const SampledSignal& f = member.signal;
  const double nyquist = 0.5 / f.grid().step();
  const WindowSpec spec(config.k, config.p);
  for (double a : config.orders) {
    const auto order = classify_order(a);
    const double reach = std::min(4.0, 0.95 * nyquist / std::abs(order.csc()));
    const auto xg = UniformGrid::spanning(-reach, reach, 129);
    CheckParams params;
    params.a = a;
    params.signal = member.id;
    out.push_back(make_check(
        "frft_fast_vs_direct",
        relative_sup_error(frft_fast(f, order, xg).values(),
                           frft_direct(f, order, xg).values()),
        1e-6, 0.0, params));
    for (double xi : config.xis) {
      const auto fast = frst_row(f, order, spec, f.grid(), xi, FrstMode::Fast);
      const auto direct = frst_row(f, order, spec, f.grid(), xi, FrstMode::Direct);
      auto p = params_for(order, xi, spec);
      p.signal = member.id;
      out.push_back(make_check("frst_fast_vs_direct", relative_sup_error(fast, direct),
                               1e-6, 0.0, p));
    }
  }

  // Round trips on a smooth Gaussian over [-8, 8] with step 1/64; the FRST
  // leg runs on the signal zero-padded to [-32, 32] so every window fits.
  const UniformGrid tg(-8.0, 1.0 / 64.0, 1025);
  const UniformGrid padded_grid(-32.0, 1.0 / 64.0, 4097);
  const UniformGrid xi_fine(-8.0, 1.0 / 32.0, 513);
  const UniformGrid xi_rows(-6.0 + 1.0 / 64.0, 1.0 / 32.0, 384);
  const WindowSpec rt_spec(0.5, 0.5);
  const SampledSignal g = smooth_test_signal(config.seed, index, tg);
  const SampledSignal g_padded = smooth_test_signal(config.seed, index, padded_grid);
  const std::string id = indexed("smooth", index);
  for (double a : config.orders) {
    const auto order = classify_order(a);
    CheckParams params;
    params.a = a;
    params.signal = id;
    const auto spectrum = frft_direct(g, order, xi_fine);
    out.push_back(make_check("frft_round_trip",
                             relative_l2_error(ifrft(spectrum, order, tg).values(),
                                               g.values()),
                             5e-3, 0.0, params));
    const auto tf = frst_forward(g_padded, order, rt_spec, padded_grid, xi_rows,
                                 FrstMode::Fast);
    params.k = rt_spec.k;
    params.p = rt_spec.p;
    out.push_back(make_check(
        "frst_round_trip",
        relative_l2_error(frst_inverse(tf, order, tg).values(), g.values()), 5e-3, 0.0,
        params));
    const auto reference = frft_direct(g, order, xi_rows);
    const auto marginal = frst_marginal(tf);
    double worst = 0.0;
    for (std::size_t r = 0; r < reference.size(); ++r)
      worst = std::max(worst, std::abs(marginal[r] - reference[r]));
    out.push_back(make_check("marginal_identity", worst, 1e-3, 0.0, params));
  }
  return out;
}

auto sort_key(const CheckResult& r) {
  auto num = [](const std::optional<double>& v) {
    return v.value_or(-std::numeric_limits<double>::infinity());
  };
  return std::make_tuple(std::cref(r.check_id), std::cref(r.params.signal),
                         num(r.params.a), num(r.params.xi), std::cref(r.params.weight),
                         num(r.params.k), num(r.params.p), num(r.params.C),
                         num(r.params.N));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Pairs each kappa = 1 weighted result with its unweighted counterpart.
void add_coherence_checks(std::vector<CheckResult>& checks, const std::string& const_name) {
  std::map<std::tuple<std::string, double, double>, const CheckResult*> plain;
  auto key = [](const CheckResult& r) {
    return std::make_tuple(r.params.signal, r.params.a.value_or(0.0),
                           r.params.xi.value_or(0.0));
  };
  const std::map<std::string, std::string> pairs{{"lemma_3_2", "lemma_2_3"},
                                                 {"theorem_3_5", "theorem_2_4"},
                                                 {"theorem_3_6", "theorem_2_5"}};
  std::map<std::string, std::map<std::tuple<std::string, double, double>, const CheckResult*>>
      by_family;
  for (const auto& r : checks)
    for (const auto& [weighted, unweighted] : pairs)
      if (r.check_id == unweighted) by_family[unweighted][key(r)] = &r;
  std::vector<CheckResult> extra;
  for (const auto& r : checks) {
    auto it = pairs.find(r.check_id);
    if (it == pairs.end() || r.params.weight != const_name) continue;
    const auto& table = by_family[it->second];
    auto hit = table.find(key(r));
    if (hit == table.end()) continue;
    const CheckResult& u = *hit->second;
    // Weighted theorems scale the rhs by A_{xi,N}; compare the norm part.
    double rhs = r.rhs;
    if (r.check_id != "lemma_3_2") {
      const auto order = classify_order(*r.params.a);
      rhs /= moment_bound_closed(WindowSpec(*r.params.k, *r.params.p), order,
                                 *r.params.xi, *r.params.C, *r.params.N);
    }
    const double gap = std::max(coherence_gap(r.lhs, u.lhs), coherence_gap(rhs, u.rhs));
    CheckParams p = r.params;
    extra.push_back(make_check("coherence_" + r.check_id, gap, kCoherenceTolerance, 0.0, p));
  }
  checks.insert(checks.end(), extra.begin(), extra.end());
}

nlohmann::json params_json(const CheckParams& p) {
  nlohmann::json j = nlohmann::json::object();
  auto put = [&](const char* name, const std::optional<double>& v) {
    if (v) j[name] = *v;
  };
  put("a", p.a);
  put("k", p.k);
  put("p", p.p);
  put("xi", p.xi);
  put("C", p.C);
  put("N", p.N);
  if (!p.weight.empty()) j["weight"] = p.weight;
  if (!p.signal.empty()) j["signal"] = p.signal;
  return j;
}

nlohmann::json body(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check_id", c.check_id},
                      {"params", params_json(c.params)},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"margin", c.margin},
                      {"slack", c.slack},
                      {"pass", c.pass}});
  }
  nlohmann::json margins = nlohmann::json::object();
  for (const auto& [family, m] : r.min_margin_by_family) margins[family] = m;
  return {{"checks", checks},
          {"summary",
           {{"total", r.checks.size()}, {"failed", r.failed},
            {"min_margin_by_family", margins}}}};
}

}  // namespace

std::string library_version() { return "0.1.0"; }

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  const WindowSpec spec(config.k, config.p);
  const auto general = general_corpus(config);
  const auto nonneg = nonnegative_corpus(config);
  const auto draws = parameter_draws(config);

  std::vector<TemperedWeight> weights;
  for (const auto& w : config.weights) weights.push_back(w.build());
  const UniformGrid grid = corpus_grid(config);
  for (const auto& w : weights) require_certificate(w, grid);
  std::string const_name;
  for (const auto& w : weights)
    if (config.weights[&w - weights.data()].kind == WeightChoice::Kind::Constant)
      const_name = w.name;

  const IntervalFamily family = all_intervals(config.samples, config.max_intervals);
  const TestFunction phi = TestFunction::gaussian();
  const auto scales = default_scales(grid);
  std::vector<FractionalOrder> orders;
  for (double a : config.orders) orders.push_back(classify_order(a));

  const std::size_t invariant_count = std::min(config.invariant_signals, general.size());
  const std::size_t tasks =
      general.size() + nonneg.size() + draws.size() + invariant_count;
  std::vector<std::vector<CheckResult>> results(tasks);

  parallel_for(tasks, [&](std::size_t task) {
    auto& out = results[task];
    if (task < general.size()) {
      const auto& member = general[task];
      const auto norms = bmo_side(member.signal, family, weights);
      for (const auto& order : orders) {
        for (double xi : config.xis) {
          const auto product = times_kernel(member.signal, order, xi);
          const auto row = frst_row_signal(member.signal, order, spec, xi);
          out.push_back(lemma_2_3_core(product, order, xi, family, norms, config.slack));
          out.push_back(
              theorem_2_4_core(row, order, spec, xi, family, norms, config.slack));
          for (const auto& w : weights) {
            out.push_back(
                lemma_3_2_core(product, order, xi, w, family, norms, config.slack));
            out.push_back(theorem_3_5_core(row, order, spec, xi, w, family, norms,
                                           config.slack));
          }
        }
      }
      for (auto& r : out) r.params.signal = member.id;
      return;
    }
    task -= general.size();
    if (task < nonneg.size()) {
      const auto& member = nonneg[task];
      const auto norms = hardy_side(member.signal, phi, scales, weights);
      for (const auto& order : orders) {
        for (double xi : config.xis) {
          const auto row = frst_row_signal(member.signal, order, spec, xi);
          out.push_back(theorem_2_5_core(row, order, spec, xi, phi, scales, norms,
                                         config.slack));
          for (const auto& w : weights)
            out.push_back(theorem_3_6_core(row, order, spec, xi, phi, scales, w, norms,
                                           config.slack));
        }
      }
      for (auto& r : out) r.params.signal = member.id;
      return;
    }
    task -= nonneg.size();
    if (task < draws.size()) {
      const Draw& d = draws[task];
      const WindowSpec ds(d.k, d.p);
      const auto order = classify_order(d.a);
      auto r = check_lemma_3_1(ds, order, d.xi, d.C, d.N);
      r.params.signal = indexed("draw", task);
      out.push_back(r);
      auto params = params_for(order, d.xi, ds);
      params.signal = indexed("draw", task);
      out.push_back(make_check("window_area",
                               std::abs(window_area(ds, order, d.xi) - 1.0), 1e-6, 0.0,
                               params));
      return;
    }
    task -= draws.size();
    out = invariant_checks(config, general[task], task);
  });

  SuiteReport report;
  report.seed = config.seed;
  report.version = library_version();
  report.timestamp = utc_timestamp();
  for (auto& chunk : results)
    for (auto& r : chunk) report.checks.push_back(std::move(r));
  if (!const_name.empty()) add_coherence_checks(report.checks, const_name);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& x, const CheckResult& y) { return sort_key(x) < sort_key(y); });
  for (const auto& r : report.checks) {
    if (!r.pass) ++report.failed;
    auto [it, inserted] = report.min_margin_by_family.emplace(r.check_id, r.margin);
    if (!inserted) it->second = std::min(it->second, r.margin);
  }
  return report;
}

std::string SuiteReport::body_json(int indent) const { return body(*this).dump(indent); }

std::string SuiteReport::to_json(int indent) const {
  nlohmann::json doc = body(*this);
  doc["meta"] = {{"seed", seed}, {"version", version}, {"timestamp", timestamp}};
  return doc.dump(indent);
}

}  // namespace frst
