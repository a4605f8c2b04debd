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

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "frst/error.hpp"
#include "frst/frft.hpp"
#include "frst/frst.hpp"
#include "frst/function_spaces.hpp"
#include "frst/inequality_lab.hpp"
#include "frst/windows.hpp"

using namespace frst;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double sup_abs(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double sup_norm(std::span<const cplx> a) {
  double s = 0.0;
  for (const auto& z : a) s = std::max(s, std::abs(z));
  return s;
}

double rel_l2(std::span<const cplx> got, std::span<const cplx> ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    num += std::norm(got[i] - ref[i]);
    den += std::norm(ref[i]);
  }
  return std::sqrt(num / den);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SampledSignal random_signal(std::mt19937_64& rng, const UniformGrid& g) {
  std::normal_distribution<double> n;
  std::vector<cplx> v(g.count());
  for (auto& x : v) x = {n(rng), n(rng)};
  return SampledSignal(g, std::move(v));
}

// Smooth decaying test signals: modulated Gaussians and a Gaussian pair.
std::vector<SampledSignal> smooth_signals(const UniformGrid& g) {
  std::vector<SampledSignal> out;
  const double params[][3] = {{0.0, 1.0, 0.0}, {0.7, 1.2, 0.5}, {-1.0, 0.8, -0.8}, {0.3, 1.5, 0.2}};
  for (const auto& p : params) {
    const double c = p[0], w = p[1], nu = p[2];
    out.push_back(SampledSignal::sample(g, [=](double t) {
      const double z = (t - c) / w;
      return std::exp(-kPi * z * z) * std::polar(1.0, 2.0 * kPi * nu * t);
    }));
  }
  out.push_back(SampledSignal::sample(g, [](double t) {
    return cplx(std::exp(-kPi * (t - 1.0) * (t - 1.0)) + 0.5 * std::exp(-kPi * (t + 1.5) * (t + 1.5) / 0.49), 0.0);
  }));
  return out;
}

Outcome kernel_reductions() {
  Outcome o;
  std::mt19937_64 rng(101);
  const UniformGrid tg(-4.0, 1.0 / 16.0, 128);
  const auto f = random_signal(rng, tg);
  const auto xg = UniformGrid::spanning(-7.9, 7.9, 101);
  const auto F = frft_apply(f, classify_order(1.0), xg);
  double worst = 0.0;
  for (std::size_t j = 0; j < xg.count(); ++j) {
    cplx ref{};
    for (std::size_t i = 0; i < tg.count(); ++i)
      ref += f[i] * std::polar(1.0, -2.0 * kPi * xg.point(j) * tg.point(i)) * tg.step();
    worst = std::max(worst, std::abs(F[j] - ref) / std::max(1.0, std::abs(ref)));
  }
  const auto id = frft_apply(f, classify_order(0.0), tg);
  bool identity = true, reflection = true;
  for (std::size_t i = 0; i < tg.count(); ++i) identity &= id[i] == f[i];
  const UniformGrid sym(-4.0, 1.0 / 16.0, 129);
  const auto fs = random_signal(rng, sym);
  const auto rs = frft_apply(fs, classify_order(2.0), sym);
  for (std::size_t i = 0; i < sym.count(); ++i) reflection &= rs[i] == fs[sym.count() - 1 - i];
  o.pass = worst <= 1e-12 && identity && reflection;
  o.detail = "a=1 max rel err " + fmt("%.2e", worst) + ", a=0 identity " +
             (identity ? "exact" : "WRONG") + ", a=2 reflection " + (reflection ? "exact" : "WRONG");
  return o;
}

Outcome oracle_equivalence() {
  SuiteConfig c;
  c.seed = 2026;
  const auto corpus = general_corpus(c);
  std::mt19937_64 rng(202);
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t s = 0; s < 50; ++s) {
    // Alternate corpus members with white noise.
    const auto f = s % 2 == 0 ? corpus[s].signal : random_signal(rng, corpus[s].signal.grid());
    const double nyquist = 0.5 / f.grid().step();
    for (double a : {0.3, 0.7, 1.0, 1.4}) {
      const auto order = classify_order(a);
      const double reach = 0.99 * nyquist / std::abs(order.csc());
      const auto xg = UniformGrid::spanning(-reach, reach, 257);
      const auto fast = frft_fast(f, order, xg);
      const auto direct = frft_direct(f, order, xg);
      worst = std::max(worst, sup_abs(fast.values(), direct.values()) / sup_norm(direct.values()));
      ++cases;
    }
  }
  return {worst < 1e-6, std::to_string(cases) + " cases, max rel err " + fmt("%.2e", worst)};
}

Outcome round_trips() {
  const UniformGrid tg(-8.0, 1.0 / 64.0, 1025);
  const UniformGrid xi_fine(-8.0, 1.0 / 32.0, 513);
  const UniformGrid padded(-32.0, 1.0 / 64.0, 4097);
  const UniformGrid xi_rows(-6.0 + 1.0 / 64.0, 1.0 / 32.0, 384);
  const WindowSpec spec(0.5, 0.5);
  const auto sig = smooth_signals(tg);
  const auto sig_padded = smooth_signals(padded);
  double worst_frft = 0.0, worst_frst = 0.0;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (double a : {0.3, 0.7, 1.0, 1.4, 2.6}) {
      const auto order = classify_order(a);
      worst_frft = std::max(worst_frft, rel_l2(ifrft(frft_direct(sig[s], order, xi_fine), order, tg).values(),
                                               sig[s].values()));
      const auto tf = frst_forward(sig_padded[s], order, spec, padded, xi_rows, FrstMode::Fast);
      worst_frst = std::max(worst_frst, rel_l2(frst_inverse(tf, order, tg).values(), sig[s].values()));
    }
  }
  return {worst_frft < 5e-3 && worst_frst < 5e-3,
          "FRFT rel L2 " + fmt("%.2e", worst_frft) + ", FRST rel L2 " + fmt("%.2e", worst_frst)};
}

Outcome window_normalization() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  int draws = 0;
  while (draws < 100) {
    const auto order = classify_order(4.0 * u(rng));
    const WindowSpec w(0.1 + 4.9 * u(rng), 0.1 + 2.9 * u(rng));
    const double xi = (0.05 + 9.95 * u(rng)) * (u(rng) < 0.5 ? -1.0 : 1.0);
    if (!order.is_generic()) continue;
    worst = std::max(worst, std::abs(window_area(w, order, xi) - 1.0));
    ++draws;
  }
  return {worst <= 1e-6, "100 draws, max |area - 1| " + fmt("%.2e", worst)};
}

Outcome dual_paths() {
  std::mt19937_64 rng(505);
  SuiteConfig c;
  c.seed = 505;
  const auto corpus = general_corpus(c);
  const UniformGrid g = corpus[0].signal.grid();
  double worst_s = 0.0, worst_f = 0.0;
  for (std::size_t s = 0; s < 20; ++s) {
    const auto f = s % 2 == 0 ? corpus[s].signal : random_signal(rng, g);
    for (double k : {0.5, 1.0, 2.0}) {
      const auto bins = default_xi_grid(g);
      const auto direct = s_transform_direct(f, k, g, bins);
      worst_s = std::max(worst_s, sup_abs(s_transform_spectral(f, k, bins).values(), direct.values()) /
                                      sup_norm(direct.values()));
    }
    for (double a : {0.4, 0.8, 1.0, 1.6, 3.1}) {
      const auto order = classify_order(a);
      const WindowSpec w(0.5 + 0.1 * static_cast<double>(s), 0.5 + 0.05 * static_cast<double>(s));
      const auto xg = UniformGrid(-3.0 + 1.0 / 32.0, 0.25, 24);
      const auto fast = frst_forward(f, order, w, g, xg, FrstMode::Fast);
      const auto direct = frst_forward(f, order, w, g, xg, FrstMode::Direct);
      worst_f = std::max(worst_f, sup_abs(fast.values(), direct.values()) / sup_norm(direct.values()));
    }
  }
  return {worst_s < 1e-6 && worst_f < 1e-6,
          "S-transform max rel diff " + fmt("%.2e", worst_s) + ", FRST fast/direct " + fmt("%.2e", worst_f)};
}

Outcome marginal_identity() {
  const UniformGrid tg(-8.0, 1.0 / 32.0, 513);
  const auto sig = smooth_signals(tg);
  double worst = 0.0;
  std::size_t rows = 0;
  for (const WindowSpec w : {WindowSpec(1.0, 1.0), WindowSpec(0.25, 1.0), WindowSpec(0.5, 0.5)}) {
    for (double a : {0.4, 0.8, 1.0, 1.6}) {
      const auto order = classify_order(a);
      const auto xg = UniformGrid(-6.0 + 1.0 / 64.0, 1.0 / 16.0, 192);
      for (const auto& f : sig) {
        const auto tf = frst_forward(f, order, w, tg, xg, FrstMode::Fast);
        const auto marginal = frst_marginal(tf);
        const auto ref = frft_direct(f, order, xg);
        for (std::size_t r = 0; r < xg.count(); ++r) {
          // Interior rows: the window is resolved by the grid and ten widths
          // around the signal's effective support [-3, 3] stay on it.
          const double sigma = window_sigma(w, order, xg.point(r));
          if (sigma < tg.step() || 3.0 + 10.0 * sigma > tg.last()) continue;
          worst = std::max(worst, std::abs(marginal[r] - ref[r]));
          ++rows;
        }
      }
    }
  }
  return {rows > 0 && worst < 1e-3, std::to_string(rows) + " interior rows, max abs err " + fmt("%.2e", worst)};
}

Outcome moment_lemma() {
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t violations = 0;
  double min_margin = 1e300;
  for (int i = 0; i < 100; ++i) {
    const WindowSpec w(0.2 + 2.8 * u(rng), 0.25 + 1.75 * u(rng));
    const auto order = classify_order(0.1 + 1.8 * u(rng) + (u(rng) < 0.5 ? 0.0 : 2.0));
    const double xi = (0.1 + 4.9 * u(rng)) * (u(rng) < 0.5 ? -1.0 : 1.0);
    const double C = 0.05 + 2.95 * u(rng), N = 0.1 + 4.9 * u(rng);
    const auto r = check_lemma_3_1(w, order, xi, C, N);
    violations += !r.pass;
    min_margin = std::min(min_margin, r.margin / r.rhs);
  }
  return {violations == 0, "100 draws, " + std::to_string(violations) + " violations, min relative margin " +
                               fmt("%.3g", min_margin)};
}

Outcome inequality_suite() {
  const SuiteConfig c;
  double slowest = 0.0;
  auto timed = [&] {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(c);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return r;
  };
  const auto a = timed();
  const auto b = timed();
  std::map<std::string, std::set<std::string>> signals;
  std::map<std::string, std::size_t> failures;
  for (const auto& r : a.checks) {
    signals[r.check_id].insert(r.params.signal);
    failures[r.check_id] += !r.pass;
  }
  bool pass = a.passed() && a.body_json() == b.body_json() && slowest <= 600.0;
  std::string detail;
  for (const char* id : {"lemma_2_3", "theorem_2_4", "theorem_2_5", "lemma_3_2", "theorem_3_5", "theorem_3_6",
                         "coherence_lemma_3_2", "coherence_theorem_3_5", "coherence_theorem_3_6"}) {
    const std::size_t n = signals[id].size();
    pass &= n >= 50 && failures[id] == 0;
    detail += std::string(id) + " " + std::to_string(n) + " signals/" + std::to_string(failures[id]) + " fail; ";
  }
  detail += std::to_string(a.checks.size()) + " checks, " + std::to_string(a.failed) + " failed, " +
            (a.body_json() == b.body_json() ? "deterministic" : "NOT deterministic") +
            ", slowest run " + fmt("%.1fs", slowest) + " of 600s";
  return {pass, detail};
}

Outcome estimator_oracles() {
  bool pass = true;
  std::string detail = "step bmo error x N:";
  for (std::size_t n : {64u, 128u, 256u, 512u, 1024u, 2048u}) {
    const UniformGrid g(-1.0, 2.0 / static_cast<double>(n), n);
    const auto f = SampledSignal::sample(g, [](double t) { return cplx(t >= 0.0 ? 1.0 : 0.0); });
    const double err = std::abs(bmo_norm(f, all_intervals(n, 100000)) - 0.5);
    pass &= err <= 2.0 / static_cast<double>(n);
    detail += " " + fmt("%.3f", err * static_cast<double>(n));
  }
  std::mt19937_64 rng(909);
  const UniformGrid g(0.0, 0.1, 128);
  const auto fam = all_intervals(g.count(), 100000);
  const auto f = random_signal(rng, g);
  const double b = bmo_norm(f, fam), m = mean_bound_m(f, fam);
  const auto poly = TemperedWeight::polynomial(1.0);
  const double bk = bmo_kappa_norm(f, poly, fam);
  const cplx lambda(0.6, -2.3);
  std::vector<cplx> scaled(f.size()), shifted(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    scaled[i] = lambda * f[i];
    shifted[i] = f[i] + cplx(4.0, 1.0);
  }
  const SampledSignal fs(g, scaled), fh(g, shifted);
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
  const double worst = std::max({rel(bmo_norm(fs, fam), std::abs(lambda) * b), rel(bmo_norm(fh, fam), b),
                                 rel(mean_bound_m(fs, fam), std::abs(lambda) * m),
                                 rel(bmo_kappa_norm(fs, poly, fam), std::abs(lambda) * bk),
                                 rel(bmo_kappa_norm(fh, poly, fam), bk),
                                 rel(bmo_kappa_norm(f, TemperedWeight::constant(), fam), b)});
  pass &= worst <= 1e-12;
  detail += "; invariance max rel err " + fmt("%.1e", worst);
  return {pass, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "kernel reductions", 1.0, kernel_reductions},
      {2, "fast vs direct FRFT", 30.0, oracle_equivalence},
      {3, "round trips", 30.0, round_trips},
      {4, "window normalization", 5.0, window_normalization},
      {5, "S-transform and FRST dual paths", 60.0, dual_paths},
      {6, "marginal identity", 30.0, marginal_identity},
      {7, "moment bound", 10.0, moment_lemma},
      {8, "inequality suite (two full runs)", 1200.0, inequality_suite},
      {9, "function-space estimators", 10.0, estimator_oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool ok = o.pass && in_time;
    failed += !ok;
    std::printf("%s [%d] %s: %s; %.2fs (budget %.0fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.budget_s, in_time ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
