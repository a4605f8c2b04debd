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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frst/error.hpp"
#include "frst/function_spaces.hpp"

using namespace frst;

namespace {

constexpr double kPi = std::numbers::pi;

SampledSignal random_signal(std::mt19937_64& rng, const UniformGrid& g) {
  std::normal_distribution<double> n;
  std::vector<cplx> v(g.count());
  for (auto& x : v) x = {n(rng), n(rng)};
  return SampledSignal(g, std::move(v));
}

SampledSignal unit_step(std::size_t n) {
  const UniformGrid g(-1.0, 2.0 / static_cast<double>(n), n);
  return SampledSignal::sample(g, [](double t) { return cplx(t >= 0.0 ? 1.0 : 0.0); });
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("interval mean") {
  const UniformGrid g(0.0, 1.0, 5);
  const SampledSignal f(g, {1.0, 2.0, 3.0, cplx(4.0, 2.0), 5.0});
  CHECK(interval_mean(f, {1, 3}) == cplx(3.0, 2.0 / 3.0));
  CHECK(code_of([&] { interval_mean(f, {2, 5}); }) == ErrorCode::BadInterval);
}

TEST_CASE("bmo of the unit step converges to one half") {
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    const auto f = unit_step(n);
    const double b = bmo_norm(f, all_intervals(n, 200000));
    CHECK(std::abs(b - 0.5) <= 2.0 / static_cast<double>(n));
  }
  const auto f = unit_step(2048);
  CHECK(std::abs(bmo_norm(f, all_intervals(2048, 100000)) - 0.5) <= 2.0 / 2048.0);
}

TEST_CASE("bmo and mean bound invariances") {
  std::mt19937_64 rng(12);
  const UniformGrid g(0.0, 0.1, 96);
  const auto family = all_intervals(g.count(), 100000);
  const auto f = random_signal(rng, g);
  const double b = bmo_norm(f, family);
  const double m = mean_bound_m(f, family);

  const cplx lambda(-1.5, 2.0);
  std::vector<cplx> scaled(f.size()), shifted(f.size()), conj(f.size()), reversed(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    scaled[i] = lambda * f[i];
    shifted[i] = f[i] + cplx(3.0, -7.0);
    conj[i] = std::conj(f[i]);
    reversed[i] = f[f.size() - 1 - i];
  }
  CHECK(bmo_norm(SampledSignal(g, scaled), family) == doctest::Approx(std::abs(lambda) * b).epsilon(1e-12));
  CHECK(mean_bound_m(SampledSignal(g, scaled), family) == doctest::Approx(std::abs(lambda) * m).epsilon(1e-12));
  CHECK(bmo_norm(SampledSignal(g, shifted), family) == doctest::Approx(b).epsilon(1e-12));
  CHECK(bmo_norm(SampledSignal(g, conj), family) == doctest::Approx(b).epsilon(1e-12));
  CHECK(bmo_norm(SampledSignal(g, reversed), family) == doctest::Approx(b).epsilon(1e-12));
  // Translating the grid changes nothing.
  CHECK(bmo_norm(SampledSignal(UniformGrid(5.0, 0.1, 96), std::vector<cplx>(f.values().begin(), f.values().end())), family) == b);
  // Constants have zero oscillation.
  CHECK(bmo_norm(SampledSignal(g, std::vector<cplx>(g.count(), cplx(2.0, 1.0))), family) < 1e-14);
  CHECK(b <= 2.0 * m);
}

TEST_CASE("bmo needs a matching nonempty family") {
  const UniformGrid g(0.0, 1.0, 8);
  const auto f = SampledSignal::zeros(g);
  CHECK(code_of([&] { bmo_norm(f, IntervalFamily({}, 8)); }) == ErrorCode::EmptyFamily);
  CHECK(code_of([&] { bmo_norm(f, all_intervals(9, 100)); }) == ErrorCode::BadInterval);
}

TEST_CASE("default scales") {
  const UniformGrid g(0.0, 0.1, 101);
  const auto s = default_scales(g);
  REQUIRE(!s.empty());
  CHECK(s.front() == doctest::Approx(0.2));
  CHECK(s.back() <= 10.0 + 1e-12);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] / s[i - 1] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("maximal function of a gaussian against its closed form") {
  // phi * phi_t is the normal density with variance 1 + t^2, largest at t -> 0
  // for x = 0.
  const UniformGrid g(-12.0, 1.0 / 32.0, 769);
  const auto phi = TestFunction::gaussian();
  const auto f = SampledSignal::sample(g, [&](double t) { return cplx(phi(t)); });
  const std::vector<double> scales{0.25, 0.5, 1.0, 2.0};
  const auto m = maximal_function(f, phi, scales);
  for (std::size_t i = 0; i < g.count(); i += 16) {
    const double x = g.point(i);
    double best = 0.0;
    for (double t : scales) {
      const double v = 1.0 + t * t;
      best = std::max(best, std::exp(-x * x / (2.0 * v)) / std::sqrt(2.0 * kPi * v));
    }
    if (std::abs(x) < 6.0) CHECK(m[i] == doctest::Approx(best).epsilon(1e-8));
  }
  const std::vector<double> one{0.25};
  const auto m0 = maximal_function(f, phi, one);
  CHECK(m0[384] == doctest::Approx(1.0 / std::sqrt(2.0 * kPi * (1.0 + 0.0625))).epsilon(1e-10));
  CHECK(code_of([&] { maximal_function(f, phi, std::vector<double>{0.05}); }) ==
        ErrorCode::UnresolvableScale);
}

TEST_CASE("hardy norms") {
  const UniformGrid g(-8.0, 1.0 / 16.0, 256);
  const auto phi = TestFunction::gaussian();
  const auto scales = default_scales(g);
  const auto f = SampledSignal::sample(g, [](double t) { return cplx(std::exp(-kPi * t * t)); });
  const double h = hardy_norm(f, phi, scales);
  CHECK(h >= 1.0 - 1e-9);  // at least the integral of f
  const auto one = TemperedWeight::constant();
  CHECK(hardy_kappa_norm(f, phi, scales, one) == h);
  const auto poly = TemperedWeight::polynomial(1.0);
  CHECK(hardy_kappa_norm(f, phi, scales, poly) > h);

  std::vector<cplx> twice(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) twice[i] = 2.0 * f[i];
  CHECK(hardy_norm(SampledSignal(g, twice), phi, scales) == doctest::Approx(2.0 * h).epsilon(1e-12));
}

TEST_CASE("tempered certificates") {
  std::vector<double> xs;
  for (int i = -40; i <= 40; ++i) xs.push_back(0.5 * i);
  CHECK(tempered_check(TemperedWeight::constant(), xs, xs).pass);
  for (double s : {0.5, 1.0, 2.0, 3.5}) {
    const auto r = tempered_check(TemperedWeight::polynomial(s), xs, xs);
    CHECK(r.pass);
    CHECK(r.worst_ratio <= 1.0 + 1e-12);
    CHECK(r.worst_ratio == doctest::Approx(1.0));
  }
  auto bad = TemperedWeight::polynomial(2.0);
  bad.N = 1.0;
  CHECK_FALSE(tempered_check(bad, xs, xs).pass);

  TemperedWeight neg{[](double x) { return x; }, 1.0, 1.0, "x"};
  CHECK(code_of([&] { tempered_check(neg, xs, xs); }) == ErrorCode::NonpositiveWeight);
  TemperedWeight exp_w{[](double x) { return std::exp(x); }, 1.0, 3.0, "exp"};
  CHECK_FALSE(tempered_check(exp_w, xs, xs).pass);
}

TEST_CASE("weighted interval measure and norms") {
  const UniformGrid g(0.0, 1.0 / 1000.0, 1001);
  const auto w = TemperedWeight::polynomial(1.0);
  const auto fam = IntervalFamily({{0, 1000}}, 1001);
  const auto mu = weighted_interval_measure(fam, w, g);
  REQUIRE(mu.size() == 1);
  CHECK(mu[0] == doctest::Approx(1.5).epsilon(1e-3));

  const auto f = SampledSignal::sample(g, [](double) { return cplx(1.0); });
  CHECK(lp_kappa_norm(f, 1.0, w) == doctest::Approx(1.5).epsilon(1e-3));
  CHECK(lp_kappa_norm(f, 2.0, w) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-3));
  CHECK(code_of([&] { lp_kappa_norm(f, 0.5, w); }) == ErrorCode::BadExponent);
}

TEST_CASE("weighted norms with unit weight reduce to the plain ones") {
  std::mt19937_64 rng(44);
  const UniformGrid g(-4.0, 1.0 / 8.0, 64);
  const auto f = random_signal(rng, g);
  const auto fam = all_intervals(g.count(), 100000);
  const auto one = TemperedWeight::constant();
  CHECK(bmo_kappa_norm(f, one, fam) == bmo_norm(f, fam));
  TemperedWeight five{[](double) { return 5.0; }, 1.0, 0.5, "five"};
  CHECK(bmo_kappa_norm(f, five, fam) == doctest::Approx(bmo_norm(f, fam)).epsilon(1e-13));
  TemperedWeight zero{[](double) { return 0.0; }, 1.0, 0.5, "zero"};
  CHECK(code_of([&] { bmo_kappa_norm(f, zero, fam); }) == ErrorCode::NonpositiveWeight);
}
