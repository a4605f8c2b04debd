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

#include "frst_lab.h"

#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "frst/error.hpp"
#include "frst/frft.hpp"
#include "frst/frst.hpp"
#include "frst/function_spaces.hpp"
#include "frst/inequality_lab.hpp"
#include "frst/io.hpp"
#include "frst/model.hpp"

struct frst_signal {
  frst::SampledSignal value;
};

struct frst_tf {
  frst::TimeFreqMatrix value;
};

namespace {

thread_local std::string last_error;

frst_status status_of(frst::ErrorCode code) {
  return static_cast<frst_status>(static_cast<int>(code) + 1);
}

template <typename F>
frst_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FRST_OK;
  } catch (const frst::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FRST_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FRST_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) frst::fail(frst::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

frst::UniformGrid xi_grid_for(const frst::SampledSignal& f, const frst_transform_params& p) {
  if (p.xi_count == 0) return frst::default_xi_grid(f.grid());
  if (p.xi_count == 1)
    frst::fail(frst::ErrorCode::InvalidArgument, "xi_count must be 0 or at least 2");
  if (!(p.xi_max > p.xi_min))
    frst::fail(frst::ErrorCode::InvalidArgument, "xi_max must exceed xi_min");
  return frst::UniformGrid::spanning(p.xi_min, p.xi_max, p.xi_count);
}

frst::TemperedWeight build_weight(const frst_weight& w) {
  frst::TemperedWeight out;
  if (w.kind == FRST_WEIGHT_CONST) {
    out = frst::TemperedWeight::constant();
  } else if (w.kind == FRST_WEIGHT_POLY) {
    out = frst::TemperedWeight::polynomial(w.s);
  } else {
    frst::fail(frst::ErrorCode::InvalidArgument, "unknown weight kind");
  }
  if (w.C > 0.0) out.C = w.C;
  if (w.N > 0.0) out.N = w.N;
  return out;
}

frst::WeightChoice weight_choice(const frst_weight& w) {
  const auto built = build_weight(w);
  frst::WeightChoice c;
  c.kind = w.kind == FRST_WEIGHT_POLY ? frst::WeightChoice::Kind::Polynomial
                                      : frst::WeightChoice::Kind::Constant;
  c.s = w.s;
  c.C = built.C;
  c.N = built.N;
  return c;
}

frst::SuiteConfig suite_config(const frst_suite_config& c) {
  frst::SuiteConfig s;
  s.seed = c.seed;
  s.signal_count = c.signal_count;
  s.nonneg_count = c.nonneg_count;
  s.samples = c.samples;
  s.half_width = c.half_width;
  s.k = c.k;
  s.p = c.p;
  s.slack = c.slack;
  s.max_intervals = c.max_intervals;
  s.parameter_draws = c.parameter_draws;
  s.invariant_signals = c.invariant_signals;
  if (c.orders != nullptr && c.order_count > 0) s.orders.assign(c.orders, c.orders + c.order_count);
  if (c.xis != nullptr && c.xi_count > 0) s.xis.assign(c.xis, c.xis + c.xi_count);
  if (c.use_weight) s.weights = {weight_choice(c.weight)};
  return s;
}

}  // namespace

extern "C" {

const char* frst_status_name(frst_status status) {
  switch (status) {
    case FRST_OK: return "ok";
    case FRST_E_INTERNAL: return "internal";
    default: break;
  }
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index > static_cast<int>(frst::ErrorCode::InvalidArgument)) return "unknown";
  return frst::to_string(static_cast<frst::ErrorCode>(index)).data();
}

const char* frst_last_error(void) { return last_error.c_str(); }

const char* frst_version(void) {
  static const std::string v = frst::library_version();
  return v.c_str();
}

frst_status frst_signal_load(const char* path, int format, frst_signal** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    frst::SignalFormat f;
    switch (format) {
      case FRST_FORMAT_AUTO: f = frst::format_from_path(path); break;
      case FRST_FORMAT_CSV: f = frst::SignalFormat::Csv; break;
      case FRST_FORMAT_WAV: f = frst::SignalFormat::Wav; break;
      default: frst::fail(frst::ErrorCode::InvalidArgument, "unknown signal format");
    }
    *out = new frst_signal{frst::ingest(path, f)};
  });
}

frst_status frst_signal_create(double start, double step, size_t count, const double* re,
                               const double* im, frst_signal** out) {
  return guarded([&] {
    require(re, "re");
    require(out, "out");
    frst::UniformGrid grid(start, step, count);
    std::vector<frst::cplx> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = {re[i], im != nullptr ? im[i] : 0.0};
    *out = new frst_signal{frst::SampledSignal(grid, std::move(v))};
  });
}

void frst_signal_free(frst_signal* signal) { delete signal; }

size_t frst_signal_count(const frst_signal* signal) {
  return signal != nullptr ? signal->value.size() : 0;
}

double frst_signal_start(const frst_signal* signal) {
  return signal != nullptr ? signal->value.grid().start() : 0.0;
}

double frst_signal_step(const frst_signal* signal) {
  return signal != nullptr ? signal->value.grid().step() : 0.0;
}

frst_status frst_signal_values(const frst_signal* signal, double* re, double* im) {
  return guarded([&] {
    require(signal, "signal");
    const auto v = signal->value.values();
    for (size_t i = 0; i < v.size(); ++i) {
      if (re != nullptr) re[i] = v[i].real();
      if (im != nullptr) im[i] = v[i].imag();
    }
  });
}

frst_status frst_signal_save(const frst_signal* signal, const char* path) {
  return guarded([&] {
    require(signal, "signal");
    require(path, "path");
    frst::write_signal_csv(signal->value, path);
  });
}

void frst_transform_params_init(frst_transform_params* params) {
  if (params == nullptr) return;
  *params = frst_transform_params{1.0, 1.0, 1.0, 0.0, 0.0, 0, FRST_MODE_FAST};
}

frst_status frst_transform(const frst_signal* signal, const frst_transform_params* params,
                           frst_tf** out) {
  return guarded([&] {
    require(signal, "signal");
    require(params, "params");
    require(out, "out");
    const auto order = frst::classify_order(params->a);
    const frst::WindowSpec spec(params->k, params->p);
    const auto& f = signal->value;
    const auto mode = params->mode == FRST_MODE_DIRECT ? frst::FrstMode::Direct
                                                       : frst::FrstMode::Fast;
    *out = new frst_tf{frst::frst_forward(f, order, spec, f.grid(), xi_grid_for(f, *params), mode)};
  });
}

frst_status frst_stransform(const frst_signal* signal, const frst_transform_params* params,
                            frst_tf** out) {
  return guarded([&] {
    require(signal, "signal");
    require(params, "params");
    require(out, "out");
    const auto& f = signal->value;
    const auto xi = xi_grid_for(f, *params);
    *out = new frst_tf{params->mode == FRST_MODE_DIRECT
                           ? frst::s_transform_direct(f, params->k, f.grid(), xi)
                           : frst::s_transform_spectral(f, params->k, xi)};
  });
}

void frst_tf_free(frst_tf* tf) { delete tf; }

size_t frst_tf_rows(const frst_tf* tf) { return tf != nullptr ? tf->value.rows() : 0; }

size_t frst_tf_cols(const frst_tf* tf) { return tf != nullptr ? tf->value.cols() : 0; }

frst_status frst_tf_value(const frst_tf* tf, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    require(tf, "tf");
    if (row >= tf->value.rows() || col >= tf->value.cols())
      frst::fail(frst::ErrorCode::InvalidArgument, "matrix index out of range");
    const auto z = tf->value.at(row, col);
    if (re != nullptr) *re = z.real();
    if (im != nullptr) *im = z.imag();
  });
}

double frst_tf_xi(const frst_tf* tf, size_t row) {
  return tf != nullptr ? tf->value.xi_grid().point(row) : 0.0;
}

double frst_tf_tau(const frst_tf* tf, size_t col) {
  return tf != nullptr ? tf->value.tau_grid().point(col) : 0.0;
}

frst_status frst_tf_emit(const frst_tf* tf, const char* dir) {
  return guarded([&] {
    require(tf, "tf");
    require(dir, "dir");
    frst::emit_matrix(tf->value, dir);
  });
}

frst_status frst_tf_load(const char* dir, double a, double k, double p, frst_tf** out) {
  return guarded([&] {
    require(dir, "dir");
    require(out, "out");
    const auto order = frst::classify_order(a);
    *out = new frst_tf{frst::load_matrix(dir, order, frst::WindowSpec(k, p))};
  });
}

frst_status frst_inverse(const frst_tf* tf, double start, double step, size_t count,
                         frst_signal** out) {
  return guarded([&] {
    require(tf, "tf");
    require(out, "out");
    const auto grid = count == 0 ? tf->value.tau_grid() : frst::UniformGrid(start, step, count);
    *out = new frst_signal{frst::frst_inverse(tf->value, tf->value.order(), grid)};
  });
}

frst_status frst_compute_norms(const frst_signal* signal, const frst_weight* weight,
                               size_t max_intervals, frst_norms* out) {
  return guarded([&] {
    require(signal, "signal");
    require(weight, "weight");
    require(out, "out");
    const auto& f = signal->value;
    const auto w = build_weight(*weight);
    const auto family = frst::all_intervals(
        f.size(), max_intervals > 0 ? max_intervals : frst::SuiteConfig{}.max_intervals);
    const auto phi = frst::TestFunction::gaussian();
    const auto scales = frst::default_scales(f.grid());
    frst_norms n{};
    n.bmo = frst::bmo_norm(f, family);
    n.hardy = frst::hardy_norm(f, phi, scales);
    n.bmo_kappa = frst::bmo_kappa_norm(f, w, family);
    n.hardy_kappa = frst::hardy_kappa_norm(f, phi, scales, w);
    n.l1_kappa = frst::lp_kappa_norm(f, 1.0, w);
    n.m = frst::mean_bound_m(f, family);
    *out = n;
  });
}

void frst_suite_config_init(frst_suite_config* config) {
  if (config == nullptr) return;
  const frst::SuiteConfig d;
  *config = frst_suite_config{};
  config->seed = d.seed;
  config->signal_count = d.signal_count;
  config->nonneg_count = d.nonneg_count;
  config->samples = d.samples;
  config->half_width = d.half_width;
  config->k = d.k;
  config->p = d.p;
  config->slack = d.slack;
  config->max_intervals = d.max_intervals;
  config->parameter_draws = d.parameter_draws;
  config->invariant_signals = d.invariant_signals;
  config->weight = frst_weight{FRST_WEIGHT_CONST, 1.0, 0.0, 0.0};
}

frst_status frst_verify(const frst_suite_config* config, const char* report_path,
                        frst_suite_summary* summary) {
  return guarded([&] {
    require(config, "config");
    const auto report = frst::run_suite(suite_config(*config));
    if (report_path != nullptr) {
      std::ofstream out(report_path);
      if (!out) frst::fail(frst::ErrorCode::Io, std::string("cannot write ") + report_path);
      out << report.to_json() << '\n';
      if (!out) frst::fail(frst::ErrorCode::Io, std::string("write failed: ") + report_path);
    }
    if (summary != nullptr) *summary = {report.checks.size(), report.failed, report.passed() ? 1 : 0};
  });
}

frst_status frst_demo(const frst_suite_config* config, const char* dir, size_t* written) {
  return guarded([&] {
    require(config, "config");
    require(dir, "dir");
    const auto c = suite_config(*config);
    c.validate();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) frst::fail(frst::ErrorCode::Io, std::string("cannot create ") + dir);
    size_t n = 0;
    for (const auto& corpus : {frst::general_corpus(c), frst::nonnegative_corpus(c)}) {
      for (const auto& member : corpus) {
        frst::write_signal_csv(member.signal, std::filesystem::path(dir) / (member.id + ".csv"));
        ++n;
      }
    }
    if (written != nullptr) *written = n;
  });
}

}  // extern "C"
