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

// frst-lab: command-line front end over the C API.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "frst_lab.h"

namespace {

namespace fs = std::filesystem;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::string format;
  double a = 1.0;
  double k = 1.0;
  double p = 1.0;
  std::optional<double> xi_min, xi_max;
  std::size_t xi_count = 0;
  std::string mode = "fast";
  std::string weight = "const";
  double weight_s = 1.0;
  double weight_C = 0.0;
  double weight_N = 0.0;
  std::uint64_t seed = 7;
  std::optional<std::size_t> signals;
  std::optional<std::size_t> draws;
  std::optional<std::size_t> samples;
  bool weight_given = false;
};

int report(frst_status status) {
  std::cerr << "frst-lab: " << frst_status_name(status) << ": " << frst_last_error() << '\n';
  switch (status) {
    case FRST_E_PARSE:
    case FRST_E_NONUNIFORM_GRID:
    case FRST_E_UNSUPPORTED_FORMAT:
    case FRST_E_IO:
      return kIo;
    default:
      return kUsage;
  }
}

int usage(const std::string& message) {
  std::cerr << "frst-lab: " << message << '\n';
  return kUsage;
}

int format_code(const Options& o) {
  if (o.format == "csv") return FRST_FORMAT_CSV;
  if (o.format == "wav") return FRST_FORMAT_WAV;
  return FRST_FORMAT_AUTO;
}

frst_weight weight_of(const Options& o) {
  return frst_weight{o.weight == "poly" ? FRST_WEIGHT_POLY : FRST_WEIGHT_CONST, o.weight_s,
                     o.weight_C, o.weight_N};
}

int run_transform(const Options& o, bool classical) {
  if (o.input.empty() || o.output.empty()) return usage("transform needs -i and -o");
  if (o.xi_min.has_value() != o.xi_max.has_value() || (o.xi_min && o.xi_count < 2))
    return usage("--xi-min, --xi-max and --xi-count (>= 2) go together");
  frst_signal* f = nullptr;
  if (auto s = frst_signal_load(o.input.c_str(), format_code(o), &f)) return report(s);
  frst_transform_params params;
  frst_transform_params_init(&params);
  params.a = o.a;
  params.k = o.k;
  params.p = o.p;
  if (o.xi_min) {
    params.xi_min = *o.xi_min;
    params.xi_max = *o.xi_max;
    params.xi_count = o.xi_count;
  }
  params.mode = o.mode == "direct" ? FRST_MODE_DIRECT : FRST_MODE_FAST;
  frst_tf* tf = nullptr;
  frst_status s = classical ? frst_stransform(f, &params, &tf) : frst_transform(f, &params, &tf);
  frst_signal_free(f);
  if (s == FRST_OK) s = frst_tf_emit(tf, o.output.c_str());
  if (s == FRST_OK)
    std::cout << frst_tf_rows(tf) << " x " << frst_tf_cols(tf) << " matrix written to "
              << o.output << '\n';
  frst_tf_free(tf);
  return s == FRST_OK ? kOk : report(s);
}

int run_inverse(const Options& o) {
  if (o.input.empty() || o.output.empty()) return usage("inverse needs -i (matrix directory) and -o");
  frst_tf* tf = nullptr;
  if (auto s = frst_tf_load(o.input.c_str(), o.a, o.k, o.p, &tf)) return report(s);
  frst_signal* f = nullptr;
  frst_status s = frst_inverse(tf, 0.0, 0.0, 0, &f);
  frst_tf_free(tf);
  fs::path out = o.output;
  if (fs::is_directory(out)) out /= "inverse.csv";
  if (s == FRST_OK) s = frst_signal_save(f, out.c_str());
  if (s == FRST_OK) std::cout << frst_signal_count(f) << " samples written to " << out.string() << '\n';
  frst_signal_free(f);
  return s == FRST_OK ? kOk : report(s);
}

int run_norms(const Options& o) {
  if (o.input.empty()) return usage("norms needs -i");
  frst_signal* f = nullptr;
  if (auto s = frst_signal_load(o.input.c_str(), format_code(o), &f)) return report(s);
  const frst_weight w = weight_of(o);
  frst_norms n{};
  const frst_status s = frst_compute_norms(f, &w, 0, &n);
  frst_signal_free(f);
  if (s != FRST_OK) return report(s);
  const std::pair<const char*, double> rows[] = {
      {"bmo", n.bmo},         {"hardy", n.hardy},       {"bmo_kappa", n.bmo_kappa},
      {"hardy_kappa", n.hardy_kappa}, {"l1_kappa", n.l1_kappa}, {"m", n.m}};
  std::printf("%-12s %s\n", "norm", "value");
  for (const auto& [name, v] : rows) std::printf("%-12s %.10g\n", name, v);
  return kOk;
}

frst_suite_config suite_of(const Options& o) {
  frst_suite_config c;
  frst_suite_config_init(&c);
  c.seed = o.seed;
  c.k = o.k;
  c.p = o.p;
  if (o.signals) c.signal_count = c.nonneg_count = *o.signals;
  if (o.draws) c.parameter_draws = *o.draws;
  if (o.samples) c.samples = *o.samples;
  if (o.weight_given) {
    c.use_weight = 1;
    c.weight = weight_of(o);
  }
  return c;
}

int run_verify(const Options& o) {
  fs::path out = o.output.empty() ? fs::path("report.json") : fs::path(o.output);
  if (fs::is_directory(out) || (!o.output.empty() && o.output.back() == '/')) {
    std::error_code ec;
    fs::create_directories(out, ec);
    out /= "report.json";
  }
  const frst_suite_config c = suite_of(o);
  frst_suite_summary summary{};
  if (auto s = frst_verify(&c, out.c_str(), &summary)) return report(s);
  std::cout << summary.total << " checks, " << summary.failed << " failed; report written to "
            << out.string() << '\n';
  return summary.passed ? kOk : kVerifyFailed;
}

int run_demo(const Options& o) {
  const std::string dir = o.output.empty() ? "demo" : o.output;
  const frst_suite_config c = suite_of(o);
  std::size_t written = 0;
  if (auto s = frst_demo(&c, dir.c_str(), &written)) return report(s);
  std::cout << written << " signals written to " << dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Fourier and S-transform toolkit", "frst-lab"};
  app.set_version_flag("--version", std::string(frst_version()));
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("-i,--input", o.input, "Input signal (CSV or WAV) or matrix directory");
  app.add_option("-o,--output", o.output, "Output directory or file");
  app.add_option("--format", o.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "wav"}));
  app.add_option("--a", o.a, "Fractional order in [0, 4)");
  app.add_option("--k", o.k, "Window scale k > 0");
  app.add_option("--p", o.p, "Window exponent p > 0");
  app.add_option("--xi-min", o.xi_min, "Lowest frequency row");
  app.add_option("--xi-max", o.xi_max, "Highest frequency row");
  app.add_option("--xi-count", o.xi_count, "Number of frequency rows");
  app.add_option("--mode", o.mode, "Evaluation path")->check(CLI::IsMember({"direct", "fast"}));
  auto* weight = app.add_option("--weight", o.weight, "Tempered weight")
                     ->check(CLI::IsMember({"const", "poly"}));
  app.add_option("--weight-s", o.weight_s, "Polynomial weight exponent");
  app.add_option("--weight-C", o.weight_C, "Weight certificate constant C");
  app.add_option("--weight-N", o.weight_N, "Weight certificate exponent N");
  app.add_option("--seed", o.seed, "Corpus seed");
  app.add_option("--signals", o.signals, "Signals per corpus (verify, demo)");
  app.add_option("--draws", o.draws, "Random parameter draws (verify)");
  app.add_option("--samples", o.samples, "Samples per corpus signal (verify, demo)");

  const std::map<std::string, std::string> commands{
      {"transform", "Fractional S-transform of a signal"},
      {"stransform", "Classical S-transform of a signal"},
      {"inverse", "Recover a signal from an emitted matrix"},
      {"norms", "BMO, Hardy and weighted norms of a signal"},
      {"verify", "Run the inequality suite and write report.json"},
      {"demo", "Write the built-in corpus as CSV"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.weight_given = weight->count() > 0;

  if (o.command == "transform") return run_transform(o, false);
  if (o.command == "stransform") return run_transform(o, true);
  if (o.command == "inverse") return run_inverse(o);
  if (o.command == "norms") return run_norms(o);
  if (o.command == "verify") return run_verify(o);
  return run_demo(o);
}
