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

#include <filesystem>
#include <string>

#include "frst/model.hpp"

namespace frst {

enum class SignalFormat { Csv, Wav };

/// Parses "t,value" or "t,re,im" rows. A non-numeric first line is taken as
/// a header; blank lines and lines starting with '#' are skipped.
/// Errors: Parse, NonUniformGrid (step jitter above 1e-9 relative), Io.
SampledSignal ingest_csv(const std::filesystem::path& path);

/// PCM 16-bit mono; samples scaled by 1/32768, grid t = n / rate.
/// Errors: UnsupportedFormat, Parse, Io.
SampledSignal ingest_wav(const std::filesystem::path& path);

SampledSignal ingest(const std::filesystem::path& path, SignalFormat format);

/// Guess from the extension: ".wav" is Wav, anything else Csv.
SignalFormat format_from_path(const std::filesystem::path& path);

/// "t,re,im" with 17 significant digits.
void write_signal_csv(const SampledSignal& f, const std::filesystem::path& path);

/// frst_re.csv, frst_im.csv, frst_abs.csv and frst_abs.pgm in `dir`
/// (created if missing). Row 0 holds tau, column 0 holds xi, data cells
/// carry 9 significant digits. The PGM maps |tf| min..max to 0..255 with
/// xi ascending from the top; a constant matrix maps to 0.
void emit_matrix(const TimeFreqMatrix& tf, const std::filesystem::path& dir);

/// Reads frst_re.csv and frst_im.csv back. Order and window are not stored
/// in the files and are supplied by the caller.
TimeFreqMatrix load_matrix(const std::filesystem::path& dir, const FractionalOrder& order,
                           const WindowSpec& window);

/// 8-bit grey levels of the heatmap in row-major order, top row first.
std::vector<unsigned char> heatmap_pixels(const TimeFreqMatrix& tf);

}  // namespace frst
