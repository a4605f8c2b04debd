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

#include "frst/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "frst/error.hpp"

namespace frst {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = line.find(',');
    out.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

/// Lines that carry content: blank lines and '#' comments dropped.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    auto line = trim(text.substr(0, pos));
    ++number;
    if (!line.empty() && line.front() != '#') out.emplace_back(number, line);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

[[noreturn]] void parse_fail(const fs::path& path, std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, path.string() + ":" + std::to_string(line) + ": " + what);
}

UniformGrid grid_from_times(const std::vector<double>& t, const std::string& where) {
  if (t.size() < 2) fail(ErrorCode::Parse, where + ": need at least two samples");
  const double step = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(step > 0.0)) fail(ErrorCode::NonUniformGrid, where + ": times must increase");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (std::abs((t[i] - t[i - 1]) - step) > 1e-9 * step) {
      std::ostringstream os;
      os.precision(17);
      os << where << ": step " << (t[i] - t[i - 1]) << " at sample " << i
         << " differs from the mean step " << step;
      fail(ErrorCode::NonUniformGrid, os.str());
    }
  }
  return UniformGrid(t.front(), step, t.size());
}

std::string cell(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%#.9g", v);
  return buf.data();
}

std::string exact(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

template <typename F>
void write_table(const TimeFreqMatrix& tf, const fs::path& path, F&& value) {
  auto out = open_out(path);
  out << "xi\\tau";
  for (std::size_t c = 0; c < tf.cols(); ++c) out << ',' << exact(tf.tau_grid().point(c));
  out << '\n';
  for (std::size_t r = 0; r < tf.rows(); ++r) {
    out << exact(tf.xi_grid().point(r));
    for (std::size_t c = 0; c < tf.cols(); ++c) out << ',' << cell(value(tf.at(r, c)));
    out << '\n';
  }
  if (!out) fail(ErrorCode::Io, "write failed: " + path.string());
}

struct Table {
  std::vector<double> tau;
  std::vector<double> xi;
  std::vector<double> cells;
};

Table read_table(const fs::path& path) {
  const std::string text = read_file(path);
  const auto lines = content_lines(text);
  if (lines.size() < 3) fail(ErrorCode::Parse, path.string() + ": matrix needs two rows");
  Table t;
  const auto header = split_commas(lines[0].second);
  for (std::size_t i = 1; i < header.size(); ++i) {
    double v;
    if (!parse_double(header[i], v)) parse_fail(path, lines[0].first, "bad tau value");
    t.tau.push_back(v);
  }
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto fields = split_commas(lines[l].second);
    if (fields.size() != header.size()) parse_fail(path, lines[l].first, "ragged row");
    double v;
    if (!parse_double(fields[0], v)) parse_fail(path, lines[l].first, "bad xi value");
    t.xi.push_back(v);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!parse_double(fields[i], v)) parse_fail(path, lines[l].first, "bad cell");
      t.cells.push_back(v);
    }
  }
  return t;
}

std::uint32_t le32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t le16(const std::string& b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

}  // namespace

SampledSignal ingest_csv(const fs::path& path) {
  const std::string text = read_file(path);
  auto lines = content_lines(text);
  if (!lines.empty()) {
    double probe;
    if (!parse_double(split_commas(lines.front().second).front(), probe))
      lines.erase(lines.begin());
  }
  if (lines.empty()) fail(ErrorCode::Parse, path.string() + ": no samples");
  const std::size_t width = split_commas(lines.front().second).size();
  if (width != 2 && width != 3)
    parse_fail(path, lines.front().first, "expected t,value or t,re,im");
  std::vector<double> t;
  std::vector<cplx> values;
  for (const auto& [number, line] : lines) {
    const auto fields = split_commas(line);
    if (fields.size() != width) parse_fail(path, number, "inconsistent column count");
    double x[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < width; ++i)
      if (!parse_double(fields[i], x[i])) parse_fail(path, number, "not a number");
    t.push_back(x[0]);
    values.emplace_back(x[1], width == 3 ? x[2] : 0.0);
  }
  return SampledSignal(grid_from_times(t, path.string()), std::move(values));
}

SampledSignal ingest_wav(const fs::path& path) {
  const std::string b = read_file(path);
  const std::string name = path.string();
  if (b.size() < 12 || b.compare(0, 4, "RIFF") != 0 || b.compare(8, 4, "WAVE") != 0)
    fail(ErrorCode::UnsupportedFormat, name + ": not a RIFF/WAVE file");
  std::size_t at = 12;
  bool have_fmt = false;
  std::uint32_t rate = 0;
  while (at + 8 <= b.size()) {
    const std::string id = b.substr(at, 4);
    const std::uint32_t size = le32(b, at + 4);
    const std::size_t body = at + 8;
    if (body + size > b.size() && id != "data")
      fail(ErrorCode::Parse, name + ": truncated " + id + " chunk");
    if (id == "fmt ") {
      if (size < 16) fail(ErrorCode::Parse, name + ": short fmt chunk");
      const auto format = le16(b, body);
      const auto channels = le16(b, body + 2);
      rate = le32(b, body + 4);
      const auto bits = le16(b, body + 14);
      if (format != 1 || channels != 1 || bits != 16)
        fail(ErrorCode::UnsupportedFormat,
             name + ": only PCM 16-bit mono is supported (format " + std::to_string(format) +
                 ", " + std::to_string(channels) + " channels, " + std::to_string(bits) +
                 " bits)");
      if (rate == 0) fail(ErrorCode::Parse, name + ": zero sample rate");
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) fail(ErrorCode::Parse, name + ": data chunk before fmt chunk");
      const std::size_t bytes = std::min<std::size_t>(size, b.size() - body);
      const std::size_t count = bytes / 2;
      if (count < 2) fail(ErrorCode::Parse, name + ": need at least two samples");
      std::vector<cplx> values(count);
      for (std::size_t i = 0; i < count; ++i)
        values[i] = static_cast<double>(static_cast<std::int16_t>(le16(b, body + 2 * i))) / 32768.0;
      return SampledSignal(UniformGrid(0.0, 1.0 / static_cast<double>(rate), count),
                           std::move(values));
    }
    at = body + size + (size & 1u);
  }
  fail(ErrorCode::Parse, name + ": no data chunk");
}

SampledSignal ingest(const fs::path& path, SignalFormat format) {
  return format == SignalFormat::Wav ? ingest_wav(path) : ingest_csv(path);
}

SignalFormat format_from_path(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".wav" ? SignalFormat::Wav : SignalFormat::Csv;
}

void write_signal_csv(const SampledSignal& f, const fs::path& path) {
  auto out = open_out(path);
  out << "t,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << exact(f.grid().point(i)) << ',' << exact(f[i].real()) << ',' << exact(f[i].imag())
        << '\n';
  if (!out) fail(ErrorCode::Io, "write failed: " + path.string());
}

std::vector<unsigned char> heatmap_pixels(const TimeFreqMatrix& tf) {
  std::vector<double> mag(tf.values().size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(tf.values()[i]);
  const auto [lo, hi] = std::minmax_element(mag.begin(), mag.end());
  const double min = *lo, range = *hi - *lo;
  std::vector<unsigned char> px(mag.size(), 0);
  if (!(range > 0.0)) return px;
  for (std::size_t i = 0; i < mag.size(); ++i)
    px[i] = static_cast<unsigned char>(std::lround(255.0 * (mag[i] - min) / range));
  return px;
}

void emit_matrix(const TimeFreqMatrix& tf, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  write_table(tf, dir / "frst_re.csv", [](cplx z) { return z.real(); });
  write_table(tf, dir / "frst_im.csv", [](cplx z) { return z.imag(); });
  write_table(tf, dir / "frst_abs.csv", [](cplx z) { return std::abs(z); });

  const auto px = heatmap_pixels(tf);
  auto out = open_out(dir / "frst_abs.pgm", std::ios::out | std::ios::binary);
  out << "P5\n" << tf.cols() << ' ' << tf.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  if (!out) fail(ErrorCode::Io, "write failed: " + (dir / "frst_abs.pgm").string());
}

TimeFreqMatrix load_matrix(const fs::path& dir, const FractionalOrder& order,
                           const WindowSpec& window) {
  const Table re = read_table(dir / "frst_re.csv");
  const Table im = read_table(dir / "frst_im.csv");
  if (re.tau != im.tau || re.xi != im.xi)
    fail(ErrorCode::Parse, dir.string() + ": real and imaginary tables disagree on axes");
  const UniformGrid tau = grid_from_times(re.tau, (dir / "frst_re.csv").string());
  const UniformGrid xi = grid_from_times(re.xi, (dir / "frst_re.csv").string());
  std::vector<cplx> values(re.cells.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = cplx(re.cells[i], im.cells[i]);
  return TimeFreqMatrix(tau, xi, std::move(values), order, window);
}

}  // namespace frst
