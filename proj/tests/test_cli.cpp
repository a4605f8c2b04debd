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
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("frst_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
};

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + FRST_LAB_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

void write_tone(const fs::path& p, double nu) {
  std::ofstream out(p);
  out.precision(17);
  out << "t,re,im\n";
  for (int i = 0; i < 1024; ++i) {
    const double t = i / 64.0;
    out << t << ',' << std::cos(2 * std::numbers::pi * nu * t) << ','
        << std::sin(2 * std::numbers::pi * nu * t) << '\n';
  }
}

nlohmann::json without_meta(const fs::path& p) {
  std::ifstream in(p);
  auto j = nlohmann::json::parse(in);
  j.erase("meta");
  return j;
}

}  // namespace

TEST_CASE("tone transform has a flat row at the tone frequency") {
  Workspace w;
  write_tone(w.dir / "tone.csv", 4.0);
  REQUIRE(run("transform --a 1 --k 1 --p 1 -i " + (w.dir / "tone.csv").string() + " -o " +
              (w.dir / "out").string()) == 0);
  for (const char* f : {"frst_re.csv", "frst_im.csv", "frst_abs.csv", "frst_abs.pgm"})
    CHECK(fs::exists(w.dir / "out" / f));
  const auto rows = read_csv(w.dir / "out" / "frst_abs.csv");
  // Default rows are bins m / 16 s, so xi = 4 is row 63.
  REQUIRE(rows.size() == 512);
  CHECK(rows[63][0] == doctest::Approx(4.0));
  double lo = 1e9, hi = 0.0;
  for (std::size_t c = 1 + 128; c < rows[63].size() - 128; ++c) {
    lo = std::min(lo, rows[63][c]);
    hi = std::max(hi, rows[63][c]);
  }
  CHECK(lo > 0.999);
  CHECK(hi < 1.001);
  CHECK(rows[20][512] < 0.05);  // a row far from the tone
}

TEST_CASE("inverse command") {
  Workspace w;
  write_tone(w.dir / "tone.csv", 2.0);
  REQUIRE(run("transform --a 0.6 -i " + (w.dir / "tone.csv").string() + " -o " + (w.dir / "tf").string()) == 0);
  CHECK(run("inverse --a 0.6 -i " + (w.dir / "tf").string() + " -o " + (w.dir / "back.csv").string()) == 0);
  CHECK(fs::exists(w.dir / "back.csv"));
  CHECK(run("inverse --a 0.6 -i " + (w.dir / "nothing").string() + " -o x.csv") == 3);
}

TEST_CASE("exit codes") {
  Workspace w;
  write_tone(w.dir / "tone.csv", 1.0);
  const std::string in = " -i " + (w.dir / "tone.csv").string() + " -o " + (w.dir / "o").string();
  CHECK(run("transform --a 5" + in) == 2);
  CHECK(run("transform --a 0" + in) == 2);
  CHECK(run("transform --a 2" + in) == 2);
  CHECK(run("transform --k -1" + in) == 2);
  CHECK(run("transform --mode sideways" + in) == 2);
  CHECK(run("transform --xi-min 1" + in) == 2);
  CHECK(run("transform") == 2);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("norms -i " + (w.dir / "missing.csv").string()) == 3);
  {
    std::ofstream(w.dir / "jitter.csv") << "0,1\n0.5,2\n1.2,3\n";
  }
  CHECK(run("norms -i " + (w.dir / "jitter.csv").string()) == 3);
  {
    std::ofstream(w.dir / "junk.wav") << "RIFF....WAVEjunk";
  }
  CHECK(run("norms --format wav -i " + (w.dir / "junk.wav").string()) == 3);
  CHECK(run("norms -i " + (w.dir / "tone.csv").string()) == 0);
  CHECK(run("norms --weight poly --weight-s 2 -i " + (w.dir / "tone.csv").string()) == 0);
  CHECK(run("stransform --mode direct --xi-min 0.5 --xi-max 2 --xi-count 4" + in) == 0);
  CHECK(run("--help") == 0);
  CHECK(run("--version") == 0);
}

TEST_CASE("verify is deterministic and a failing certificate is a usage error") {
  Workspace w;
  const std::string small = " --signals 3 --draws 4 --samples 48";
  REQUIRE(run("verify --seed 7" + small + " -o " + (w.dir / "r1.json").string()) == 0);
  REQUIRE(run("verify --seed 7" + small + " -o " + (w.dir / "r2").string() + "/") == 0);
  CHECK(without_meta(w.dir / "r1.json") == without_meta(w.dir / "r2" / "report.json"));
  REQUIRE(run("verify --seed 8" + small + " -o " + (w.dir / "r3.json").string()) == 0);
  CHECK(without_meta(w.dir / "r1.json") != without_meta(w.dir / "r3.json"));
  CHECK(run("verify --weight poly --weight-s 2 --weight-C 1 --weight-N 0.5" + small) == 2);
}

TEST_CASE("config file values yield to flags") {
  Workspace w;
  write_tone(w.dir / "tone.csv", 1.0);
  {
    std::ofstream(w.dir / "run.ini") << "a=5\nk=1\n";
  }
  const std::string in = " -i " + (w.dir / "tone.csv").string() + " -o " + (w.dir / "o").string();
  CHECK(run("transform --config " + (w.dir / "run.ini").string() + in) == 2);
  CHECK(run("transform --config " + (w.dir / "run.ini").string() + " --a 0.5" + in) == 0);
}

TEST_CASE("demo writes the corpus") {
  Workspace w;
  REQUIRE(run("demo --signals 2 -o " + (w.dir / "demo").string()) == 0);
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(w.dir / "demo")) n += e.path().extension() == ".csv";
  CHECK(n == 4);
}
