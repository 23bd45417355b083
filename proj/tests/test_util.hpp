// Copyright 2026 The kprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPRICE_TESTS_TEST_UTIL_HPP_
#define KPRICE_TESTS_TEST_UTIL_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kprice/rational.hpp"

namespace kprice::test {

// Result of driving the command-line tool: merged stdout+stderr text and the
// process exit code.
struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the tool named by the KPRICE_CLI_PATH compile definition with the
// given argument string.
inline CliResult run_cli(const std::string& args) {
#ifdef KPRICE_CLI_PATH
  const std::string command = std::string(KPRICE_CLI_PATH) + " " + args + " 2>&1";
#else
  const std::string command = "false";
#endif
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Directory for this test process's scratch files, created on first use.
inline std::filesystem::path temp_dir() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("kprice_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_temp_file(const std::string& name,
                                             const std::string& content) {
  const std::filesystem::path path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

// Random rational with small numerator and denominator; non-negative.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num,
                                std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(0, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// n distinct positive rationals in strictly decreasing order.
inline std::vector<Rational> random_valuations(std::mt19937_64& rng,
                                               std::size_t n) {
  std::set<Rational> distinct;
  std::uniform_int_distribution<std::int64_t> num(1, 120);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  while (distinct.size() < n) {
    distinct.insert(Rational(num(rng), den(rng)));
  }
  return {distinct.rbegin(), distinct.rend()};
}

// Uniformly random point of [lo, hi] with a small random denominator;
// sample_index 0 and 1 pin the two endpoints so they are always exercised.
inline Rational random_in_interval(std::mt19937_64& rng, const Rational& lo,
                                   const Rational& hi,
                                   std::size_t sample_index) {
  if (sample_index == 0) return lo;
  if (sample_index == 1) return hi;
  std::uniform_int_distribution<std::int64_t> den(1, 8);
  const std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, d);
  return lo + (hi - lo) * Rational(num(rng), d);
}

}  // namespace kprice::test

#endif  // KPRICE_TESTS_TEST_UTIL_HPP_
