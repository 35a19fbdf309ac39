#pragma once

#include <mvk/constructors.hpp>
#include <mvk/krawtchouk.hpp>
#include <mvk/scalar.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

namespace mvk::testing {

// Small set of values used when drawing random inner entries.  Keeping the
// set discrete makes failures reproducible and keeps exact arithmetic cheap.
inline const std::vector<Rational>& rational_palette() {
  static const std::vector<Rational> palette = {
      Rational(-2), Rational(-1), Rational(0),      Rational(1),
      Rational(2),  Rational(1, 2), Rational(-1, 2), Rational(1, 3),
      Rational(-1, 3)};
  return palette;
}

inline Rational random_palette_value(std::mt19937& rng) {
  const auto& p = rational_palette();
  return p[rng() % p.size()];
}

template <typename S>
ParameterMatrix<S> random_parameter_matrix(int n, std::mt19937& rng) {
  Matrix<S> inner(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      inner(i, j) = field_traits<S>::from_mpq(random_palette_value(rng));
  return ParameterMatrix<S>::from_inner(inner);
}

inline ParameterMatrix<Rational> hadamard_parameters() {
  return ParameterMatrix<Rational>(
      Matrix<Rational>{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
}

// ---- helpers for driving the command line binary -------------------------

inline const std::string& scratch_dir() {
  static const std::string dir = [] {
    std::string tmpl = "/tmp/mvk_tests_XXXXXX";
    char* raw = mkdtemp(tmpl.data());
    return std::string(raw ? raw : "/tmp");
  }();
  return dir;
}

inline std::string scratch_path(const std::string& name) {
  return scratch_dir() + "/" + name;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given argument string, capturing stdout.  stderr is
// dropped; tests that care about diagnostics redirect it themselves.
inline CliResult run_cli(const std::string& args,
                         const std::string& stdin_file = "") {
  std::string cmd = std::string(MVK_CLI_PATH) + " " + args;
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  cmd += " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace mvk::testing
