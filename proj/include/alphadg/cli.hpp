#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alphadg/spectral.hpp"

namespace alphadg::cli {

enum class Format { json, csv, text };

struct RunConfig {
  double tol = 1e-10;
  long max_iters = 200000;
  int workers = 1;  // set from default_workers() by the harness
  bool long_runs = false;
  Format format = Format::text;

  SpectralOptions spectral() const { return {tol, max_iters}; }
};

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitViolation = 4;

Format parse_format(const std::string& s);
const char* to_string(Format f);

// key=value lines (tol, max_iters, workers, long_runs, format); '#' comments.
// Only keys present in the file are written to `cfg`; returns their names.
std::vector<std::string> apply_config_file(const std::string& path, RunConfig& cfg);

// Integer lists: "5", "4..10", "1,3,5", "2..8/2", mixed with commas.
std::vector<int> parse_int_list(const std::string& s);

// Real lists: "0.5", "0,0.25,0.5", "0..0.9/0.05" (inclusive), and
// "0,0.1,...,0.9" where "..." continues the step of the two preceding items
// up to the next item. Values are rounded to 12 decimals.
std::vector<double> parse_real_list(const std::string& s);

// Decimal formatting with 12 significant digits, classic locale.
std::string format_real(double x);

// Runs the harness; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alphadg::cli
