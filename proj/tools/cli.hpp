#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "catsim/expm.hpp"

namespace catsim::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

struct RunConfig {
  int dim = 100;
  int restarts = 16;
  std::vector<std::uint64_t> seed_list;
  std::map<std::string, double> tolerances{{"table_dF", 2e-3}};
  std::string output_dir = ".";

  void validate() const;
};

/// Reads a JSON object with any of the RunConfig fields.
RunConfig load_config(const std::string& path);

/// "+" or "-" for +/- pi/4, otherwise radians.
double parse_angle(const std::string& text);

/// "re,im" (or a bare real).
Complex parse_complex(const std::string& text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catsim::cli
