#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "connenum/enumerator.hpp"
#include "connenum/graph_file.hpp"
#include "connenum/graph_systems.hpp"

namespace connenum::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

struct RunReport {
  std::size_t solutions = 0;
  std::size_t max_oracle_gap = 0;
  double mean_oracle_gap = 0.0;
  std::size_t max_descendants_gap = 0;
  std::size_t oracle_calls = 0;
  std::size_t descendants_calls = 0;
  std::size_t max_depth = 0;
  std::size_t depth_bound_violations = 0;
  double wall_seconds = 0.0;

  static RunReport from(const EnumStats& s, double seconds);
  std::string to_json() const;
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  SystemMode mode = SystemMode::connected;
  std::size_t k = 1;
  std::optional<std::string> file;  // also check this instance when given
};

// Randomized equivalence checks against the brute-force references. Prints
// one line per suite; returns whether everything matched.
bool selftest(const SelftestOptions& opt, std::ostream& out);

// Entry point behind the connenum executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace connenum::cli
