#pragma once

#include "config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace shearcst::cli {

/// Process exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_config = 2;

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::uint64_t rng_seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

void write_report(std::ostream& out, const Report& r, io::Format f);

/// Runs every invariant suite on the configured grids.
Report run_verify(const RunConfig& c);

int cmd_verify(const RunConfig& c);
int cmd_evolve(const RunConfig& c);
int cmd_geometry(const RunConfig& c);
int cmd_spectrum(const RunConfig& c);
int cmd_cst(const RunConfig& c);

}  // namespace shearcst::cli
