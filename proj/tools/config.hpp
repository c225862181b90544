#pragma once

// Run configuration: flat key = value files, SHEARCST_* environment overrides and
// command-line overrides, in increasing priority.

#include "shearcst/cst.hpp"
#include "shearcst/grid.hpp"
#include "shearcst/io.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace shearcst::cli {

enum class Scenario { G, heisenberg };

struct RunConfig {
  ModelParams params;
  FiducialSpec fiducial{FiducialKind::gaussian, 1.5, 0.0, Measure::dimensionless};
  /// Analysed state for cst / verify: the squeezed Gaussian phi_q.
  double state_q = 1.0;
  /// y and x1 share count and step; x3 is the hbar4-scaled dual grid.
  std::size_t grid_n = 64;
  double grid_step = 0.125;
  std::size_t x2_count = 9;
  double x2_step = 1.0 / 256.0;
  double x2_center = 0.0;
  Scenario scenario = Scenario::G;
  /// Heat seed: gaussian exp(-alpha z^2), analytic in u up to 2 pi hbar4 m w / alpha, or a
  /// polynomial in z.
  std::string seed_kind = "gaussian";
  double seed_alpha = 0.5;
  std::vector<double> seed_coefficients{1.0};
  std::vector<double> times{0.0};
  int j_max = 8;
  std::vector<double> geometry_E{0.5, 1.0, 1.5, 2.0, 3.0};
  double geometry_R = 1.0 / 3.0;
  std::uint64_t rng_seed = 20240601;
  std::filesystem::path out = "out";
  io::Format format = io::Format::csv;

  UniformGrid grid1() const { return UniformGrid::centered(grid_n, grid_step); }
  UniformGrid grid3() const { return grid1().dual(params.hbar4); }
  UniformGrid grid2() const;
  /// Throws ConfigInvalid on inconsistent values.
  void validate() const;
};

/// Parses "key = value" lines; '#' starts a comment. Throws ConfigInvalid.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Collects SHEARCST_<KEY> variables from `environ`, with '.' in keys written as '_'.
std::map<std::string, std::string> environment_overrides();

/// Applies key/value pairs; unknown keys and malformed values raise ConfigInvalid.
void apply(RunConfig& config, const std::map<std::string, std::string>& values);

std::vector<double> parse_list(const std::string& text);

/// Keys understood by apply(), for --help and error messages.
const std::vector<std::string>& config_keys();

}  // namespace shearcst::cli
