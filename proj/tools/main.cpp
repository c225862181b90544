#include "commands.hpp"

#include "shearcst/errors.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>

using namespace shearcst;
using namespace shearcst::cli;

int main(int argc, char** argv) {
  CLI::App app{"Coherent state transform on G/Z: invariants, evolutions, geometry and spectrum"};
  app.require_subcommand(1);

  std::string config_path, out, format, times;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid_n;
  std::optional<double> e_squeeze;
  std::optional<int> j_max;

  app.add_option("--config", config_path, "key = value file")->check(CLI::ExistingFile);
  app.add_option("--out", out, "output directory");
  app.add_option("--format", format, "csv or json");
  app.add_option("--seed", seed, "rng seed");
  app.add_option("--grid-n", grid_n, "samples per in-plane axis");
  app.add_option("--e-squeeze", e_squeeze, "fiducial squeeze E");
  app.add_option("--t", times, "comma-separated evolution times");
  app.add_option("--j-max", j_max, "highest eigenfunction degree");

  const std::vector<std::pair<const char*, int (*)(const RunConfig&)>> commands{
      {"verify", cmd_verify},   {"evolve", cmd_evolve}, {"geometry", cmd_geometry},
      {"spectrum", cmd_spectrum}, {"cst", cmd_cst}};
  const std::map<std::string, std::string> help{
      {"verify", "run every invariant check and write a report"},
      {"evolve", "sample the time evolution of the configured seed"},
      {"geometry", "Cayley circle, admissible arcs, jump times and the shear lattice"},
      {"spectrum", "eigenvalues and eigenfunction samples up to j_max"},
      {"cst", "transform of the configured state"}};
  for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name))->fallthrough();
  app.footer("config keys: " + [] {
    std::string s;
    for (const auto& k : config_keys()) s += (s.empty() ? "" : " ") + k;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  try {
    RunConfig c;
    if (!config_path.empty()) cli::apply(c, parse_key_values(io::read_file(config_path)));
    cli::apply(c, environment_overrides());
    std::map<std::string, std::string> flags;
    if (!out.empty()) flags["out"] = out;
    if (!format.empty()) flags["format"] = format;
    if (seed) flags["rng_seed"] = std::to_string(*seed);
    if (grid_n) flags["grid.n"] = std::to_string(*grid_n);
    if (e_squeeze) flags["fiducial.E"] = io::format_double(*e_squeeze);
    if (!times.empty()) flags["t"] = times;
    if (j_max) flags["spectrum.j_max"] = std::to_string(*j_max);
    cli::apply(c, flags);
    c.validate();

    for (const auto& [name, fn] : commands)
      if (app.got_subcommand(name)) return fn(c);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::ConfigInvalid || e.code() == ErrorCode::DegreeTooHigh ? exit_config : exit_failure;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}
