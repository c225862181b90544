#pragma once

// CSV / JSON emission of slices, volumes and tables. Numbers are written in the
// shortest form that parses back to the same double.
//
// CSV volume layout:
//   # grid x1 <origin> <step> <count>
//   # grid x3 <origin> <step> <count>
//   # grid x2 <origin> <step> <count>
//   then per slice "# slice <x2>" followed by rows x1,x3,re,im (x1-major).
// JSON mirrors it: {"grids": {...}, "slices": [{"x2": ., "re": [...], "im": [...]}]}.

#include "shearcst/grid.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace shearcst::io {

enum class Format { csv, json };

/// "csv" or "json"; throws ConfigInvalid otherwise.
Format parse_format(std::string_view name);
std::string_view to_string(Format f);

/// Shortest round-trip representation of a double.
std::string format_double(double v);
/// Strict parse of a whole token; throws Io on failure.
double parse_double(std::string_view token);

void write_volume(std::ostream& out, const PhaseVolume& v, Format f);
PhaseVolume read_volume(std::istream& in, Format f);

/// Named numeric columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
void write_table(std::ostream& out, const Table& t, Format f);
Table read_table(std::istream& in, Format f);

/// Opens `path` for writing (creating parent directories), runs `body`, and reports
/// failures as Io errors naming the path.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);
std::string read_file(const std::filesystem::path& path);

}  // namespace shearcst::io
