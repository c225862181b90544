#include "shearcst/io.hpp"

#include "shearcst/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace shearcst::io {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::ConfigInvalid, "unknown output format '" + std::string(name) + "'");
}

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) token.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw Error(ErrorCode::Io, "cannot parse number '" + std::string(token) + "'");
  return v;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

json grid_json(const UniformGrid& g) {
  return json{{"origin", g.origin}, {"step", g.step}, {"count", g.count}};
}

UniformGrid grid_from_json(const json& j) {
  return {j.at("origin").get<double>(), j.at("step").get<double>(), j.at("count").get<std::size_t>()};
}

}  // namespace

void write_volume(std::ostream& out, const PhaseVolume& v, Format f) {
  if (v.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty volume");
  const UniformGrid g1 = v.grid1(), g3 = v.grid3(), g2 = v.grid2();
  if (f == Format::json) {
    json doc;
    doc["grids"] = {{"x1", grid_json(g1)}, {"x3", grid_json(g3)}, {"x2", grid_json(g2)}};
    json slices = json::array();
    for (const auto& s : v.slices()) {
      std::vector<double> re(s.values.size()), im(s.values.size());
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        re[k] = s.values[k].real();
        im[k] = s.values[k].imag();
      }
      slices.push_back({{"x2", s.x2}, {"re", re}, {"im", im}});
    }
    doc["slices"] = std::move(slices);
    out << doc.dump() << '\n';
    return;
  }
  auto grid_line = [&](const char* axis, const UniformGrid& g) {
    out << "# grid " << axis << ' ' << format_double(g.origin) << ' ' << format_double(g.step) << ' ' << g.count
        << '\n';
  };
  grid_line("x1", g1);
  grid_line("x3", g3);
  grid_line("x2", g2);
  out << "x1,x3,re,im\n";
  for (const auto& s : v.slices()) {
    out << "# slice " << format_double(s.x2) << '\n';
    for (std::size_t i = 0; i < s.n1(); ++i)
      for (std::size_t j = 0; j < s.n3(); ++j) {
        const cplx z = s.at(i, j);
        out << format_double(s.grid1.at(i)) << ',' << format_double(s.grid3.at(j)) << ','
            << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
      }
  }
}

PhaseVolume read_volume(std::istream& in, Format f) {
  if (f == Format::json) {
    json doc;
    try {
      in >> doc;
      const UniformGrid g1 = grid_from_json(doc.at("grids").at("x1"));
      const UniformGrid g3 = grid_from_json(doc.at("grids").at("x3"));
      std::vector<PhaseSlice> slices;
      for (const auto& js : doc.at("slices")) {
        PhaseSlice s(g1, g3, js.at("x2").get<double>());
        const auto re = js.at("re").get<std::vector<double>>();
        const auto im = js.at("im").get<std::vector<double>>();
        if (re.size() != s.values.size() || im.size() != s.values.size())
          throw Error(ErrorCode::Io, "slice value count does not match its grid");
        for (std::size_t k = 0; k < re.size(); ++k) s.values[k] = {re[k], im[k]};
        slices.push_back(std::move(s));
      }
      return PhaseVolume(std::move(slices));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Io, std::string("malformed volume json: ") + e.what());
    }
  }
  UniformGrid g1, g3;
  bool have1 = false, have3 = false;
  std::vector<PhaseSlice> slices;
  std::size_t filled = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "x1,x3,re,im") continue;
    if (line.rfind("# grid ", 0) == 0) {
      const auto parts = split(std::string_view(line).substr(7), ' ');
      if (parts.size() != 4) throw Error(ErrorCode::Io, "bad grid header: " + line);
      const UniformGrid g{parse_double(parts[1]), parse_double(parts[2]),
                          static_cast<std::size_t>(parse_double(parts[3]))};
      if (parts[0] == "x1") g1 = g, have1 = true;
      if (parts[0] == "x3") g3 = g, have3 = true;
      continue;
    }
    if (line.rfind("# slice ", 0) == 0) {
      if (!have1 || !have3) throw Error(ErrorCode::Io, "slice before grid headers");
      if (!slices.empty() && filled != slices.back().values.size())
        throw Error(ErrorCode::Io, "incomplete slice in csv");
      slices.emplace_back(g1, g3, parse_double(std::string_view(line).substr(8)));
      filled = 0;
      continue;
    }
    if (line.front() == '#') continue;
    if (slices.empty()) throw Error(ErrorCode::Io, "data row before slice header");
    const auto parts = split(line, ',');
    if (parts.size() != 4) throw Error(ErrorCode::Io, "expected 4 columns: " + line);
    auto& s = slices.back();
    if (filled >= s.values.size()) throw Error(ErrorCode::Io, "too many rows in slice");
    s.values[filled++] = {parse_double(parts[2]), parse_double(parts[3])};
  }
  if (slices.empty() || filled != slices.back().values.size()) throw Error(ErrorCode::Io, "incomplete csv volume");
  return PhaseVolume(std::move(slices));
}

void write_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::json) {
    json doc;
    doc["columns"] = t.columns;
    doc["rows"] = t.rows;
    out << doc.dump() << '\n';
    return;
  }
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

Table read_table(std::istream& in, Format f) {
  Table t;
  if (f == Format::json) {
    try {
      json doc;
      in >> doc;
      t.columns = doc.at("columns").get<std::vector<std::string>>();
      t.rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Io, std::string("malformed table json: ") + e.what());
    }
    return t;
  }
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Io, "empty table");
  for (auto c : split(line, ',')) t.columns.emplace_back(c);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (auto tok : split(line, ',')) row.push_back(parse_double(tok));
    if (row.size() != t.columns.size()) throw Error(ErrorCode::Io, "row width differs from header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  body(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to " + path.string() + " failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace shearcst::io
