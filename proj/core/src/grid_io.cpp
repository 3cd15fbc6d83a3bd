#include "catsim/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catsim/error.hpp"

namespace catsim {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check_shape(const WignerGrid& g) {
  g.window.validate();
  if (g.values.size() != static_cast<std::size_t>(g.window.nx) * g.window.np)
    throw InvalidArgument("grid: value count does not match nx * np");
}

WignerGrid from_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("grid: invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "wigner v1")
      throw InvalidArgument("grid: unsupported format");
    WignerGrid g;
    g.window = {j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("nx").get<int>(),
                j.at("p_min").get<double>(), j.at("p_max").get<double>(), j.at("np").get<int>()};
    for (const auto& row : j.at("values")) {
      if (row.size() != static_cast<std::size_t>(g.window.nx))
        throw InvalidArgument("grid: row length does not match nx");
      for (const auto& v : row)
        g.values.push_back(v.get<double>());
    }
    check_shape(g);
    return g;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("grid: ") + e.what());
  }
}

WignerGrid from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto header = [&](const char* what) {
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
      throw InvalidArgument(std::string("grid: missing header line ") + what);
    return std::istringstream(line.substr(2));
  };
  {
    auto h = header("'wigner v1'");
    std::string a, b;
    h >> a >> b;
    if (a != "wigner" || b != "v1")
      throw InvalidArgument("grid: unsupported format");
  }
  WignerGrid g;
  {
    auto h = header("x_min x_max nx");
    if (!(h >> g.window.x_min >> g.window.x_max >> g.window.nx))
      throw InvalidArgument("grid: malformed x header");
  }
  {
    auto h = header("p_min p_max np");
    if (!(h >> g.window.p_min >> g.window.p_max >> g.window.np))
      throw InvalidArgument("grid: malformed p header");
  }
  {
    auto h = header("norm");
    std::string key;
    double norm = 0.0;
    if (!(h >> key >> norm) || key != "norm")
      throw InvalidArgument("grid: malformed norm header");
  }
  g.window.validate();
  double v = 0.0;
  while (in >> v)
    g.values.push_back(v);
  if (!in.eof())
    throw InvalidArgument("grid: non-numeric value");
  check_shape(g);
  return g;
}

} // namespace

std::string grid_to_text(const WignerGrid& grid) {
  check_shape(grid);
  const GridWindow& w = grid.window;
  std::string out = "# wigner v1\n";
  out += "# " + num(w.x_min) + ' ' + num(w.x_max) + ' ' + std::to_string(w.nx) + '\n';
  out += "# " + num(w.p_min) + ' ' + num(w.p_max) + ' ' + std::to_string(w.np) + '\n';
  out += "# norm " + num(grid.norm()) + '\n';
  for (int j = 0; j < w.np; ++j) {
    for (int i = 0; i < w.nx; ++i) {
      if (i > 0)
        out += ' ';
      out += num(grid.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string grid_to_json(const WignerGrid& grid) {
  check_shape(grid);
  using nlohmann::json;
  const GridWindow& w = grid.window;
  json rows = json::array();
  for (int j = 0; j < w.np; ++j) {
    json row = json::array();
    for (int i = 0; i < w.nx; ++i)
      row.push_back(grid.at(i, j));
    rows.push_back(std::move(row));
  }
  const json out = {{"format", "wigner v1"}, {"x_min", w.x_min}, {"x_max", w.x_max}, {"nx", w.nx},
                    {"p_min", w.p_min},      {"p_max", w.p_max}, {"np", w.np},     {"norm", grid.norm()},
                    {"values", rows}};
  return out.dump() + '\n';
}

WignerGrid grid_from_string(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return from_json(text);
  return from_text(text);
}

void write_grid(const WignerGrid& grid, const std::string& path, GridFormat format) {
  const std::string body = format == GridFormat::Json ? grid_to_json(grid) : grid_to_text(grid);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("write_grid: cannot open " + path);
  out << body;
  if (!out)
    throw Error("write_grid: write failed for " + path);
}

WignerGrid read_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("read_grid: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return grid_from_string(ss.str());
}

WignerGrid emit_grid(const WignerSource& source, const GridWindow& window, const std::string& path,
                     GridFormat format) {
  WignerGrid grid = make_grid(source, window);
  write_grid(grid, path, format);
  return grid;
}

} // namespace catsim
