#pragma once

// Grid file, plain text:
//   # wigner v1
//   # x_min x_max nx
//   # p_min p_max np
//   # norm <value>
// then np rows of nx space-separated values (row = fixed p ascending,
// column = x ascending). The JSON variant carries the same fields with
// `values` as an array of rows.

#include <string>

#include "catsim/wigner.hpp"

namespace catsim {

enum class GridFormat { Text, Json };

std::string grid_to_text(const WignerGrid& grid);
std::string grid_to_json(const WignerGrid& grid);

/// Parses either format. Throws InvalidArgument on malformed input.
WignerGrid grid_from_string(const std::string& text);

/// Writes the grid; throws Error when the file cannot be written.
void write_grid(const WignerGrid& grid, const std::string& path, GridFormat format = GridFormat::Text);
WignerGrid read_grid(const std::string& path);

/// make_grid followed by write_grid.
WignerGrid emit_grid(const WignerSource& source, const GridWindow& window, const std::string& path,
                     GridFormat format = GridFormat::Text);

} // namespace catsim
