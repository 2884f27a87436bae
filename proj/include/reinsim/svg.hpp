#pragma once

#include <string>
#include <vector>

#include "reinsim/csv.hpp"

namespace reinsim {

// Render a standalone SVG 1.1 line chart: one polyline per y column against
// x_col, with axes and a legend. Output is deterministic for identical tables.
std::string render_svg(const CsvTable& table, const std::string& x_col,
                       const std::vector<std::string>& y_cols);

void emit_svg(const CsvTable& table, const std::string& x_col,
              const std::vector<std::string>& y_cols, const std::string& path);

} // namespace reinsim
