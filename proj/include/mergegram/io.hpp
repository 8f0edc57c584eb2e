#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mergegram/diagram.hpp"
#include "mergegram/metric.hpp"
#include "mergegram/mst.hpp"

namespace mergegram::io {

/// Decimal text for a real. precision <= 0 gives the shortest string that
/// parses back to the same double; otherwise that many significant digits.
/// Infinity is written as `inf`.
std::string format_real(double x, int precision = 0);

/// One point per line, comma-separated coordinates, `#` comment lines.
PointCloud parse_cloud_csv(std::string_view text);
std::string write_cloud_csv(const PointCloud& cloud, int precision = 0);

/// n lines of n comma-separated reals.
DistanceMatrix parse_matrix_csv(std::string_view text);
std::string write_matrix_csv(const DistanceMatrix& matrix, int precision = 0);

/// Header `birth,death,multiplicity`, rows in (birth, death) order, `inf`
/// for infinite deaths.
Diagram parse_diagram_csv(std::string_view text);
std::string write_diagram_csv(const Diagram& diagram, int precision = 0);

/// {"dots": [[birth, death | "inf", multiplicity], ...]}
std::string write_diagram_json(const Diagram& diagram, int precision = 0);

/// `u,v,length` per edge followed by `total,<sum>`.
std::string write_mst_csv(const Mst& mst, int precision = 0);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mergegram::io
