#include "mergegram/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "mergegram/error.hpp"

namespace mergegram::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

struct Row {
  std::size_t line;
  std::vector<std::string_view> fields;
};

/// Non-blank, non-comment lines split on commas.
std::vector<Row> rows(std::string_view text) {
  std::vector<Row> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto content = trim(text.substr(pos, end - pos));
    ++line;
    pos = end + 1;
    if (content.empty() || content.front() == '#') continue;
    Row row{line, {}};
    std::size_t start = 0;
    for (;;) {
      const auto comma = content.find(',', start);
      row.fields.push_back(trim(content.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

double parse_real(std::string_view field, std::size_t line, bool allow_inf = false) {
  if (allow_inf && (field == "inf" || field == "+inf" || field == "Inf" || field == "infinity")) {
    return std::numeric_limits<double>::infinity();
  }
  std::string_view digits = field;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
      !std::isfinite(value)) {
    fail(line, "not a finite number: '" + std::string(field) + "'");
  }
  return value;
}

long long parse_integer(std::string_view field, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    fail(line, "not an integer: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_real(double x, int precision) {
  if (x == std::numeric_limits<double>::infinity()) return "inf";
  if (x == -std::numeric_limits<double>::infinity()) return "-inf";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  const auto result = precision <= 0
                          ? std::to_chars(buf, buf + sizeof buf, x)
                          : std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                                          precision);
  return std::string(buf, result.ptr);
}

PointCloud parse_cloud_csv(std::string_view text) {
  const auto table = rows(text);
  if (table.empty()) throw Error("empty input");
  const std::size_t dim = table.front().fields.size();
  std::vector<double> coords;
  coords.reserve(table.size() * dim);
  for (const Row& row : table) {
    if (row.fields.size() != dim) {
      fail(row.line, "expected " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(row.fields.size()));
    }
    for (auto field : row.fields) coords.push_back(parse_real(field, row.line));
  }
  return PointCloud(dim, std::move(coords));
}

std::string write_cloud_csv(const PointCloud& cloud, int precision) {
  std::string out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out += ',';
      out += format_real(p[k], precision);
    }
    out += '\n';
  }
  return out;
}

DistanceMatrix parse_matrix_csv(std::string_view text) {
  const auto table = rows(text);
  if (table.empty()) throw Error("empty input");
  const std::size_t n = table.size();
  std::vector<double> d;
  d.reserve(n * n);
  for (const Row& row : table) {
    if (row.fields.size() != n) {
      fail(row.line, "expected " + std::to_string(n) + " entries, got " +
                         std::to_string(row.fields.size()));
    }
    for (auto field : row.fields) {
      const double v = parse_real(field, row.line);
      if (v < 0.0) fail(row.line, "negative distance");
      d.push_back(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i * n + i] != 0.0) fail(table[i].line, "nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (d[i * n + j] != d[j * n + i]) {
        fail(table[i].line, "matrix is not symmetric at column " + std::to_string(j + 1));
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

std::string write_matrix_csv(const DistanceMatrix& matrix, int precision) {
  std::string out;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (j > 0) out += ',';
      out += format_real(matrix(i, j), precision);
    }
    out += '\n';
  }
  return out;
}

Diagram parse_diagram_csv(std::string_view text) {
  const auto table = rows(text);
  if (table.empty()) throw Error("missing diagram header");
  const auto& header = table.front();
  if (header.fields.size() != 3 || header.fields[0] != "birth" || header.fields[1] != "death" ||
      header.fields[2] != "multiplicity") {
    fail(header.line, "expected header 'birth,death,multiplicity'");
  }
  Diagram out;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const Row& row = table[r];
    if (row.fields.size() != 3) fail(row.line, "expected 3 fields");
    const double birth = parse_real(row.fields[0], row.line);
    const double death = parse_real(row.fields[1], row.line, true);
    const long long mult = parse_integer(row.fields[2], row.line);
    if (mult <= 0) fail(row.line, "multiplicity must be positive");
    try {
      out.add({birth, death}, static_cast<std::size_t>(mult));
    } catch (const Error& e) {
      fail(row.line, e.what());
    }
  }
  return out;
}

std::string write_diagram_csv(const Diagram& diagram, int precision) {
  std::string out = "birth,death,multiplicity\n";
  for (const auto& [dot, mult] : diagram) {
    out += format_real(dot.birth, precision);
    out += ',';
    out += format_real(dot.death, precision);
    out += ',';
    out += std::to_string(mult);
    out += '\n';
  }
  return out;
}

std::string write_diagram_json(const Diagram& diagram, int precision) {
  // Numbers go through format_real so the JSON honours the same precision.
  auto number = [&](double x) { return nlohmann::json::parse(format_real(x, precision)); };
  nlohmann::json dots = nlohmann::json::array();
  for (const auto& [dot, mult] : diagram) {
    dots.push_back({number(dot.birth),
                    dot.is_infinite() ? nlohmann::json("inf") : number(dot.death), mult});
  }
  return nlohmann::json{{"dots", dots}}.dump() + "\n";
}

std::string write_mst_csv(const Mst& mst, int precision) {
  std::string out;
  for (const Edge& e : mst.edges) {
    out += std::to_string(e.u) + ',' + std::to_string(e.v) + ',' +
           format_real(e.length, precision) + '\n';
  }
  out += "total," + format_real(mst.total_length(), precision) + '\n';
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace mergegram::io
