#include "walshnet/pointset_io.hpp"

#include "walshnet/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace walshnet {

void write_point_set(std::ostream& out, const PointSet& points) {
  out << points.base() << ' ' << points.m() << ' ' << points.dimension() << ' ' << points.claimed_t() << ' '
      << points.precision() << '\n';
  for (const auto& p : points) {
    for (int j = 0; j < p.dimension(); ++j) {
      if (j) out << ' ';
      out << coordinate_to_string(p.coordinate(j));
    }
    out << '\n';
  }
}

std::string format_point_set(const PointSet& points) {
  std::ostringstream out;
  write_point_set(out, points);
  return out.str();
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

DigitPoint parse_point_line(int base, int s, int precision, const std::string& line) {
  std::istringstream fields(line);
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(s) * precision);
  std::string token;
  int count = 0;
  while (fields >> token) {
    auto coord = coordinate_from_string(base, token);
    if (static_cast<int>(coord.size()) != precision)
      throw FormatError("coordinate '" + token + "' has " + std::to_string(coord.size()) + " digits, expected " +
                        std::to_string(precision));
    digits.insert(digits.end(), coord.begin(), coord.end());
    ++count;
  }
  if (count != s) throw FormatError("point line has " + std::to_string(count) + " coordinates, expected " + std::to_string(s));
  return DigitPoint(base, s, precision, std::move(digits));
}

std::optional<PointSet> try_read(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) return std::nullopt;
  std::istringstream header(line);
  int b, m, s, t, precision;
  if (!(header >> b >> m >> s >> t >> precision)) throw FormatError("malformed header line '" + line + "'");
  if (b < 2 || b > kMaxBase || m < 0 || s < 1 || precision < 1) throw FormatError("header values out of range: '" + line + "'");
  long n = 1;
  for (int i = 0; i < m; ++i) n *= b;
  std::vector<DigitPoint> points;
  points.reserve(n);
  for (long i = 0; i < n; ++i) {
    if (!next_content_line(in, line))
      throw FormatError("expected " + std::to_string(n) + " points, found " + std::to_string(i));
    points.push_back(parse_point_line(b, s, precision, line));
  }
  try {
    return PointSet(b, m, s, t, std::move(points));
  } catch (const ConfigError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  auto p = try_read(in);
  if (!p) throw FormatError("no point set in input");
  return std::move(*p);
}

PointSet parse_point_set(const std::string& text) {
  std::istringstream in(text);
  return read_point_set(in);
}

std::vector<PointSet> read_point_sets(std::istream& in) {
  std::vector<PointSet> out;
  while (auto p = try_read(in)) out.push_back(std::move(*p));
  return out;
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_point_set(in);
}

void save_point_set(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_point_set(out, points);
}

DigitPoint parse_digit_point(int base, const std::string& text) {
  std::istringstream fields(text);
  std::vector<std::vector<Digit>> coords;
  std::string token;
  while (fields >> token) coords.push_back(coordinate_from_string(base, token));
  if (coords.empty()) throw FormatError("empty point");
  try {
    return DigitPoint(base, std::move(coords));
  } catch (const ConfigError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace walshnet
