#pragma once

// Point-set text format:
//
//   b m s t P
//   <digits of x_1> <digits of x_2> ... <digits of x_s>
//   ...                                   (b^m point lines)
//
// Digits are written most significant first, '0'-'9' then 'a'-'z'. Lines
// starting with '#' and blank lines are ignored. Several point sets may be
// concatenated in one stream.

#include "walshnet/nets.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace walshnet {

void write_point_set(std::ostream& out, const PointSet& points);
std::string format_point_set(const PointSet& points);

/// Reads exactly one point set; throws FormatError on malformed input.
PointSet read_point_set(std::istream& in);
PointSet parse_point_set(const std::string& text);

/// Reads point sets until end of stream.
std::vector<PointSet> read_point_sets(std::istream& in);

PointSet load_point_set(const std::string& path);
void save_point_set(const std::string& path, const PointSet& points);

/// One point from space-separated digit strings, e.g. "0100 1000".
DigitPoint parse_digit_point(int base, const std::string& text);

}  // namespace walshnet
