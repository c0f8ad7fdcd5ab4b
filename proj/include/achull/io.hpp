#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "achull/geom.hpp"

namespace achull {

// Shortest decimal representation that round-trips the exact double value.
// Used for every emitted number so reruns are byte-identical.
std::string format_double(double v);

// Point files: UTF-8 text, one point per line as two decimal numbers
// separated by whitespace; lines starting with '#' (and blank lines) are
// ignored. Polygon files use the same format with vertices in boundary order.
std::vector<Point2> read_points(std::istream& in);
std::vector<Point2> read_points_file(const std::string& path);

void write_points(std::ostream& out, std::span<const Point2> pts);

SimplePolygon read_polygon_file(const std::string& path);

// Writes the cycle rotated to start at its lexicographically smallest vertex,
// so equal polygons print identically regardless of how they were produced.
void write_polygon(std::ostream& out, const SimplePolygon& poly);
std::string polygon_to_string(const SimplePolygon& poly);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace achull
