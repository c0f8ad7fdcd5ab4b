#include "achull/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace achull {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<Point2> read_points(std::istream& in) {
    std::vector<Point2> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        Point2 p;
        if (!(ls >> p.x >> p.y)) {
            throw std::runtime_error("malformed point on line " + std::to_string(lineno));
        }
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point2> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_points(in);
}

void write_points(std::ostream& out, std::span<const Point2> pts) {
    for (const Point2& p : pts) {
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
}

SimplePolygon read_polygon_file(const std::string& path) {
    return SimplePolygon(read_points_file(path));
}

void write_polygon(std::ostream& out, const SimplePolygon& poly) {
    const auto& v = poly.vertices();
    std::size_t start = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[start]) start = i;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Point2& p = v[(start + k) % v.size()];
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
}

std::string polygon_to_string(const SimplePolygon& poly) {
    std::ostringstream os;
    write_polygon(os, poly);
    return os.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace achull
