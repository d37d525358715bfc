#include "fraclab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fraclab::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_polyline_csv(std::ostream& os, const Polyline& line) {
    os << "x,y\n";
    for (const Point& p : line)
        os << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

void write_polyline_svg(std::ostream& os, const Polyline& line) {
    if (line.size() < 2)
        throw std::invalid_argument("write_polyline_svg: polyline needs >= 2 points");

    double min_x = line[0].x, max_x = line[0].x;
    double min_y = -line[0].y, max_y = -line[0].y;
    for (const Point& p : line) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, -p.y);
        max_y = std::max(max_y, -p.y);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const double pad = 0.05 * extent;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << format_double(min_x - pad) << ' ' << format_double(min_y - pad) << ' '
       << format_double(max_x - min_x + 2.0 * pad) << ' '
       << format_double(max_y - min_y + 2.0 * pad) << "\">\n";
    os << "<path d=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
        os << (i == 0 ? "M" : " L") << format_double(line[i].x) << ' '
           << format_double(-line[i].y);
    }
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
       << format_double(0.005 * extent) << "\"/>\n";
    os << "</svg>\n";
}

namespace {

std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

double parse_field(const std::string& field, int line_no) {
    const std::string t = trim(field);
    double value = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw CsvError("not a number: '" + t + "'", line_no);
    return value;
}

}  // namespace

std::vector<std::pair<double, double>> read_theta_r_csv(std::istream& is) {
    std::string line;
    int line_no = 0;

    if (!std::getline(is, line))
        throw CsvError("empty input", 1);
    ++line_no;
    if (trim(line) != "theta,r")
        throw CsvError("expected header 'theta,r'", line_no);

    std::vector<std::pair<double, double>> rows;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw CsvError("expected exactly two comma-separated fields", line_no);
        rows.emplace_back(parse_field(line.substr(0, comma), line_no),
                          parse_field(line.substr(comma + 1), line_no));
    }
    return rows;
}

}  // namespace fraclab::io
