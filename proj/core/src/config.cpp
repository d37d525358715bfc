#include "fraclab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>

namespace fraclab {

namespace {

std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

int parse_int(const std::string& value, const std::string& key, int line) {
    int out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError(key + ": expected an integer, got '" + value + "'", line);
    return out;
}

double parse_real(const std::string& value, const std::string& key, int line) {
    double out = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError(key + ": expected a number, got '" + value + "'", line);
    return out;
}

}  // namespace

RunConfig RunConfig::parse(std::istream& is) {
    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "cutoff") {
            cfg.cutoff = parse_int(value, key, line_no);
            if (cfg.cutoff < 2)
                throw ConfigError("cutoff must be >= 2", line_no);
        } else if (key == "pair_cutoff") {
            const int k = parse_int(value, key, line_no);
            if (k < 2)
                throw ConfigError("pair_cutoff must be >= 2", line_no);
            cfg.pair_cutoff_override = k;
        } else if (key == "margin") {
            cfg.margin = parse_int(value, key, line_no);
            if (cfg.margin < 0)
                throw ConfigError("margin must be >= 0", line_no);
        } else if (key == "step") {
            cfg.step = parse_real(value, key, line_no);
            if (!(cfg.step > 0.0))
                throw ConfigError("step must be > 0", line_no);
        } else if (key == "rk4_steps") {
            cfg.rk4_steps = parse_int(value, key, line_no);
            if (cfg.rk4_steps < 16)
                throw ConfigError("rk4_steps must be >= 16", line_no);
        } else if (key == "tolerance_scale") {
            cfg.tolerance_scale = parse_real(value, key, line_no);
            if (!(cfg.tolerance_scale > 0.0))
                throw ConfigError("tolerance_scale must be > 0", line_no);
        } else if (key == "report_path") {
            cfg.report_path = value;
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw ConfigError("cannot open '" + path + "'", 0);
    return parse(is);
}

}  // namespace fraclab
