#ifndef SCLAB_CONFIG_HPP
#define SCLAB_CONFIG_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sclab/errors.hpp"

namespace sclab {

/// Parsed key=value config with [section] headers. '#' starts a comment.
/// Keys are stored as "section.key"; values keep their raw text.
struct ConfigFile {
    std::map<std::string, std::string> entries;

    bool has(const std::string& key) const { return entries.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = entries.find(key);
        return it == entries.end() ? fallback : it->second;
    }

    double get_double(const std::string& key, double fallback) const {
        auto it = entries.find(key);
        if (it == entries.end()) return fallback;
        try {
            std::size_t pos = 0;
            double v = std::stod(it->second, &pos);
            if (pos != it->second.size()) throw ConfigError("trailing junk");
            return v;
        } catch (...) {
            throw ConfigError("config: key '" + key + "' is not a number: '" + it->second + "'");
        }
    }

    long get_int(const std::string& key, long fallback) const {
        auto it = entries.find(key);
        if (it == entries.end()) return fallback;
        try {
            std::size_t pos = 0;
            long v = std::stol(it->second, &pos);
            if (pos != it->second.size()) throw ConfigError("trailing junk");
            return v;
        } catch (...) {
            throw ConfigError("config: key '" + key + "' is not an integer: '" + it->second + "'");
        }
    }

    std::vector<double> get_list(const std::string& key) const {
        std::vector<double> out;
        auto it = entries.find(key);
        if (it == entries.end()) return out;
        std::istringstream iss(it->second);
        std::string tok;
        while (iss >> tok) {
            try {
                out.push_back(std::stod(tok));
            } catch (...) {
                throw ConfigError("config: list '" + key + "' has a non-numeric entry '" + tok + "'");
            }
        }
        return out;
    }
};

namespace detail {
inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace detail

inline ConfigFile parse_config_text(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section header");
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        std::string full = section.empty() ? key : section + "." + key;
        if (cfg.entries.count(full))
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + full + "'");
        cfg.entries[full] = val;
    }
    return cfg;
}

inline ConfigFile parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace sclab

#endif  // SCLAB_CONFIG_HPP
