#include "bp/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bp {

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        cfg.sections_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s != sections_.end()) {
        const auto k = s->second.find(key);
        if (k != s->second.end()) return k->second;
    }
    throw std::runtime_error("config: missing [" + section + "] " + key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? std::stod(get(section, key)) : fallback;
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
    return has(section, key) ? std::stoi(get(section, key)) : fallback;
}

uint64_t Config::get_u64(const std::string& section, const std::string& key,
                         uint64_t fallback) const {
    return has(section, key) ? std::stoull(get(section, key)) : fallback;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: bad boolean for [" + section + "] " + key + ": " + v);
}

std::vector<std::string> Config::get_list(const std::string& section,
                                          const std::string& key) const {
    std::vector<std::string> out;
    if (!has(section, key)) return out;
    std::istringstream ss(get(section, key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
    std::vector<double> out;
    for (const std::string& s : get_list(section, key)) out.push_back(std::stod(s));
    return out;
}

void write_manifest(const std::string& path, const RunManifest& m,
                    const std::map<std::string, std::string>& extra) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "command = " << m.command << '\n';
    out << "config = " << m.config_path << '\n';
    out << "seed = " << m.seed << '\n';
    out << "out_dir = " << m.out_dir << '\n';
    out << "tool_version = " << m.tool_version << '\n';
    out << "timestamp = " << m.timestamp << '\n';
    for (const auto& [k, v] : extra) out << k << " = " << v << '\n';
}

}  // namespace bp
