#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bp {

/// Plain-text config: `[section]` headers, `key = value` lines, `#`
/// comments. Values are strings; typed getters parse on access.
/// Duplicate keys: last one wins.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    uint64_t get_u64(const std::string& section, const std::string& key, uint64_t fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    /// Comma-separated list value.
    std::vector<std::string> get_list(const std::string& section, const std::string& key) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Run provenance: written into every output directory.
struct RunManifest {
    std::string command;
    std::string config_path;
    uint64_t seed = 0;
    std::string out_dir;
    std::string tool_version;
    std::string timestamp;
};

void write_manifest(const std::string& path, const RunManifest& m,
                    const std::map<std::string, std::string>& extra = {});

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bp
