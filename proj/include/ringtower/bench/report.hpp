#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ringtower::bench {

/// FNV-1a, 64-bit.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

/// Hash of the canonical text form of a result.
inline std::string text_fingerprint(std::string_view canonical) { return hex64(fnv1a64(canonical)); }

struct BenchReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // in CLI order
    double seconds = 0;
    std::string fingerprint;
    bool oracle_checked = false;
    /// meaningful only when oracle_checked
    bool oracle_ok = true;
    std::string detail;

    const std::string* param(const std::string& key) const {
        for (const auto& [k, v] : params)
            if (k == key) return &v;
        return nullptr;
    }
};

inline nlohmann::ordered_json to_json(const BenchReport& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["params"] = params;
    j["seconds"] = r.seconds;
    j["fingerprint"] = r.fingerprint;
    j["oracle_checked"] = r.oracle_checked;
    return j;
}

inline BenchReport report_from_json(const nlohmann::ordered_json& j) {
    BenchReport r;
    r.name = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    r.seconds = j.at("seconds").get<double>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.oracle_checked = j.at("oracle_checked").get<bool>();
    return r;
}

namespace report_detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace report_detail

inline std::string csv_header() { return "name,params,seconds,fingerprint,oracle_checked"; }

/// One CSV row; params are packed as k=v pairs joined by ';'.
inline std::string to_csv_row(const BenchReport& r) {
    std::string ps;
    for (const auto& [k, v] : r.params) {
        if (!ps.empty()) ps += ';';
        ps += k + "=" + v;
    }
    std::ostringstream sec;
    sec << std::setprecision(17) << r.seconds;
    return report_detail::csv_field(r.name) + "," + report_detail::csv_field(ps) + "," + sec.str() + "," +
           report_detail::csv_field(r.fingerprint) + "," + (r.oracle_checked ? "true" : "false");
}

inline BenchReport report_from_csv_row(const std::string& line) {
    auto f = report_detail::csv_split(line);
    if (f.size() != 5) throw std::runtime_error("malformed report row");
    BenchReport r;
    r.name = f[0];
    std::size_t start = 0;
    while (start < f[1].size()) {
        std::size_t end = f[1].find(';', start);
        if (end == std::string::npos) end = f[1].size();
        std::string kv = f[1].substr(start, end - start);
        std::size_t eq = kv.find('=');
        r.params.emplace_back(kv.substr(0, eq), eq == std::string::npos ? "" : kv.substr(eq + 1));
        start = end + 1;
    }
    r.seconds = std::stod(f[2]);
    r.fingerprint = f[3];
    r.oracle_checked = f[4] == "true";
    return r;
}

inline std::string to_text(const BenchReport& r) {
    std::ostringstream os;
    os << r.name;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << ": fingerprint " << r.fingerprint << ", " << std::fixed << std::setprecision(3) << r.seconds << " s";
    if (r.oracle_checked) os << ", oracle " << (r.oracle_ok ? "ok" : "MISMATCH");
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    return os.str();
}

} // namespace ringtower::bench
