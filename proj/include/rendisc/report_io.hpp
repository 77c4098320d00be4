#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rendisc/analysis.hpp"

namespace rendisc {

enum class OutputFormat { csv, json };

inline const std::vector<std::string> kScalingHeader = {
    "n",      "f",       "seed",   "t_total",      "t_1A",       "t_1B",       "t_1C",
    "t_wave", "t_travel", "success", "leader_count", "blue_count", "pink_count", "boundary_count"};

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::ordered_json to_json_row(const ScalingRow& r) {
    return nlohmann::ordered_json{{"n", r.n},
                                  {"f", r.f},
                                  {"seed", r.seed},
                                  {"t_total", r.t_total},
                                  {"t_1A", r.t_1a},
                                  {"t_1B", r.t_1b},
                                  {"t_1C", r.t_1c},
                                  {"t_wave", r.t_wave},
                                  {"t_travel", r.t_travel},
                                  {"success", r.success},
                                  {"leader_count", r.leader_count},
                                  {"blue_count", r.blue_count},
                                  {"pink_count", r.pink_count},
                                  {"boundary_count", r.boundary_count}};
}

inline nlohmann::ordered_json to_json_rows(const std::vector<ScalingRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScalingRow& r : rows) arr.push_back(to_json_row(r));
    return arr;
}

inline std::string csv_field(const nlohmann::ordered_json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// rows: JSON array of objects sharing the header's keys. CSV gets one header
// line and one line per row; JSON gets the array dumped compactly. Both end
// with a newline and are byte-stable for identical inputs.
inline void emit_table(const nlohmann::ordered_json& rows, const std::vector<std::string>& header,
                       std::ostream& os, OutputFormat format) {
    if (format == OutputFormat::json) {
        os << rows.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 == header.size() ? '\n' : ',');
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << csv_field(row.at(header[i])) << (i + 1 == header.size() ? '\n' : ',');
    }
}

inline void emit_scaling(const std::vector<ScalingRow>& rows, std::ostream& os,
                         OutputFormat format) {
    emit_table(to_json_rows(rows), kScalingHeader, os, format);
}

// Round-trip reader for the scaling schema (either format).
inline std::vector<ScalingRow> read_scaling(std::istream& is, OutputFormat format) {
    std::vector<ScalingRow> rows;
    auto from_json = [](const nlohmann::json& j) {
        ScalingRow r;
        r.n = j.at("n").get<double>();
        r.f = j.at("f").get<std::int64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.t_total = j.at("t_total").get<double>();
        r.t_1a = j.at("t_1A").get<double>();
        r.t_1b = j.at("t_1B").get<double>();
        r.t_1c = j.at("t_1C").get<double>();
        r.t_wave = j.at("t_wave").get<double>();
        r.t_travel = j.at("t_travel").get<double>();
        r.success = j.at("success").get<bool>();
        r.leader_count = j.at("leader_count").get<int>();
        r.blue_count = j.at("blue_count").get<std::int64_t>();
        r.pink_count = j.at("pink_count").get<std::int64_t>();
        r.boundary_count = j.at("boundary_count").get<std::int64_t>();
        return r;
    };
    if (format == OutputFormat::json) {
        nlohmann::json arr;
        is >> arr;
        for (const auto& j : arr) rows.push_back(from_json(j));
        return rows;
    }
    std::string line;
    if (!std::getline(is, line)) return rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != kScalingHeader.size())
            throw std::runtime_error("bad scaling row: " + line);
        ScalingRow r;
        r.n = std::stod(fields[0]);
        r.f = std::stoll(fields[1]);
        r.seed = std::stoull(fields[2]);
        r.t_total = std::stod(fields[3]);
        r.t_1a = std::stod(fields[4]);
        r.t_1b = std::stod(fields[5]);
        r.t_1c = std::stod(fields[6]);
        r.t_wave = std::stod(fields[7]);
        r.t_travel = std::stod(fields[8]);
        r.success = fields[9] != "0";
        r.leader_count = std::stoi(fields[10]);
        r.blue_count = std::stoll(fields[11]);
        r.pink_count = std::stoll(fields[12]);
        r.boundary_count = std::stoll(fields[13]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace rendisc
