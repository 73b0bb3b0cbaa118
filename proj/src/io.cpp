// SPDX-License-Identifier: Apache-2.0
#include "qec/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qec {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // try shorter forms that still round-trip
    for (int prec = 1; prec < 17; ++prec) {
        char probe[40];
        std::snprintf(probe, sizeof probe, "%.*g", prec, x);
        if (std::strtod(probe, nullptr) == x) return probe;
    }
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::string text;
    auto append_row = [&text](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) text += ',';
            text += cells[i];
        }
        text += '\n';
    };
    append_row(header);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_csv: row width does not match header");
        append_row(row);
    }
    write_text_file(path, text);
}

std::vector<std::string> gain_record_header() {
    return {"model", "param", "r_phys", "seed", "sample", "level",
            "r_raw", "r_twirled", "delta", "class"};
}

std::vector<std::string> gain_record_row(const GainRecord& rec) {
    return {rec.model,
            fmt_double(rec.param),
            fmt_double(rec.r_phys),
            std::to_string(rec.seed),
            std::to_string(rec.sample),
            std::to_string(rec.level),
            fmt_double(rec.r_raw),
            fmt_double(rec.r_twirled),
            fmt_double(rec.delta),
            to_string(rec.classification)};
}

void write_manifest(const std::string& path, const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["config"] = nlohmann::json::parse(m.config_json.empty() ? "{}" : m.config_json);
    j["seed"] = m.seed;
    j["workers"] = m.workers;
    j["version"] = m.version;
    j["wall_time_s"] = m.wall_time_s;
    j["outputs"] = m.outputs;
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace qec
