// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qec/logical_channel.hpp"

namespace qec {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest round-trippable decimal form of x (%.17g trimmed).
std::string fmt_double(double x);

void write_text_file(const std::string& path, const std::string& content);

/// CSV with a header row; all rows must match the header's column count.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::vector<std::string> gain_record_header();
std::vector<std::string> gain_record_row(const GainRecord& rec);

/// Manifest fields every command records alongside its CSV output.
struct RunManifest {
    std::string command;
    std::string config_json;  // resolved option values, JSON object text
    uint64_t seed = 0;
    int workers = 1;
    std::string version;
    double wall_time_s = 0.0;
    std::vector<std::string> outputs;
};

void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace qec
