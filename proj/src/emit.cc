// Copyright 2026 The ggkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ggkp/emit.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ggkp/errors.h"

namespace ggkp {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double failed.");
    }
    return std::string(buf, ptr);
}

GridTable grid_table(const std::vector<GridSample> &samples) {
    GridTable t;
    t.rows.reserve(samples.size());
    for (const auto &s : samples) {
        t.rows.push_back({s.x, s.k, s.value.real(), s.value.imag(), std::abs(s.value)});
    }
    return t;
}

std::string to_csv(const GridTable &table) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); c++) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            if (c) {
                out += ',';
            }
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(sep, start);
        parts.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

}  // namespace

GridTable parse_csv(std::string_view text) {
    GridTable t;
    auto lines = split(text, '\n');
    if (lines.empty() || lines.back() != "") {
        throw ConfigError("CSV must end with a newline.");
    }
    lines.pop_back();
    if (lines.empty()) {
        throw ConfigError("CSV is missing its header.");
    }
    auto header = split(lines[0], ',');
    if (header.size() != 5) {
        throw ConfigError("CSV header must have five columns.");
    }
    for (size_t c = 0; c < 5; c++) {
        t.columns[c] = std::string(header[c]);
    }
    for (size_t i = 1; i < lines.size(); i++) {
        auto cells = split(lines[i], ',');
        if (cells.size() != 5) {
            throw ConfigError("CSV row " + std::to_string(i) + " does not have five columns.");
        }
        std::array<double, 5> row{};
        for (size_t c = 0; c < 5; c++) {
            auto [ptr, ec] = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), row[c]);
            if (ec != std::errc() || ptr != cells[c].data() + cells[c].size()) {
                throw ConfigError("CSV row " + std::to_string(i) + " has a malformed number.");
            }
        }
        t.rows.push_back(row);
    }
    return t;
}

std::string to_json(const GridTable &table, const nlohmann::json &metadata) {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    return doc.dump(2) + "\n";
}

std::string to_pgm(const GridTable &table, int64_t width, int64_t height) {
    if (width < 1 || height < 1 || static_cast<size_t>(width * height) != table.rows.size()) {
        throw DomainError("PGM dimensions do not match the table.");
    }
    double lo = table.rows.front()[4];
    double hi = lo;
    for (const auto &row : table.rows) {
        lo = std::min(lo, row[4]);
        hi = std::max(hi, row[4]);
    }
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
    out.reserve(out.size() + 2 * table.rows.size());
    for (const auto &row : table.rows) {
        double u = hi > lo ? (row[4] - lo) / (hi - lo) : 0.0;
        auto level = static_cast<uint16_t>(std::lround(u * 65535.0));
        out += static_cast<char>(level >> 8);
        out += static_cast<char>(level & 0xFF);
    }
    return out;
}

void write_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("Cannot open '" + path + "' for writing.");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("Failed writing '" + path + "'.");
    }
}

}  // namespace ggkp
