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

#ifndef GGKP_EMIT_H
#define GGKP_EMIT_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggkp/zak.h"

namespace ggkp {

/// Shortest decimal that round-trips to the same double (at most 17 significant digits).
std::string format_double(double v);

/// Five-column numeric table behind the CSV and JSON grid formats.
struct GridTable {
    std::array<std::string, 5> columns{"x", "k", "re", "im", "abs"};
    std::vector<std::array<double, 5>> rows;
};

GridTable grid_table(const std::vector<GridSample> &samples);

/// Header line then one row per sample, comma separated, LF endings.
std::string to_csv(const GridTable &table);
/// Inverse of to_csv. Throws ConfigError on malformed input.
GridTable parse_csv(std::string_view text);

/// JSON document {"metadata": ..., "columns": [...], "rows": [[...], ...]}.
std::string to_json(const GridTable &table, const nlohmann::json &metadata);

/// Binary 16-bit PGM (P5, maxval 65535, big-endian) of the `abs` column,
/// min-max normalized; row r holds samples r*width .. r*width + width - 1.
std::string to_pgm(const GridTable &table, int64_t width, int64_t height);

/// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string &path, std::string_view content);

}  // namespace ggkp

#endif
