// SPDX-License-Identifier: Apache-2.0
//
// acfenv: environment-dependent autocorrelation of mobile radio signals
// Copyright (C) 2026 The acfenv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ACFENV_IO_TABLE_WRITER_HPP
#define ACFENV_IO_TABLE_WRITER_HPP

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace acfenv::io
{

using Cell = std::variant<double, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest representation that round-trips ("0.1", "2.5").
std::string format_shortest(double v);

// 17 significant digits; "nan" / "inf" / "-inf" for non-finite values.
std::string format_cell(const Cell &cell);

// CSV: optional '#'-prefixed comment lines, a header row, ',' delimiter,
// LF endings. String cells containing ',', '"' or newlines are quoted.
std::string render_csv(const Table &table, const std::vector<std::string> &comments = {},
                       const std::vector<std::string> &trailer_comments = {});

// Array of row objects keyed by column name; non-finite numbers become null.
nlohmann::json table_to_json(const Table &table);

// Writes to "<path>.tmp" then renames over path. Creates parent directories.
// Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);

} // namespace acfenv::io

#endif
