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

#include <acfenv/io/table_writer.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace acfenv::io
{

std::string format_shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace
{

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quote_if_needed(const std::string &s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string format_cell(const Cell &cell)
{
    if (const auto *d = std::get_if<double>(&cell))
        return format_number(*d);
    return std::get<std::string>(cell);
}

std::string render_csv(const Table &table, const std::vector<std::string> &comments,
                       const std::vector<std::string> &trailer_comments)
{
    std::string out;
    for (const auto &c : comments)
        out += "# " + c + "\n";

    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out += (i ? "," : "") + table.columns[i];
    out += "\n";

    for (const auto &row : table.rows)
    {
        if (row.size() != table.columns.size())
            throw std::logic_error("CSV row width does not match header.");
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ",";
            out += std::holds_alternative<std::string>(row[i]) ? quote_if_needed(std::get<std::string>(row[i]))
                                                                : format_cell(row[i]);
        }
        out += "\n";
    }

    for (const auto &c : trailer_comments)
        out += "# " + c + "\n";
    return out;
}

nlohmann::json table_to_json(const Table &table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows)
    {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
        {
            if (const auto *d = std::get_if<double>(&row[i]))
                obj[table.columns[i]] = std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(nullptr);
            else
                obj[table.columns[i]] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents)
{
    std::error_code ec;
    if (path.has_parent_path())
    {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw std::runtime_error("Cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("Cannot open " + tmp.string() + " for writing.");
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!f)
            throw std::runtime_error("Write to " + tmp.string() + " failed.");
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("Cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

} // namespace acfenv::io
