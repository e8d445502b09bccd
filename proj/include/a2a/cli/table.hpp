// SPDX-License-Identifier: Apache-2.0
//
// a2a-pathloss: low-altitude air-to-air mmWave path loss modelling
// Copyright (C) 2026 The a2a-pathloss authors
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

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace a2a::cli
{

inline constexpr int schema_version = 1;

enum class OutputFormat
{
    csv,
    json
};

inline OutputFormat parse_output_format(std::string_view tag)
{
    if (tag == "csv")
        return OutputFormat::csv;
    if (tag == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + std::string(tag) + "' (expected csv or json)");
}

// A table cell: number, integer, text or boolean. NaN numbers are written as
// empty CSV fields and JSON nulls.
using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw std::logic_error("Table: row width does not match the column count");
        rows.push_back(std::move(row));
    }

    std::size_t column_index(std::string_view name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        throw std::out_of_range("Table: no column '" + std::string(name) + "'");
    }
};

// Shortest round-trip decimal form; identical on every run.
inline std::string format_number(double x)
{
    if (std::isnan(x))
        return {};
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

// RFC 4180 quoting: fields containing a comma, quote or line break are quoted
// and embedded quotes doubled.
inline std::string csv_escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (const char c : field)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string cell_text(const Cell &cell)
{
    return std::visit([](const auto &v) -> std::string
                      {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
            return format_number(v);
        else if constexpr (std::is_same_v<T, std::int64_t>)
            return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>)
            return v ? "true" : "false";
        else
            return v; },
                      cell);
}

inline nlohmann::ordered_json cell_json(const Cell &cell)
{
    return std::visit([](const auto &v) -> nlohmann::ordered_json
                      {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
        {
            if (!std::isfinite(v))
                return nullptr;
            return v;
        }
        else
            return v; },
                      cell);
}

inline void write_csv(std::ostream &os, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(table.columns[i]);
    os << '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
    }
}

inline nlohmann::ordered_json records_json(const Table &table)
{
    auto records = nlohmann::ordered_json::array();
    for (const auto &row : table.rows)
    {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            rec[table.columns[i]] = cell_json(row[i]);
        records.push_back(std::move(rec));
    }
    return records;
}

// {"schema_version": 1, "kind": ..., "records": [...]} plus optional extra fields.
inline nlohmann::ordered_json table_document(std::string_view kind, const Table &table,
                                             const nlohmann::ordered_json &extra = nlohmann::ordered_json::object())
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = schema_version;
    doc["kind"] = kind;
    for (const auto &[key, value] : extra.items())
        doc[key] = value;
    doc["records"] = records_json(table);
    return doc;
}

inline void write_table(std::ostream &os, std::string_view kind, const Table &table, OutputFormat format,
                        const nlohmann::ordered_json &extra = nlohmann::ordered_json::object())
{
    if (format == OutputFormat::csv)
        write_csv(os, table);
    else
        os << table_document(kind, table, extra).dump(2) << '\n';
}

} // namespace a2a::cli
