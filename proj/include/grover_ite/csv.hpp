// Copyright 2026 The grover-ite-lab Authors
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
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace grover_ite {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Plot-ready table: one comment line, a header row, then data rows.
class CsvTable {
public:
    CsvTable() = default;
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    class Row {
    public:
        Row& add(double v) { return push(format_double(v)); }
        Row& add(std::int64_t v) { return push(std::to_string(v)); }
        Row& add(int v) { return push(std::to_string(v)); }
        Row& add(std::string_view v) { return push(std::string(v)); }
        Row& add(const char* v) { return push(std::string(v)); }

    private:
        friend class CsvTable;
        explicit Row(std::vector<std::string>& cells) : cells_(cells) {}
        Row& push(std::string cell) {
            cells_.push_back(std::move(cell));
            return *this;
        }
        std::vector<std::string>& cells_;
    };

    Row row();

    /// Column lookup by name; throws ConfigInvalid when absent.
    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::string_view column_name) const;

    void write(std::ostream& out, std::string_view comment) const;
    std::string to_string(std::string_view comment) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace grover_ite
