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
#include "grover_ite/csv.hpp"

#include <charconv>
#include <sstream>

#include "grover_ite/error.hpp"

namespace grover_ite {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CsvTable::Row CsvTable::row() {
    rows_.emplace_back();
    rows_.back().reserve(columns_.size());
    return Row(rows_.back());
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == name) return i;
    }
    fail(ErrorCode::ConfigInvalid, "no column '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::string_view column_name) const {
    const std::string& cell = rows_.at(row).at(column(column_name));
    double v = 0.0;
    std::from_chars(cell.data(), cell.data() + cell.size(), v);
    return v;
}

void CsvTable::write(std::ostream& out, std::string_view comment) const {
    out << "# " << comment << '\n';
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(columns_);
    for (const auto& r : rows_) line(r);
}

std::string CsvTable::to_string(std::string_view comment) const {
    std::ostringstream os;
    write(os, comment);
    return os.str();
}

}  // namespace grover_ite
