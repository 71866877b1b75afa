// Copyright 2026 The diqft Authors
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

#include "diqft/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace diqft {

std::size_t CsvTable::column(const std::string &name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw std::out_of_range("no CSV column named " + name);
    }
    return static_cast<std::size_t>(it - header.begin());
}

std::string CsvTable::to_string() const {
    std::string out;
    const auto append_row = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += cells[i];
        }
        out += '\n';
    };
    append_row(header);
    for (const auto &row : rows) {
        append_row(row);
    }
    return out;
}

void CsvTable::write(const std::filesystem::path &path) const {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << to_string();
}

std::string format_real(double value) {
    std::array<char, 64> buffer{};
    const auto result =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
    return {buffer.data(), result.ptr};
}

std::string format_count(std::uint64_t value) { return std::to_string(value); }

}  // namespace diqft
