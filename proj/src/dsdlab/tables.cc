// Copyright 2026 The dsdlab Authors
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

#include "dsdlab/tables.h"

#include <algorithm>
#include <sstream>

#include "dsdlab/counting.h"
#include "dsdlab/error.h"
#include "dsdlab/json_io.h"

namespace dsdlab {

TableFormat parse_table_format(const std::string &name) {
    if (name == "csv") {
        return TableFormat::Csv;
    }
    if (name == "json") {
        return TableFormat::Json;
    }
    if (name == "text") {
        return TableFormat::Text;
    }
    throw DsdError(ErrorCode::InvalidArgument, "unknown format '" + name + "' (csv, json, text)");
}

namespace {

std::vector<std::vector<std::string>> table_cells(uint32_t q, uint32_t max_n, bool star) {
    std::vector<std::vector<std::string>> rows;
    for (uint32_t n = 0; n <= max_n; n++) {
        std::vector<std::string> row;
        for (uint32_t m = 0; m <= n; m++) {
            row.push_back(format_bigint(star ? dsd_count_star(q, n, m) : dsd_count(q, n, m)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string count_table(uint32_t q, uint32_t max_n, bool star, TableFormat format) {
    const auto rows = table_cells(q, max_n, star);
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv: {
            out << "n\\m";
            for (uint32_t m = 0; m <= max_n; m++) {
                out << ',' << m;
            }
            out << '\n';
            for (uint32_t n = 0; n <= max_n; n++) {
                out << n;
                for (uint32_t m = 0; m <= max_n; m++) {
                    out << ',';
                    if (m <= n) {
                        out << rows[n][m];
                    }
                }
                out << '\n';
            }
            break;
        }
        case TableFormat::Json: {
            Json table_rows = Json::array();
            for (uint32_t n = 0; n <= max_n; n++) {
                const BigInt total = star ? dsd_total_star(q, n) : dsd_total(q, n);
                table_rows.push_back(Json{{"n", n}, {"counts", rows[n]}, {"total", format_bigint(total)}});
            }
            out << Json{{"q", q}, {"star", star}, {"rows", table_rows}}.dump() << '\n';
            break;
        }
        case TableFormat::Text: {
            size_t width = std::to_string(max_n).size();
            for (const auto &row : rows) {
                for (const auto &cell : row) {
                    width = std::max(width, cell.size());
                }
            }
            const size_t label = std::max<size_t>(3, std::to_string(max_n).size());
            out << std::string(label - 3, ' ') << "n\\m";
            for (uint32_t m = 0; m <= max_n; m++) {
                const std::string h = std::to_string(m);
                out << ' ' << std::string(width - h.size(), ' ') << h;
            }
            out << '\n';
            for (uint32_t n = 0; n <= max_n; n++) {
                const std::string h = std::to_string(n);
                out << std::string(label - h.size(), ' ') << h;
                for (const auto &cell : rows[n]) {
                    out << ' ' << std::string(width - cell.size(), ' ') << cell;
                }
                out << '\n';
            }
            break;
        }
    }
    return out.str();
}

const std::vector<std::string> &oeis_ids() {
    static const std::vector<std::string> ids = {"A053601", "A270880", "A270881", "A270882", "A270883"};
    return ids;
}

std::vector<BigInt> oeis_terms(const std::string &id, uint32_t max_n) {
    std::vector<BigInt> terms;
    if (id == "A270880" || id == "A270882") {
        const bool star = id == "A270882";
        for (uint32_t n = 1; n <= max_n; n++) {
            for (uint32_t m = 1; m <= n; m++) {
                terms.push_back(star ? dsd_count_star(2, n, m) : dsd_count(2, n, m));
            }
        }
    } else if (id == "A270881" || id == "A270883" || id == "A053601") {
        for (uint32_t n = 0; n <= max_n; n++) {
            if (id == "A270881") {
                terms.push_back(dsd_total(2, n));
            } else if (id == "A270883") {
                terms.push_back(dsd_total_star(2, n));
            } else {
                terms.push_back(basis_count(2, n));
            }
        }
    } else {
        throw DsdError(ErrorCode::InvalidArgument, "unknown OEIS id '" + id + "'");
    }
    return terms;
}

std::string oeis_line(const std::string &id, uint32_t max_n) {
    std::string out;
    for (const auto &t : oeis_terms(id, max_n)) {
        out += (out.empty() ? "" : ", ") + format_bigint(t);
    }
    return out;
}

}  // namespace dsdlab
