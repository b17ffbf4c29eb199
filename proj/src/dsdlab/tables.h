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

#ifndef DSDLAB_TABLES_H
#define DSDLAB_TABLES_H

#include <string>
#include <vector>

#include "dsdlab/numeric.h"

namespace dsdlab {

enum class TableFormat { Csv, Json, Text };

/// Parses "csv", "json" or "text"; throws InvalidArgument otherwise.
TableFormat parse_table_format(const std::string &name);

/// Rows n = 0..max_n, columns m = 0..max_n, of D_q(n, m) (or D*_q with star).
/// CSV has the header "n\m,0,1,..." and leaves cells with m > n empty. JSON
/// lists counts for m = 0..n plus the row total. All numbers are decimal.
std::string count_table(uint32_t q, uint32_t max_n, bool star, TableFormat format);

/// OEIS ids this tool knows how to emit.
const std::vector<std::string> &oeis_ids();

/// Terms of one sequence, computed for q = 2. Triangles A270880 and A270882
/// read rows n = 1..max_n, m = 1..n; the others list n = 0..max_n. Throws
/// InvalidArgument for an unknown id.
std::vector<BigInt> oeis_terms(const std::string &id, uint32_t max_n);

/// Terms joined with ", ".
std::string oeis_line(const std::string &id, uint32_t max_n);

}  // namespace dsdlab

#endif
