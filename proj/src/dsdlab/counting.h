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

#ifndef DSDLAB_COUNTING_H
#define DSDLAB_COUNTING_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsdlab/numeric.h"

namespace dsdlab {

/// Part-count vector of a number partition: parts[k - 1] = a_k, the number of
/// parts of size k, with sum of a_k * k = n.
struct Signature {
    std::vector<uint32_t> parts;

    uint32_t n() const;
    uint32_t blocks() const;
    std::string str() const;

    auto operator<=>(const Signature &) const = default;
};

// q-analogs. q >= 1; q = 1 gives the classical values.
BigInt q_int(uint32_t n, uint32_t q);
BigInt q_factorial(uint32_t n, uint32_t q);
/// Gaussian binomial; 0 when k > n.
BigInt q_binomial(uint32_t n, uint32_t k, uint32_t q);

/// All signatures of n (with exactly m blocks when m is given), ordered by
/// the partitions' part lists in descending lexicographic order: 3, 2+1, 1+1+1.
std::vector<Signature> signatures(uint32_t n, std::optional<uint32_t> m = std::nullopt);

/// Number of DSDs with the given signature:
/// [n]_q! / (prod a_k! ([k]_q!)^a_k) * q^((n^2 - sum a_k k^2) / 2).
BigInt count_signature(uint32_t q, const Signature &sig);

/// D_q(n, m) and D_q(n). D_q(0, 0) = 1 and D_q(0, m) = 0 for m > 0.
BigInt dsd_count(uint32_t q, uint32_t n, uint32_t m);
BigInt dsd_total(uint32_t q, uint32_t n);

/// D*_q(n, m) and D*_q(n): DSDs with a block containing a fixed nonzero vector.
/// The n = 0 row follows the same convention as D (1 at m = 0).
BigInt dsd_count_star(uint32_t q, uint32_t n, uint32_t m);
BigInt dsd_total_star(uint32_t q, uint32_t n);

/// Number of unordered bases of GF(q)^n, [n]_q! q^C(n,2) (q-1)^n / n!.
BigInt basis_count(uint32_t q, uint32_t n);

struct RefiningCounts {
    BigInt maximal;
    BigInt all;
};

/// Counts of maximal DSDs / all DSDs refining a DSD with the given block dims.
RefiningCounts refining_counts(std::span<const uint32_t> dims, uint32_t q);

/// Maximal DSDs above a two-block DSD with block dims k and n - k.
BigInt maximal_above_count(uint32_t q, uint32_t k, uint32_t n);

/// Stirling numbers of the second kind and Bell numbers, evaluated with the
/// direct sums over signatures.
BigInt stirling(uint32_t n, uint32_t m);
BigInt bell(uint32_t n);

/// Knuth's q-recurrence {n+1, m}_q = [m]_q {n, m}_q + {n, m-1}_q, {0, m}_q = δ_0m.
BigInt knuth_stirling(uint32_t n, uint32_t m, uint32_t q);

}  // namespace dsdlab

#endif
