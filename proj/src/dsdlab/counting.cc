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

#include "dsdlab/counting.h"

#include <cassert>

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

void check_q(uint32_t q) {
    if (q < 1) {
        throw DsdError(ErrorCode::InvalidArgument, "q must be >= 1");
    }
}

BigInt factorial(uint32_t n) {
    BigInt r = 1;
    for (uint32_t i = 2; i <= n; i++) {
        r *= i;
    }
    return r;
}

BigInt exact_quotient(const BigInt &num, const BigInt &den) {
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) {
        throw DsdError(ErrorCode::InvalidArgument, "non-integral count " + num.str() + "/" + den.str());
    }
    return quot;
}

void check_signature(const Signature &sig) {
    uint64_t weighted = 0;
    for (size_t k = 0; k < sig.parts.size(); k++) {
        weighted += uint64_t{sig.parts[k]} * (k + 1);
    }
    if (weighted != sig.parts.size()) {
        throw DsdError(ErrorCode::InvalidArgument,
                       "signature " + sig.str() + " has weight " + std::to_string(weighted) + ", expected n=" +
                           std::to_string(sig.parts.size()));
    }
}

void partitions_desc(uint32_t remaining, uint32_t max_part, std::vector<uint32_t> &prefix,
                     std::vector<std::vector<uint32_t>> &out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (uint32_t part = std::min(remaining, max_part); part >= 1; part--) {
        prefix.push_back(part);
        partitions_desc(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

uint32_t Signature::n() const {
    return static_cast<uint32_t>(parts.size());
}

uint32_t Signature::blocks() const {
    uint32_t m = 0;
    for (uint32_t a : parts) {
        m += a;
    }
    return m;
}

std::string Signature::str() const {
    std::string out = "(";
    for (size_t k = 0; k < parts.size(); k++) {
        out += (k ? "," : "") + std::to_string(parts[k]);
    }
    return out + ")";
}

BigInt q_int(uint32_t n, uint32_t q) {
    check_q(q);
    BigInt r = 0;
    BigInt power = 1;
    for (uint32_t i = 0; i < n; i++) {
        r += power;
        power *= q;
    }
    return r;
}

BigInt q_factorial(uint32_t n, uint32_t q) {
    BigInt r = 1;
    for (uint32_t i = 1; i <= n; i++) {
        r *= q_int(i, q);
    }
    return r;
}

BigInt q_binomial(uint32_t n, uint32_t k, uint32_t q) {
    check_q(q);
    if (k > n) {
        return 0;
    }
    return exact_quotient(q_factorial(n, q), q_factorial(k, q) * q_factorial(n - k, q));
}

std::vector<Signature> signatures(uint32_t n, std::optional<uint32_t> m) {
    std::vector<std::vector<uint32_t>> parts_lists;
    std::vector<uint32_t> prefix;
    partitions_desc(n, n, prefix, parts_lists);
    std::vector<Signature> out;
    for (const auto &parts : parts_lists) {
        if (m.has_value() && parts.size() != *m) {
            continue;
        }
        Signature sig{std::vector<uint32_t>(n, 0)};
        for (uint32_t p : parts) {
            sig.parts[p - 1]++;
        }
        out.push_back(std::move(sig));
    }
    return out;
}

BigInt count_signature(uint32_t q, const Signature &sig) {
    check_q(q);
    check_signature(sig);
    const uint32_t n = sig.n();
    BigInt denominator = 1;
    uint64_t square_sum = 0;
    for (uint32_t k = 1; k <= n; k++) {
        const uint32_t a = sig.parts[k - 1];
        if (a == 0) {
            continue;
        }
        denominator *= factorial(a) * boost::multiprecision::pow(q_factorial(k, q), a);
        square_sum += uint64_t{a} * k * k;
    }
    const uint64_t twice_exponent = uint64_t{n} * n - square_sum;
    // n^2 and sum a_k k^2 share the parity of n.
    assert(twice_exponent % 2 == 0);
    BigInt numerator = q_factorial(n, q) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(twice_exponent / 2));
    return exact_quotient(numerator, denominator);
}

BigInt dsd_count(uint32_t q, uint32_t n, uint32_t m) {
    check_q(q);
    BigInt total = 0;
    for (const auto &sig : signatures(n, m)) {
        total += count_signature(q, sig);
    }
    return total;
}

BigInt dsd_total(uint32_t q, uint32_t n) {
    check_q(q);
    BigInt total = 0;
    for (const auto &sig : signatures(n)) {
        total += count_signature(q, sig);
    }
    return total;
}

BigInt dsd_count_star(uint32_t q, uint32_t n, uint32_t m) {
    check_q(q);
    if (n == 0) {
        return m == 0 ? 1 : 0;
    }
    if (m == 0) {
        return 0;
    }
    BigInt total = 0;
    for (uint32_t k = 0; k < n; k++) {
        total += q_binomial(n - 1, k, q) * boost::multiprecision::pow(BigInt(q), k * (n - k)) * dsd_count(q, k, m - 1);
    }
    return total;
}

BigInt dsd_total_star(uint32_t q, uint32_t n) {
    check_q(q);
    if (n == 0) {
        return 1;
    }
    BigInt total = 0;
    for (uint32_t k = 0; k < n; k++) {
        total += q_binomial(n - 1, k, q) * boost::multiprecision::pow(BigInt(q), k * (n - k)) * dsd_total(q, k);
    }
    return total;
}

BigInt basis_count(uint32_t q, uint32_t n) {
    check_q(q);
    BigInt numerator = q_factorial(n, q) * boost::multiprecision::pow(BigInt(q), n * (n - (n > 0 ? 1 : 0)) / 2) *
                       boost::multiprecision::pow(BigInt(q - 1), n);
    return exact_quotient(numerator, factorial(n));
}

RefiningCounts refining_counts(std::span<const uint32_t> dims, uint32_t q) {
    check_q(q);
    RefiningCounts out{1, 1};
    for (uint32_t d : dims) {
        out.maximal *= dsd_count(q, d, d);
        out.all *= dsd_total(q, d);
    }
    return out;
}

BigInt maximal_above_count(uint32_t q, uint32_t k, uint32_t n) {
    if (k == 0 || k >= n) {
        throw DsdError(ErrorCode::NotAnAtom, "an atom needs block dims 0 < k < n");
    }
    return dsd_count(q, k, k) * dsd_count(q, n - k, n - k);
}

BigInt stirling(uint32_t n, uint32_t m) {
    BigInt total = 0;
    const BigInt n_fact = factorial(n);
    for (const auto &sig : signatures(n, m)) {
        BigInt den = 1;
        for (uint32_t k = 1; k <= n; k++) {
            const uint32_t a = sig.parts[k - 1];
            if (a) {
                den *= factorial(a) * boost::multiprecision::pow(factorial(k), a);
            }
        }
        total += exact_quotient(n_fact, den);
    }
    return total;
}

BigInt bell(uint32_t n) {
    BigInt total = 0;
    for (uint32_t m = 0; m <= n; m++) {
        total += stirling(n, m);
    }
    return total;
}

BigInt knuth_stirling(uint32_t n, uint32_t m, uint32_t q) {
    check_q(q);
    // row[j] = {i, j}_q, advanced one i at a time.
    std::vector<BigInt> row(m + 1, 0);
    row[0] = 1;
    for (uint32_t i = 0; i < n; i++) {
        std::vector<BigInt> next(m + 1, 0);
        for (uint32_t j = 1; j <= m; j++) {
            next[j] = q_int(j, q) * row[j] + row[j - 1];
        }
        row = std::move(next);
    }
    return row[m];
}

}  // namespace dsdlab
