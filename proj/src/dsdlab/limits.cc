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

#include "dsdlab/limits.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "dsdlab/error.h"

extern char **environ;

namespace dsdlab {

namespace {

constexpr uint32_t kDefaultCeilingQ2 = 5;
constexpr uint32_t kDefaultCeilingOther = 3;
constexpr const char *kEnvPrefix = "DSDLAB_CEILING_Q";

}  // namespace

Limits Limits::defaults() {
    return Limits{};
}

Limits Limits::from_environment() {
    Limits limits;
    const size_t prefix_len = std::strlen(kEnvPrefix);
    for (char **env = environ; env != nullptr && *env != nullptr; env++) {
        const char *entry = *env;
        if (std::strncmp(entry, kEnvPrefix, prefix_len) != 0) {
            continue;
        }
        const char *eq = std::strchr(entry, '=');
        if (eq == nullptr) {
            continue;
        }
        char *end = nullptr;
        unsigned long q = std::strtoul(entry + prefix_len, &end, 10);
        if (end != eq || q < 2) {
            continue;
        }
        unsigned long n = std::strtoul(eq + 1, &end, 10);
        if (*end != '\0' || eq[1] == '\0' || n < 1) {
            continue;
        }
        limits.set_ceiling(static_cast<uint32_t>(q), static_cast<uint32_t>(n));
    }
    return limits;
}

Limits Limits::unbounded() {
    Limits limits;
    limits.unbounded_ = true;
    return limits;
}

uint32_t Limits::ceiling(uint32_t q) const {
    if (unbounded_) {
        return UINT32_MAX;
    }
    if (auto it = overrides_.find(q); it != overrides_.end()) {
        return it->second;
    }
    return q == 2 ? kDefaultCeilingQ2 : kDefaultCeilingOther;
}

void Limits::set_ceiling(uint32_t q, uint32_t n) {
    if (n < 1) {
        throw DsdError(ErrorCode::InvalidArgument, "enumeration ceilings must be >= 1");
    }
    overrides_[q] = n;
}

bool Limits::allows(const FieldParam &field) const {
    return field.n <= ceiling(field.q);
}

void Limits::check(const FieldParam &field, const char *operation) const {
    if (!allows(field)) {
        throw DsdError(ErrorCode::CeilingExceeded,
                       std::string(operation) + " over " + field.str() + " exceeds the enumeration ceiling n <= " +
                           std::to_string(ceiling(field.q)) + " (set DSDLAB_CEILING_Q" + std::to_string(field.q) +
                           " or pass --force)");
    }
}

}  // namespace dsdlab
