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

#ifndef DSDLAB_TESTS_ORACLE_Z2_LISTS_H
#define DSDLAB_TESTS_ORACLE_Z2_LISTS_H

#include <array>
#include <string_view>

// Hand-transcribed tables for GF(2)^3 in letter notation (a = 100, ac = 101),
// kept in their printed order, misprints included.
namespace dsdlab::oracle::z2 {

inline constexpr std::array<std::string_view, 28> kMaximal = {
    "{a,b,c}",    "{a,b,ac}",   "{a,b,bc}",   "{a,b,abc}",  "{a,c,ab}",   "{a,c,bc}",    "{a,c,abc}",
    "{a,ab,ac}",  "{a,ab,bc}",  "{a,ab,abc}", "{a,ac,bc}",  "{a,ac,abc}", "{b,c,ab}",    "{b,c,ac}",
    "{b,c,abc}",  "{b,ab,ac}",  "{b,ab,bc}",  "{b,ab,abc}", "{b,ac,bc}",  "{b,bc,abc}",  "{c,ab,ac}",
    "{c,ab,bc}",  "{c,ac,bc}",  "{c,ac,abc}", "{ab,ac,abc}", "{ab,bc,abc}", "{ac,bc,abc}", "{bc,ab,abc}",
};

inline constexpr std::array<std::string_view, 28> kAtomic = {
    "{{a},{b,c,bc}}",     "{{a},{ab,ac,bc}}",   "{{a},{c,ab,abc}}",   "{{a},{b,ac,abc}}",
    "{{b},{a,c,ac}}",     "{{b},{ab,ac,bc}}",   "{{b},{c,ab,abc}}",   "{{b},{a,bc,abc}}",
    "{{ab},{b,c,bc}}",    "{{ab},{a,bc,abc}}",  "{{ab},{b,ac,abc}}",  "{{ab},{a,c,ac}}",
    "{{c},{a,b,ab}}",     "{{c},{ab,ac,bc}}",   "{{c},{a,bc,abc}}",   "{{c},{b,ac,abc}}",
    "{{ac},{a,b,ab}}",    "{{ac},{a,bc,abc}}",  "{{ac},{c,ab,abc}}",  "{{ac},{b,c,bc}}",
    "{{bc},{a,b,ab}}",    "{{bc},{b,ac,abc}}",  "{{bc},{c,ab,abc}}",  "{{bc},{a,c,ac}}",
    "{{abc},{a,b,ab}}",   "{{abc},{b,c,bc}}",   "{{abc},{a,c,ac}}",   "{{abc},{ab,ac,bc}}",
};

// Two blocks, one containing ab.
inline constexpr std::array<std::string_view, 16> kTwoBlockWithAb = {
    "{{ab},{b,c,bc}}",  "{{ab},{a,bc,abc}}", "{{ab},{b,ac,abc}}", "{{ab},{a,c,ac}}",
    "{{c},{a,b,ab}}",   "{{c},{ab,ac,bc}}",  "{{ac},{c,ab,abc}}", "{{bc},{c,ab,abc}}",
    "{{ac},{a,b,ab}}",  "{{a},{ab,ac,bc}}",  "{{a},{c,ab,abc}}",  "{{abc},{a,b,ab}}",
    "{{bc},{a,b,ab}}",  "{{b},{ab,ac,bc}}",  "{{b},{c,ab,abc}}",  "{{abc},{ab,ac,bc}}",
};

// Bases containing abc.
inline constexpr std::array<std::string_view, 12> kBasesWithAbc = {
    "{a,b,abc}",  "{b,ab,abc}",  "{a,c,abc}",   "{b,bc,abc}",  "{a,ab,abc}",  "{a,ac,abc}",
    "{b,c,abc}",  "{c,ac,abc}",  "{ab,ac,abc}", "{ab,bc,abc}", "{ac,bc,abc}", "{bc,ab,abc}",
};

// The two basis tables print {ab,bc,abc} twice and never list this one.
inline constexpr std::string_view kMissingBasis = "{c,bc,abc}";

// Atoms below the basis {a,ac,bc}, and the bases above the atom {{ac},{a,bc,abc}}.
inline constexpr std::array<std::string_view, 3> kAtomsBelowAAcBc = {
    "{{a},{ab,ac,bc}}", "{{bc},{a,c,ac}}", "{{ac},{a,bc,abc}}"};
inline constexpr std::array<std::string_view, 3> kMaximalAboveAc = {"{a,ac,bc}", "{a,ac,abc}", "{ac,bc,abc}"};

}  // namespace dsdlab::oracle::z2

#endif
