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

#include "dsdlab/numeric.h"

#include <cctype>

#include "dsdlab/error.h"

namespace dsdlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt parse_natural(std::string_view s, std::string_view whole) {
    if (!all_digits(s)) {
        throw DsdError(ErrorCode::Parse, "not a rational number: '" + std::string(whole) + "'");
    }
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
        body.remove_suffix(1);
    }
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_natural(body.substr(0, slash), text);
        BigInt den = parse_natural(body.substr(slash + 1), text);
        if (den == 0) {
            throw DsdError(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        }
        result = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw DsdError(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
        }
        BigInt w = whole.empty() ? BigInt(0) : parse_natural(whole, text);
        BigInt f = frac.empty() ? BigInt(0) : parse_natural(frac, text);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        result = Rational(w * scale + f, scale);
    } else {
        result = Rational(parse_natural(body, text));
    }
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational &value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string format_bigint(const BigInt &value) {
    return value.str();
}

}  // namespace dsdlab
