// Copyright 2026 The Distinguon Authors
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
#include <string>

#include "distinguon/errors.hpp"

namespace distinguon {

// Exact 128-bit counting arithmetic. Multiplicities, binomials and irrep
// dimensions are computed here and never rounded; genuine overflow raises
// SizeError instead of silently losing precision.
using uint128 = unsigned __int128;

inline uint128 checked_mul(uint128 a, uint128 b) {
    if (a != 0 && b > ~uint128{0} / a) {
        throw SizeError("exact integer arithmetic overflowed 128 bits");
    }
    return a * b;
}

inline std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline double to_double(uint128 v) {
    return static_cast<double>(v);
}

inline uint128 factorial_exact(int k) {
    if (k < 0) throw ValidationError("factorial of a negative number");
    uint128 r = 1;
    for (int i = 2; i <= k; ++i) r = checked_mul(r, static_cast<uint128>(i));
    return r;
}

/// C(a, b), exact. Zero when b < 0 or b > a.
inline uint128 binomial_exact(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    uint128 r = 1;
    for (int i = 1; i <= b; ++i) {
        r = checked_mul(r, static_cast<uint128>(a - b + i));
        r /= static_cast<uint128>(i);  // exact: r is C(a-b+i, i) at this point
    }
    return r;
}

}  // namespace distinguon
