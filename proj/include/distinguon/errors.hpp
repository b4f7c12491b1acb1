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

#include <stdexcept>
#include <string>

namespace distinguon {

/// Bad user input: shape mismatches, broken invariants, out-of-range values.
/// Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A size/cost cap was exceeded (basis too large, matrix too big for the
/// permanent kernel, integer overflow in exact arithmetic). CLI exit code 2.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Internal consistency failure (a quantity that is non-negative by
/// construction came out significantly negative, etc.). Indicates a bug,
/// not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string &msg) : std::logic_error(msg) {}
};

}  // namespace distinguon
