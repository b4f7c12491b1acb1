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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace distinguon {

/// splitmix64 (Steele/Lea/Vigna). Chosen over std::mt19937_64 because the
/// whole sequence is pinned by two constants, states are cheap to derive
/// per stream, and the output is identical on every platform. All sampling
/// and matrix generation in this library goes through this generator, so a
/// seed fully determines every artifact.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return finalize(state_ += kGamma); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log argument.
    double uniform_open() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// One standard normal deviate (Box-Muller; one of the pair is kept
    /// in reserve so consecutive calls alternate cheap/expensive).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Standard complex normal: independent N(0, 1/2) real and imaginary
    /// parts, so E|z|^2 = 1.
    std::complex<double> gaussian_complex() {
        const double r = std::sqrt(-std::log(uniform_open()));
        const double t = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Derives the generator for sub-stream `index` of a master seed. Used for
/// per-shot sampling streams so shots can be drawn in any order (or in
/// parallel) without changing the result.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(SplitMix64::finalize(seed + (index + 1) * SplitMix64::kGamma));
}

}  // namespace distinguon
