// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded random streams. Every consumer draws from its own
 * std::mt19937_64, seeded from (seed, purpose) through std::seed_seq, so
 * adding draws to one stream never shifts another. The helpers below avoid
 * the standard distributions, whose algorithms differ between library
 * implementations, to keep outputs byte-identical across toolchains.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace equivar {

using Rng = std::mt19937_64;

enum class Stream : std::uint32_t {
    Init = 1,
    Batch = 2,
    Spsa = 3,
    Validation = 4,
    Check = 5,
    Data = 6,
};

inline Rng make_stream(std::uint64_t seed, Stream purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(purpose)};
    return Rng(seq);
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform on {0, …, n−1}; n must be positive.
inline std::size_t uniform_index(Rng &rng, std::size_t n) {
    return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
}

inline double rademacher(Rng &rng) { return (rng() >> 63) != 0 ? 1.0 : -1.0; }

inline bool bernoulli(Rng &rng, double p) { return uniform01(rng) < p; }

} // namespace equivar
