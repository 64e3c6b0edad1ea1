/*
 * Copyright 2026 The kmnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace kmnet
{

// Seeding and sampling here avoid every implementation-defined part of
// <random>: mt19937_64 output and seed_seq are fully specified, and doubles
// are built from the top 53 bits, so sequences are identical across
// platforms for a given (seed, stream).

inline uint64_t splitmix64(uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Substream `stream` of `seed`; Monte Carlo trial k draws from stream k.
std::mt19937_64 make_stream(uint64_t seed, uint64_t stream);

/// Uniform double in [0, 1).
inline double uniform01(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& g, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(g);
}

// Index of the first cumulative weight exceeding u; cum must end at ~1.
int sample_cumulative(const std::vector<double>& cum, double u);

}  // namespace kmnet
