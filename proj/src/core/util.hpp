/*
 * Copyright 2026 the paritylab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARITYLAB_UTIL_HPP
#define PARITYLAB_UTIL_HPP

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace paritylab {

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

struct u32vec_hash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        return static_cast<size_t>(fnv1a64(v.data(), v.size() * sizeof(uint32_t)));
    }
};

// Deterministic 64-bit generator (splitmix64); used instead of std
// distributions so that seeded corpora are byte-stable across platforms.
struct rng64 {
    uint64_t state;

    explicit rng64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Rejection-free multiply-shift.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    uint64_t in_range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1ull) != 0; }
};

} // namespace paritylab

#endif
