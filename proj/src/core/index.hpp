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

#ifndef PARITYLAB_INDEX_HPP
#define PARITYLAB_INDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace paritylab {

using priority_t = uint32_t;

inline bool is_even(priority_t p) { return (p & 1u) == 0; }
inline bool is_odd(priority_t p) { return (p & 1u) == 1; }

// A contiguous, non-empty range [lo, hi] of priorities.
struct priority_index {
    priority_t lo = 0;
    priority_t hi = 0;

    priority_index() = default;
    priority_index(priority_t lo_, priority_t hi_) : lo(lo_), hi(hi_) {
        if (lo > hi)
            throw input_error("invalid priority index [" + std::to_string(lo_) + ", " +
                              std::to_string(hi_) + "]: lo > hi");
    }

    bool contains(priority_t p) const { return lo <= p && p <= hi; }
    uint32_t width() const { return hi - lo + 1; }

    std::vector<priority_t> odd_members() const {
        std::vector<priority_t> r;
        for (priority_t p = lo; p <= hi; ++p)
            if (is_odd(p))
                r.push_back(p);
        return r;
    }

    bool operator==(const priority_index&) const = default;

    std::string str() const { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }
};

} // namespace paritylab

#endif
