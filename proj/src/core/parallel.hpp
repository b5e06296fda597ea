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

#ifndef PARITYLAB_PARALLEL_HPP
#define PARITYLAB_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace paritylab {

// Runs fn(0..n-1) on a small worker pool; threads == 0 picks the hardware
// count. The first exception is rethrown on the calling thread. Bodies must
// not touch shared mutable state except through their own index.
inline void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& fn) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned k = static_cast<unsigned>(std::min<size_t>(threads, n));
    pool.reserve(k);
    for (unsigned i = 0; i < k; ++i)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace paritylab

#endif
