/*
* Copyright 2026 the gpaley authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef GPALEY_PARALLEL_HPP
#define GPALEY_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gpaley {

/// Runs fn(i) for i in [0, n) on a pool of `jobs` threads (0 = hardware
/// concurrency).  Work is claimed from an atomic counter; the first
/// exception is rethrown on the caller after all workers join.  Callers
/// write results into preallocated slots, so output order is deterministic
/// regardless of scheduling.
template <typename Fn>
void parallel_for(long long n, int jobs, Fn&& fn) {
    if (n <= 0) return;
    unsigned width = jobs > 0 ? static_cast<unsigned>(jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
    if (width == 1 || n == 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < width && static_cast<long long>(t) < n; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace gpaley

#endif
