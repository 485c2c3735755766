// SPDX-License-Identifier: Apache-2.0
//
// hetcorr: interference and link-success correlation in K-tier cellular networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hetcorr::sim {

/// Runs body(i, state) for i in [0, count) over `workers` threads, each with a
/// private state from make_state(). Workers own contiguous blocks; results
/// must be written per index so the outcome does not depend on scheduling.
template <class MakeState, class Body>
void parallel_for_trials(std::int64_t count, int workers, MakeState make_state, Body body)
{
    workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, std::max<std::int64_t>(count, 1)));
    if (workers == 1) {
        auto state = make_state();
        for (std::int64_t i = 0; i < count; ++i) body(i, state);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            const std::int64_t begin = count * w / workers;
            const std::int64_t end = count * (w + 1) / workers;
            pool.emplace_back([&, begin, end] {
                try {
                    auto state = make_state();
                    for (std::int64_t i = begin; i < end; ++i) body(i, state);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace hetcorr::sim
