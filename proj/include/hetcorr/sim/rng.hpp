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

#include <cstdint>
#include <limits>

namespace hetcorr::sim {

/// What a random stream is used for. Each purpose gets its own key so that,
/// for instance, fading draws never shift geometry draws.
enum class Stream : std::uint64_t {
    PointCount = 1,
    Radius = 2,
    Direction = 3,
    Fading = 4,
    Bootstrap = 5,
};

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Key for the stream (master_seed, trial, purpose, tier).
std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t trial, Stream purpose,
                         std::uint64_t tier = 0) noexcept;

/// Counter-based generator: output i of a stream is mix64(key + (i + 1) * golden).
///
/// Draw i is reachable directly through at(i), which lets callers address a
/// draw by (point, slot) without consuming a sequence. Also models
/// UniformRandomBitGenerator for use with <random> distributions.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return at(counter_++); }

    result_type at(std::uint64_t index) const noexcept
    {
        return mix64(key_ + (index + 1) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on the open interval (0, 1).
    double uniform_at(std::uint64_t index) const noexcept
    {
        return (static_cast<double>(at(index) >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform() noexcept { return uniform_at(counter_++); }

    /// Unit-mean exponential, strictly positive.
    double exponential_at(std::uint64_t index) const noexcept;

    std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Counter index of the fading draw for (point, slot). Slots are capped at 2^20.
constexpr std::uint64_t fading_index(std::uint64_t point, std::uint64_t slot) noexcept
{
    return (point << 20) | slot;
}

inline constexpr std::uint64_t kMaxSlots = std::uint64_t{1} << 20;

} // namespace hetcorr::sim
