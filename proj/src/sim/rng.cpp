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

#include "hetcorr/sim/rng.hpp"

#include <cmath>

namespace hetcorr::sim {

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t trial, Stream purpose,
                         std::uint64_t tier) noexcept
{
    std::uint64_t k = mix64(master_seed ^ 0x6a09e667f3bcc909ULL);
    k = mix64(k + trial * 0x9e3779b97f4a7c15ULL);
    k = mix64(k ^ (static_cast<std::uint64_t>(purpose) * 0xd1b54a32d192ed03ULL));
    k = mix64(k + tier * 0x8cb92ba72f3d8dd7ULL);
    return k;
}

double CounterRng::exponential_at(std::uint64_t index) const noexcept
{
    return -std::log(uniform_at(index));
}

} // namespace hetcorr::sim
