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

#include <cstddef>
#include <vector>

namespace hetcorr {

/// One tier of base stations. All quantities are linear (no dB).
struct TierParams {
    double density = 1.0;   ///< BS intensity per unit d-volume
    double power = 1.0;     ///< transmit power
    double threshold = 1.0; ///< SIR threshold

    bool operator==(const TierParams&) const = default;
};

/// K-tier network plus propagation constants.
///
/// `epsilon == 0` selects the singular path loss |x|^-alpha; `epsilon > 0`
/// selects the bounded law 1 / (|x|^alpha + epsilon).
struct NetworkModel {
    std::vector<TierParams> tiers;
    double alpha = 4.0;
    int dimension = 2;
    double epsilon = 0.0;

    std::size_t tier_count() const noexcept { return tiers.size(); }
    bool bounded() const noexcept { return epsilon > 0.0; }

    bool operator==(const NetworkModel&) const = default;
};

/// First and second moments of the fading power coefficient h.
struct FadingMoments {
    double mean = 1.0;
    double second_moment = 2.0;

    static FadingMoments rayleigh() noexcept { return {1.0, 2.0}; }
    static FadingMoments deterministic() noexcept { return {1.0, 1.0}; }

    bool operator==(const FadingMoments&) const = default;
};

/// Smallest and largest stability index accepted by sinc-dependent operations.
inline constexpr double kMinDelta = 1e-6;
inline constexpr double kMaxDelta = 1.0 - 1e-6;

void validate(const TierParams& tier);
void validate(const NetworkModel& model);
void validate(const FadingMoments& fading);

/// Volume of the d-dimensional unit ball for d in {1, 2, 3}.
double unit_ball_volume(int dimension);

/// delta = d / alpha. Throws DomainError unless alpha > d.
double delta(const NetworkModel& model);

/// True when any tier threshold is <= 1, where several BSs may clear their
/// thresholds in the same slot and the closed forms become approximations.
bool approximate_regime(const NetworkModel& model) noexcept;

/// Linear <-> dB conversion for thresholds and powers.
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

} // namespace hetcorr
