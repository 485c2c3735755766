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

#include "hetcorr/corrmath/model.hpp"

#include <cstdint>

namespace hetcorr::sim {

enum class FadingModel {
    Rayleigh,      ///< unit-mean exponential power
    Deterministic, ///< h = 1
};

FadingMoments moments_of(FadingModel fading) noexcept;

/// Monte Carlo plan. A zero window radius means "derive from the model".
struct SimPlan {
    double window_radius = 0.0;
    std::int64_t trials = 100000;
    std::int64_t slots = 1;
    std::uint64_t master_seed = 1;
    int parallelism = 1;
    FadingModel fading = FadingModel::Rayleigh;
    /// Add the mean interference from BSs outside the window to every slot.
    bool tail_correction = true;

    bool operator==(const SimPlan&) const = default;
};

void validate(const SimPlan& plan);

/// Default window radius.
///
/// Singular path loss: 30 * (max_k lambda_k)^(-1/d). Bounded path loss: the
/// smallest radius (to 1%) whose truncated share of the mean interference is
/// below 1e-3, plus `max_separation` so a displaced receiver sees the same field.
double default_window_radius(const NetworkModel& model, double max_separation = 0.0);

/// Copy of `plan` with every derived field materialized.
SimPlan resolve(const NetworkModel& model, SimPlan plan, double max_separation = 0.0);

/// Mean interference (per unit E[h]) from BSs beyond `radius`, summed over tiers.
double tail_interference(const NetworkModel& model, double radius);

} // namespace hetcorr::sim
