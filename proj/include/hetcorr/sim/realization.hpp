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
#include "hetcorr/sim/plan.hpp"
#include "hetcorr/sim/rng.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hetcorr::sim {

using Location = std::array<double, 3>; ///< unused trailing coordinates are zero

struct BasePoint {
    Location location{};
    std::size_t tier = 0;

    double norm() const noexcept
    {
        return std::sqrt(location[0] * location[0] + location[1] * location[1] +
                         location[2] * location[2]);
    }
};

/// One sampled network: BS locations in the window ball and per-slot fading.
struct Realization {
    int dimension = 2;
    std::size_t slots = 1;
    std::vector<BasePoint> points;
    std::vector<double> fading; ///< row-major, points.size() x slots

    double fading_at(std::size_t point, std::size_t slot) const noexcept
    {
        return fading[point * slots + slot];
    }
};

/// Samples realization `trial_index` of `plan`; a pure function of
/// (model, plan, trial_index). `plan` must be resolved.
Realization sample_realization(const NetworkModel& model, const SimPlan& plan,
                               std::uint64_t trial_index);

/// SIR of the candidate BS at a user at the origin in the given slot.
///
/// The candidate's own term is excluded from the interference. A lone BS sees
/// no interference and returns +infinity. No tail correction is applied.
double sir_at_origin(const Realization& realization, std::size_t candidate, std::size_t slot,
                     const NetworkModel& model);

/// Draw primitives shared by sample_realization and the estimators, so both
/// see identical geometry for the same (plan, trial).
namespace sampling {

std::int64_t point_count(const NetworkModel& model, const SimPlan& plan, std::uint64_t trial,
                         std::size_t tier);

/// Distance of point `index` of `tier` from the window centre.
inline double point_radius(const CounterRng& radius_stream, std::uint64_t index, double window,
                           int dimension) noexcept
{
    const double u = radius_stream.uniform_at(index);
    switch (dimension) {
    case 1: return window * u;
    case 2: return window * std::sqrt(u);
    default: return window * std::cbrt(u);
    }
}

/// Unit direction of point `index`.
Location point_direction(const CounterRng& direction_stream, std::uint64_t index,
                         int dimension) noexcept;

inline double fading_draw(const CounterRng& fading_stream, std::uint64_t point, std::uint64_t slot,
                          FadingModel model) noexcept
{
    return model == FadingModel::Rayleigh ? fading_stream.exponential_at(fading_index(point, slot))
                                          : 1.0;
}

} // namespace sampling

} // namespace hetcorr::sim
