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

#include "hetcorr/sim/realization.hpp"

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"

#include <limits>
#include <numbers>
#include <random>

namespace hetcorr::sim {
namespace sampling {

std::int64_t point_count(const NetworkModel& model, const SimPlan& plan, std::uint64_t trial,
                         std::size_t tier)
{
    const double mean = model.tiers[tier].density * unit_ball_volume(model.dimension) *
                        std::pow(plan.window_radius, model.dimension);
    CounterRng rng(stream_key(plan.master_seed, trial, Stream::PointCount, tier));
    std::poisson_distribution<std::int64_t> poisson(mean);
    return poisson(rng);
}

Location point_direction(const CounterRng& direction_stream, std::uint64_t index,
                         int dimension) noexcept
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (dimension) {
    case 1: return {direction_stream.uniform_at(index) < 0.5 ? -1.0 : 1.0, 0.0, 0.0};
    case 2: {
        const double theta = two_pi * direction_stream.uniform_at(index);
        return {std::cos(theta), std::sin(theta), 0.0};
    }
    default: {
        const double z = 2.0 * direction_stream.uniform_at(2 * index) - 1.0;
        const double phi = two_pi * direction_stream.uniform_at(2 * index + 1);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }
    }
}

} // namespace sampling

Realization sample_realization(const NetworkModel& model, const SimPlan& plan,
                               std::uint64_t trial_index)
{
    validate(model);
    validate(plan);
    if (plan.window_radius <= 0.0)
        throw DomainError("sample_realization needs a resolved plan (window radius > 0)");

    Realization out;
    out.dimension = model.dimension;
    out.slots = static_cast<std::size_t>(plan.slots);

    for (std::size_t k = 0; k < model.tier_count(); ++k) {
        const auto count = sampling::point_count(model, plan, trial_index, k);
        const CounterRng radius(stream_key(plan.master_seed, trial_index, Stream::Radius, k));
        const CounterRng direction(stream_key(plan.master_seed, trial_index, Stream::Direction, k));
        const CounterRng fading(stream_key(plan.master_seed, trial_index, Stream::Fading, k));
        for (std::int64_t j = 0; j < count; ++j) {
            const auto idx = static_cast<std::uint64_t>(j);
            const double r = sampling::point_radius(radius, idx, plan.window_radius, model.dimension);
            const Location dir = sampling::point_direction(direction, idx, model.dimension);
            out.points.push_back({{r * dir[0], r * dir[1], r * dir[2]}, k});
            for (std::size_t t = 0; t < out.slots; ++t)
                out.fading.push_back(sampling::fading_draw(fading, idx, t, plan.fading));
        }
    }
    return out;
}

double sir_at_origin(const Realization& realization, std::size_t candidate, std::size_t slot,
                     const NetworkModel& model)
{
    if (candidate >= realization.points.size())
        throw DomainError("candidate index outside the realization");
    if (slot >= realization.slots)
        throw DomainError("slot index outside the realization");

    auto received = [&](std::size_t j) {
        const auto& p = realization.points[j];
        return model.tiers[p.tier].power * realization.fading_at(j, slot) *
               path_loss(model, p.norm());
    };
    double interference = 0.0;
    for (std::size_t j = 0; j < realization.points.size(); ++j)
        if (j != candidate) interference += received(j);
    const double signal = received(candidate);
    if (interference <= 0.0) return std::numeric_limits<double>::infinity();
    return signal / interference;
}

} // namespace hetcorr::sim
