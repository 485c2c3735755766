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

#include "hetcorr/sim/plan.hpp"

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/sim/rng.hpp"

#include <algorithm>
#include <cmath>

namespace hetcorr::sim {

FadingMoments moments_of(FadingModel fading) noexcept
{
    return fading == FadingModel::Rayleigh ? FadingMoments::rayleigh()
                                           : FadingMoments::deterministic();
}

void validate(const SimPlan& plan)
{
    if (!(plan.window_radius >= 0.0) || !std::isfinite(plan.window_radius))
        throw DomainError("window radius must be finite and >= 0 (0 selects the default)");
    if (plan.trials < 1) throw DomainError("trials must be >= 1");
    if (plan.slots < 1) throw DomainError("slots must be >= 1");
    if (static_cast<std::uint64_t>(plan.slots) >= kMaxSlots)
        throw DomainError("slot count exceeds the fading stream layout");
    if (plan.parallelism < 1) throw DomainError("parallelism must be >= 1");
}

double default_window_radius(const NetworkModel& model, double max_separation)
{
    validate(model);
    if (!model.bounded()) {
        double densest = 0.0;
        for (const auto& t : model.tiers) densest = std::max(densest, t.density);
        return 30.0 * std::pow(densest, -1.0 / model.dimension) + max_separation;
    }

    const double total = path_loss_integral(model);
    auto truncated_share = [&](double r) { return path_loss_tail_integral(model, r) / total; };
    constexpr double target = 1e-3;
    double hi = 1.0;
    while (truncated_share(hi) >= target) hi *= 2.0;
    double lo = hi / 2.0;
    while (hi - lo > 0.01 * hi) {
        const double mid = 0.5 * (lo + hi);
        (truncated_share(mid) >= target ? lo : hi) = mid;
    }
    return hi + max_separation;
}

SimPlan resolve(const NetworkModel& model, SimPlan plan, double max_separation)
{
    validate(plan);
    if (plan.window_radius == 0.0)
        plan.window_radius = default_window_radius(model, max_separation);
    return plan;
}

double tail_interference(const NetworkModel& model, double radius)
{
    double load = 0.0;
    for (const auto& t : model.tiers) load += t.density * t.power;
    return load * path_loss_tail_integral(model, radius);
}

} // namespace hetcorr::sim
