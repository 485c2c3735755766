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

#include "hetcorr/corrmath/model.hpp"

#include "hetcorr/corrmath/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hetcorr {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void validate(const TierParams& tier)
{
    if (!positive_finite(tier.density))
        throw DomainError("tier density must be positive and finite");
    if (!positive_finite(tier.power))
        throw DomainError("tier power must be positive and finite");
    if (!positive_finite(tier.threshold))
        throw DomainError("tier threshold must be positive and finite");
}

void validate(const NetworkModel& model)
{
    if (model.tiers.empty())
        throw DomainError("network model needs at least one tier");
    for (const auto& tier : model.tiers)
        validate(tier);
    if (model.dimension < 1 || model.dimension > 3)
        throw DomainError("dimension must be 1, 2 or 3, got " + std::to_string(model.dimension));
    if (!std::isfinite(model.alpha) || model.alpha <= model.dimension)
        throw DomainError("path-loss exponent must exceed the dimension (alpha > d)");
    if (!std::isfinite(model.epsilon) || model.epsilon < 0.0)
        throw DomainError("epsilon must be finite and >= 0");
    const double d = model.dimension / model.alpha;
    if (d < kMinDelta || d > kMaxDelta)
        throw DomainError("d/alpha lies too close to 0 or 1 for stable evaluation");
}

void validate(const FadingMoments& fading)
{
    if (!positive_finite(fading.mean) || !positive_finite(fading.second_moment))
        throw DomainError("fading moments must be positive and finite");
    // Jensen, with one ulp of slack for deterministic fading built from arithmetic
    if (fading.second_moment < fading.mean * fading.mean * (1.0 - 1e-15))
        throw DomainError("fading second moment must be at least the squared mean");
}

double unit_ball_volume(int dimension)
{
    switch (dimension) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default: throw DomainError("unit ball volume defined for d in {1, 2, 3}");
    }
}

double delta(const NetworkModel& model)
{
    if (model.dimension < 1)
        throw DomainError("dimension must be positive");
    if (!(model.alpha > model.dimension))
        throw DomainError("path-loss exponent must exceed the dimension (alpha > d)");
    return model.dimension / model.alpha;
}

bool approximate_regime(const NetworkModel& model) noexcept
{
    for (const auto& tier : model.tiers)
        if (tier.threshold <= 1.0) return true;
    return false;
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

} // namespace hetcorr
