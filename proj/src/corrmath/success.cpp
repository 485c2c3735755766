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

#include "hetcorr/corrmath/success.hpp"

#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/corrmath/special.hpp"

#include <cmath>
#include <string>

namespace hetcorr {
namespace {

void check_slots(long long n)
{
    if (n < 1) throw DomainError("slot count must be >= 1");
}

// sum_i lambda_i P_i^delta beta_i^-delta and sum_l lambda_l P_l^delta
struct TierSums {
    double weighted_thresholds = 0.0;
    double weights = 0.0;
};

TierSums tier_sums(const NetworkModel& model, double d)
{
    TierSums s;
    for (const auto& t : model.tiers) {
        const double w = t.density * std::pow(t.power, d);
        s.weights += w;
        s.weighted_thresholds += w * std::pow(t.threshold, -d);
    }
    return s;
}

} // namespace

const char* to_string(Direction d) noexcept
{
    switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Decreasing: return "decreasing";
    case Direction::Flat: return "flat";
    }
    return "?";
}

double per_bs_joint_success(const NetworkModel& model, std::size_t tier_index,
                            double bs_distance, long long n)
{
    validate(model);
    check_slots(n);
    if (tier_index >= model.tier_count())
        throw DomainError("tier index " + std::to_string(tier_index) + " out of range");
    if (!(bs_distance >= 0.0) || !std::isfinite(bs_distance))
        throw DomainError("BS distance must be finite and >= 0");

    const double d = delta(model);
    const auto& serving = model.tiers[tier_index];
    const double exponent = unit_ball_volume(model.dimension) * sinc_factor(d) *
                            std::pow(serving.threshold / serving.power, d) *
                            tier_sums(model, d).weights * diversity_polynomial(n, d) *
                            std::pow(bs_distance, model.dimension);
    return std::exp(-exponent);
}

JointSuccess joint_success(const NetworkModel& model, long long n)
{
    validate(model);
    check_slots(n);
    const double d = delta(model);
    const TierSums s = tier_sums(model, d);
    const double p = s.weighted_thresholds / (sinc_factor(d) * diversity_polynomial(n, d) * s.weights);
    return {p, approximate_regime(model)};
}

SuccessBounds joint_success_bounds(const NetworkModel& model, long long n)
{
    validate(model);
    check_slots(n);
    const double d = delta(model);
    const TierSums s = tier_sums(model, d);
    const double upper =
        s.weighted_thresholds / (sinc_factor(d) * std::pow(static_cast<double>(n), d) * s.weights);
    return {std::tgamma(1.0 + d) * upper, upper, approximate_regime(model)};
}

double conditional_success(long long n, double delta)
{
    if (n < 2) throw DomainError("conditional success needs n >= 2");
    if (!(delta >= kMinDelta && delta <= kMaxDelta))
        throw DomainError("delta must lie in [1e-6, 1 - 1e-6]");
    // D_{n-1} / D_n collapses through the recurrence D_n = D_{n-1} (n-1+delta) / (n-1).
    const double m = static_cast<double>(n - 1);
    return m / (m + delta);
}

MonotonicityVerdict monotonicity_verdict(const NetworkModel& model, std::size_t tier_m)
{
    validate(model);
    if (model.tier_count() < 2)
        throw DomainError("monotonicity verdict needs at least two tiers");
    if (tier_m >= model.tier_count())
        throw DomainError("tier index " + std::to_string(tier_m) + " out of range");

    const double d = delta(model);
    double others_weighted = 0.0, others = 0.0;
    for (std::size_t i = 0; i < model.tier_count(); ++i) {
        if (i == tier_m) continue;
        const auto& t = model.tiers[i];
        const double w = t.density * std::pow(t.power, d);
        others += w;
        others_weighted += w * std::pow(t.threshold, -d);
    }
    const double own = std::pow(model.tiers[tier_m].threshold, -d);
    const double margin = own - others_weighted / others;

    MonotonicityVerdict v{Direction::Flat, margin};
    if (std::abs(margin) > kFlatTolerance * own)
        v.direction = margin > 0.0 ? Direction::Increasing : Direction::Decreasing;
    return v;
}

double orthogonal_tier_joint_success(const TierParams& tier, double delta, long long n)
{
    validate(tier);
    check_slots(n);
    return std::pow(tier.threshold, -delta) / (sinc_factor(delta) * diversity_polynomial(n, delta));
}

double orthogonal_per_bs_joint_success(const TierParams& tier, int dimension, double delta,
                                       double bs_distance, long long n)
{
    validate(tier);
    check_slots(n);
    if (!(bs_distance >= 0.0) || !std::isfinite(bs_distance))
        throw DomainError("BS distance must be finite and >= 0");
    const double exponent = unit_ball_volume(dimension) * sinc_factor(delta) * tier.density *
                            std::pow(tier.threshold, delta) * diversity_polynomial(n, delta) *
                            std::pow(bs_distance, dimension);
    return std::exp(-exponent);
}

} // namespace hetcorr
