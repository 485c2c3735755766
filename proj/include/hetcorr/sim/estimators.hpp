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
#include "hetcorr/sim/estimate.hpp"
#include "hetcorr/sim/plan.hpp"

#include <cstdint>
#include <vector>

namespace hetcorr::sim {

// Monte Carlo estimators. Each trial draws a fresh realization from its own
// counter-based streams, so every result is a pure function of (model, plan)
// and is bit-identical for any plan.parallelism. Plans with window_radius == 0
// are resolved against the model first.

/// Trial counts for every leading prefix of slots: at_least[k] is the number
/// of trials in which one BS cleared its tier threshold in each of slots 1..k.
/// at_least[0] == trials.
struct SuccessCounts {
    std::int64_t trials = 0;
    std::vector<std::int64_t> at_least;
};

/// One pass over plan.trials realizations with plan.slots slots.
SuccessCounts success_prefix_counts(const NetworkModel& model, const SimPlan& plan);

/// P(some BS clears its threshold in all plan.slots slots), same BS throughout.
Estimate estimate_joint_success(const NetworkModel& model, const SimPlan& plan);

/// Ratio of trials succeeding in slots 1..n to those succeeding in 1..n-1.
/// Runs n slots regardless of plan.slots. Error bars from a 1000-resample
/// nonparametric bootstrap over the trial indicators.
Estimate estimate_conditional_success(const NetworkModel& model, const SimPlan& plan, long long n);

/// Conditional-success estimate from precomputed counts (n <= counts.at_least.size() - 1).
Estimate conditional_from_counts(const SuccessCounts& counts, long long n,
                                 std::uint64_t bootstrap_seed, int resamples = 1000);

struct InterferenceMoments {
    Estimate mean;
    Estimate variance;
};

/// Sample mean and variance of the total interference at the origin (no
/// candidate excluded). Needs bounded path loss.
InterferenceMoments estimate_interference_moments(const NetworkModel& model, const SimPlan& plan);

enum class CorrelationMode {
    Temporal,       ///< same location, two slots
    Spatiotemporal, ///< locations `separation` apart, two slots
};

/// Pearson correlation of (I_{t1}(u), I_{t2}(v)) over trials, u at the origin,
/// |u - v| = separation. Needs bounded path loss. Temporal mode requires
/// separation == 0, spatiotemporal mode separation > 0.
Estimate estimate_corr_coefficient(const NetworkModel& model, const SimPlan& plan,
                                   double separation, CorrelationMode mode);

/// Raw per-trial interference pairs behind estimate_corr_coefficient.
struct InterferencePairs {
    std::vector<double> at_u;
    std::vector<double> at_v;
};

InterferencePairs sample_interference_pairs(const NetworkModel& model, const SimPlan& plan,
                                            double separation);

} // namespace hetcorr::sim
