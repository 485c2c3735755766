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

#include <cstddef>

namespace hetcorr {

/// Closed-form success probabilities for a typical user at the origin that
/// stays with one BS over n slots under Rayleigh fading and singular path loss.
///
/// Tier indices are zero-based throughout the C++ API.

struct JointSuccess {
    double probability = 0.0;
    bool approximate_regime = false; ///< some threshold <= 1
};

struct SuccessBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool approximate_regime = false;
};

enum class Direction { Increasing, Decreasing, Flat };

const char* to_string(Direction d) noexcept;

/// Sign of the joint success derivative with respect to one tier's density
/// (and, with the same sign, its transmit power).
struct MonotonicityVerdict {
    Direction direction = Direction::Flat;
    double margin = 0.0;
};

/// Relative band around zero margin that classifies as Flat.
inline constexpr double kFlatTolerance = 1e-12;

/// Probability that the BS of `tier_index` at distance `bs_distance` clears its
/// threshold in all n slots.
double per_bs_joint_success(const NetworkModel& model, std::size_t tier_index,
                            double bs_distance, long long n);

/// Joint success over n slots for the whole network (open access).
JointSuccess joint_success(const NetworkModel& model, long long n);

/// Sandwich from n^delta < D_n(delta) < n^delta / Gamma(1 + delta).
SuccessBounds joint_success_bounds(const NetworkModel& model, long long n);

/// P(slot n succeeds | slots 1..n-1 succeeded) = (n-1) / (n-1+delta).
double conditional_success(long long n, double delta);

MonotonicityVerdict monotonicity_verdict(const NetworkModel& model, std::size_t tier_m);

/// Joint success of one tier that owns an orthogonal band; density and power cancel.
double orthogonal_tier_joint_success(const TierParams& tier, double delta, long long n);

/// Per-BS counterpart of orthogonal_tier_joint_success in d dimensions.
double orthogonal_per_bs_joint_success(const TierParams& tier, int dimension, double delta,
                                       double bs_distance, long long n);

} // namespace hetcorr
