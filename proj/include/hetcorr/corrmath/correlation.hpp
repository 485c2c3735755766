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

namespace hetcorr {

/// Path loss at distance r: r^-alpha when epsilon == 0, else 1 / (r^alpha + epsilon).
double path_loss(const NetworkModel& model, double r) noexcept;

// Integrals of the bounded path loss over R^d. All require epsilon > 0 and
// throw SingularPathLossError otherwise.

/// Integral of g over R^d by quadrature.
double path_loss_integral(const NetworkModel& model);

/// Same integral through the Beta-function identity; used as a cross-check.
double path_loss_integral_closed_form(const NetworkModel& model);

/// Integral of g^2 over R^d.
double squared_path_loss_integral(const NetworkModel& model);

/// Integral of g(x) g(x - s) over R^d for |s| = separation.
double cross_path_loss_integral(const NetworkModel& model, double separation);

/// Integral of g over the complement of the ball of radius `radius`.
/// Valid for the singular law too, where it has a closed form.
double path_loss_tail_integral(const NetworkModel& model, double radius);

/// Same slot-to-slot coefficient at one location: E[h]^2 / E[h^2].
///
/// Reduces to 1 / E[h^2] for unit-mean fading.
double temporal_corr_coefficient(const FadingMoments& fading);

/// Correlation of I_{t1}(u) and I_{t2}(v), t1 != t2, with |u - v| = separation.
/// Absolute tolerance 1e-9.
double spatial_corr_coefficient(const NetworkModel& model, double separation,
                                const FadingMoments& fading);

/// E[I] = sum_j lambda_j P_j E[h] * integral of g.
double interference_mean(const NetworkModel& model, const FadingMoments& fading);

/// Var[I] = sum_j lambda_j P_j^2 E[h^2] * integral of g^2.
double interference_variance(const NetworkModel& model, const FadingMoments& fading);

} // namespace hetcorr
