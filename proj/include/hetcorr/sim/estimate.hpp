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

#include <cstdint>
#include <span>

namespace hetcorr::sim {

/// A simulated quantity with a normal-approximation 95% interval.
struct Estimate {
    double value = 0.0;     ///< reported value (clamped to [0, 1] for probabilities)
    double raw_value = 0.0; ///< unclamped estimator output
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::int64_t trials = 0;
    bool defined = true; ///< false when the estimator had no data (e.g. empty ratio denominator)

    /// (value - reference) / std_error; 0 when both agree exactly.
    double z_score(double reference) const noexcept;
    bool overlaps(const Estimate& other) const noexcept;
    bool covers(double reference, double k_sigma = 3.0) const noexcept;
};

inline constexpr double kZ95 = 1.96;

Estimate make_estimate(double value, double std_error, std::int64_t trials);

/// Same, with the reported value clamped into [0, 1].
Estimate make_probability_estimate(double value, double std_error, std::int64_t trials);

Estimate undefined_estimate(std::int64_t trials);

/// Bernoulli mean with binomial standard error sqrt(p (1 - p) / N).
Estimate bernoulli_estimate(std::int64_t successes, std::int64_t trials);

/// Sample mean with s / sqrt(N).
Estimate mean_estimate(std::span<const double> samples);

/// Unbiased sample variance; standard error from the fourth central moment.
Estimate variance_estimate(std::span<const double> samples);

/// Pearson correlation of paired samples. The standard error is the
/// moment-based delta-method form, which stays valid for the heavy-tailed
/// interference samples where the bivariate-normal Fisher form does not.
Estimate correlation_estimate(std::span<const double> x, std::span<const double> y);

} // namespace hetcorr::sim
