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

#include "hetcorr/sim/estimate.hpp"

#include "hetcorr/corrmath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hetcorr::sim {

double Estimate::z_score(double reference) const noexcept
{
    const double diff = value - reference;
    if (diff == 0.0) return 0.0;
    if (std_error == 0.0) return diff > 0 ? std::numeric_limits<double>::infinity()
                                          : -std::numeric_limits<double>::infinity();
    return diff / std_error;
}

bool Estimate::overlaps(const Estimate& other) const noexcept
{
    return defined && other.defined && ci_low <= other.ci_high && other.ci_low <= ci_high;
}

bool Estimate::covers(double reference, double k_sigma) const noexcept
{
    return defined && std::abs(z_score(reference)) <= k_sigma;
}

Estimate make_estimate(double value, double std_error, std::int64_t trials)
{
    Estimate e;
    e.value = value;
    e.raw_value = value;
    e.std_error = std_error;
    e.ci_low = value - kZ95 * std_error;
    e.ci_high = value + kZ95 * std_error;
    e.trials = trials;
    return e;
}

Estimate make_probability_estimate(double value, double std_error, std::int64_t trials)
{
    Estimate e = make_estimate(std::clamp(value, 0.0, 1.0), std_error, trials);
    e.raw_value = value;
    return e;
}

Estimate undefined_estimate(std::int64_t trials)
{
    Estimate e;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    e.value = e.raw_value = e.std_error = e.ci_low = e.ci_high = nan;
    e.trials = trials;
    e.defined = false;
    return e;
}

Estimate bernoulli_estimate(std::int64_t successes, std::int64_t trials)
{
    if (trials < 1) throw DomainError("Bernoulli estimate needs at least one trial");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    return make_probability_estimate(p, std::sqrt(p * (1.0 - p) / n), trials);
}

Estimate mean_estimate(std::span<const double> samples)
{
    const auto n = static_cast<std::int64_t>(samples.size());
    if (n < 2) throw DomainError("mean estimate needs at least two samples");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double var = ss / (n - 1);
    return make_estimate(mean, std::sqrt(var / n), n);
}

Estimate variance_estimate(std::span<const double> samples)
{
    const auto n = static_cast<std::int64_t>(samples.size());
    if (n < 4) throw DomainError("variance estimate needs at least four samples");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : samples) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    const double var = m2 / (n - 1);
    m2 /= n;
    m4 /= n;
    // Var(s^2) ~ (mu4 - mu2^2) / n
    return make_estimate(var, std::sqrt(std::max(0.0, m4 - m2 * m2) / n), n);
}

Estimate correlation_estimate(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) throw DomainError("correlation needs paired samples");
    const auto n = static_cast<std::int64_t>(x.size());
    if (n < 4) throw DomainError("correlation estimate needs at least four pairs");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    double m20 = 0, m02 = 0, m11 = 0, m40 = 0, m04 = 0, m22 = 0, m31 = 0, m13 = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = x[i] - mx, b = y[i] - my;
        const double a2 = a * a, b2 = b * b;
        m20 += a2;
        m02 += b2;
        m11 += a * b;
        m40 += a2 * a2;
        m04 += b2 * b2;
        m22 += a2 * b2;
        m31 += a2 * a * b;
        m13 += a * b2 * b;
    }
    if (m20 == 0.0 || m02 == 0.0) {
        Estimate e = undefined_estimate(n);
        return e;
    }
    m20 /= n; m02 /= n; m11 /= n; m40 /= n; m04 /= n; m22 /= n; m31 /= n; m13 /= n;

    const double r = m11 / std::sqrt(m20 * m02);
    // Delta method for r = m11 / sqrt(m20 m02), written without dividing by m11.
    const double var = (m22 / (m20 * m02) +
                        0.25 * r * r * (m40 / (m20 * m20) + m04 / (m02 * m02) + 2.0 * m22 / (m20 * m02)) -
                        r * (m31 / (m20 * std::sqrt(m20 * m02)) + m13 / (m02 * std::sqrt(m20 * m02)))) /
                       n;
    return make_estimate(r, std::sqrt(std::max(0.0, var)), n);
}

} // namespace hetcorr::sim
