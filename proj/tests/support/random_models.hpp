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
#include "hetcorr/corrmath/quadrature.hpp"
#include "hetcorr/corrmath/success.hpp"

#include <cmath>
#include <random>

namespace hetcorr::testing {

/// Log-uniform draw on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

/// Random valid d = 2 model with 1..max_tiers tiers and alpha in (2.2, 6).
inline NetworkModel random_model(std::mt19937_64& rng, int max_tiers = 5, int min_tiers = 1)
{
    std::uniform_int_distribution<int> k(min_tiers, max_tiers);
    std::uniform_real_distribution<double> alpha(2.2, 6.0);
    NetworkModel m;
    m.alpha = alpha(rng);
    m.dimension = 2;
    const int tiers = k(rng);
    for (int i = 0; i < tiers; ++i)
        m.tiers.push_back({log_uniform(rng, 0.01, 100.0), log_uniform(rng, 0.1, 1000.0),
                           log_uniform(rng, 0.1, 100.0)});
    return m;
}

/// Campbell-Mecke route to the network joint success: integrate every tier's
/// per-BS success probability against its intensity over R^d.
inline double campbell_joint_success(const NetworkModel& model, long long n, double rel_tol)
{
    double total = 0.0;
    const int d = model.dimension;
    for (std::size_t i = 0; i < model.tier_count(); ++i) {
        auto f = [&](double r) {
            return per_bs_joint_success(model, i, r, n) * std::pow(r, d - 1);
        };
        const quad::Options opts{1e-300, rel_tol, 20000};
        const double radial = quad::integrate_to_infinity(f, 0.0, opts).value;
        total += model.tiers[i].density * d * unit_ball_volume(d) * radial;
    }
    return total;
}

} // namespace hetcorr::testing
