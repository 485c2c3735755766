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

#include "hetcorr/corrmath/special.hpp"

#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/corrmath/model.hpp"

#include <cmath>
#include <numbers>

namespace hetcorr {
namespace {

void check_delta(double delta)
{
    if (!(delta >= kMinDelta && delta <= kMaxDelta))
        throw DomainError("delta must lie in [1e-6, 1 - 1e-6]");
}

// Bernoulli polynomial differences B_{k+1}(a) - B_{k+1}(0), k = 1..7.
double bernoulli_difference(int k, double a)
{
    const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a, a7 = a6 * a,
                 a8 = a7 * a;
    switch (k) {
    case 1: return a2 - a;
    case 2: return a3 - 1.5 * a2 + 0.5 * a;
    case 3: return a4 - 2.0 * a3 + a2;
    case 4: return a5 - 2.5 * a4 + (5.0 / 3.0) * a3 - a / 6.0;
    case 5: return a6 - 3.0 * a5 + 2.5 * a4 - 0.5 * a2;
    case 6: return a7 - 3.5 * a6 + 3.5 * a5 - (7.0 / 6.0) * a3 + a / 6.0;
    case 7: return a8 - 4.0 * a7 + (14.0 / 3.0) * a6 - (7.0 / 3.0) * a4 + (2.0 / 3.0) * a2;
    default: return 0.0;
    }
}

// log Gamma(z + a) - log Gamma(z) for 0 < a < 1.
//
// Subtracting two lgamma values of size ~ z log z loses digits once z grows,
// so large z switches to the asymptotic difference series.
double log_gamma_ratio(double z, double a)
{
    if (z < 30.0)
        return std::lgamma(z + a) - std::lgamma(z);
    double sum = a * std::log(z);
    double zpow = z;
    for (int k = 1; k <= 7; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        sum += sign * bernoulli_difference(k, a) / (k * (k + 1.0) * zpow);
        zpow *= z;
    }
    return sum;
}

} // namespace

double sinc_factor(double delta)
{
    check_delta(delta);
    const double x = std::numbers::pi * delta;
    return x / std::sin(x);
}

double log_diversity_polynomial(long long n, double delta)
{
    if (n < 1)
        throw DomainError("diversity polynomial needs n >= 1");
    check_delta(delta);
    if (n == 1) return 0.0;
    return log_gamma_ratio(static_cast<double>(n), delta) - std::lgamma(1.0 + delta);
}

double diversity_polynomial(long long n, double delta)
{
    if (n == 1) {
        check_delta(delta);
        return 1.0;
    }
    return std::exp(log_diversity_polynomial(n, delta));
}

} // namespace hetcorr
