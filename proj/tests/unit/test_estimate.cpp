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

#include <catch_amalgamated.hpp>

#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/sim/estimate.hpp"
#include "hetcorr/sim/rng.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace hetcorr;
using namespace hetcorr::sim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Bernoulli estimate")
{
    const Estimate e = bernoulli_estimate(250, 1000);
    CHECK(e.value == 0.25);
    CHECK_THAT(e.std_error, WithinRel(std::sqrt(0.25 * 0.75 / 1000), 1e-14));
    CHECK_THAT(e.ci_low, WithinRel(0.25 - kZ95 * e.std_error, 1e-14));
    CHECK_THAT(e.ci_high, WithinRel(0.25 + kZ95 * e.std_error, 1e-14));
    CHECK(e.trials == 1000);
    CHECK(e.defined);
    CHECK_THROWS_AS(bernoulli_estimate(0, 0), DomainError);
}

TEST_CASE("probability estimates are clamped but keep the raw value")
{
    const Estimate e = make_probability_estimate(1.02, 0.01, 10);
    CHECK(e.value == 1.0);
    CHECK(e.raw_value == 1.02);
    const Estimate f = make_probability_estimate(-0.1, 0.01, 10);
    CHECK(f.value == 0.0);
    CHECK(f.raw_value == -0.1);
}

TEST_CASE("undefined estimates carry the trial count")
{
    const Estimate e = undefined_estimate(77);
    CHECK_FALSE(e.defined);
    CHECK(e.trials == 77);
    CHECK(std::isnan(e.value));
    CHECK_FALSE(e.covers(0.5));
    CHECK_FALSE(e.overlaps(make_estimate(0.5, 0.1, 10)));
}

TEST_CASE("z-score, coverage and overlap")
{
    const Estimate e = make_estimate(1.0, 0.1, 100);
    CHECK_THAT(e.z_score(0.8), WithinRel(2.0, 1e-12));
    CHECK(e.covers(0.75));
    CHECK_FALSE(e.covers(0.65));
    CHECK(e.overlaps(make_estimate(1.3, 0.1, 100)));
    CHECK_FALSE(e.overlaps(make_estimate(1.5, 0.1, 100)));
    // exact agreement with zero error is z = 0
    CHECK(make_estimate(0.3, 0.0, 1).z_score(0.3) == 0.0);
}

TEST_CASE("mean and variance estimates")
{
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    const Estimate m = mean_estimate(x);
    CHECK(m.value == 4.5);
    CHECK_THAT(m.std_error, WithinRel(std::sqrt(6.0 / 8.0), 1e-14)); // s^2 = 6
    const Estimate v = variance_estimate(x);
    CHECK_THAT(v.value, WithinRel(6.0, 1e-14));
    // central moments of 1..8: mu2 = 5.25, mu4 = 48.5625 -> sqrt((mu4 - mu2^2)/n)
    CHECK_THAT(v.std_error, WithinRel(std::sqrt((48.5625 - 5.25 * 5.25) / 8), 1e-12));
    CHECK_THROWS_AS(mean_estimate(std::vector<double>{1.0}), DomainError);
}

TEST_CASE("correlation estimate")
{
    std::mt19937_64 rng(5);
    std::normal_distribution<double> z;
    constexpr int n = 100000;
    constexpr double rho = 0.6;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = z(rng);
        y[i] = rho * x[i] + std::sqrt(1 - rho * rho) * z(rng);
    }
    const Estimate e = correlation_estimate(x, y);
    CHECK(e.covers(rho, 4.0));
    // bivariate normal: se(r) ~ (1 - rho^2) / sqrt(n)
    CHECK_THAT(e.std_error, WithinRel((1 - rho * rho) / std::sqrt(n), 0.03));

    std::vector<double> lin(x);
    for (auto& v : lin) v = 3.0 * v - 1.0;
    CHECK_THAT(correlation_estimate(x, lin).value, WithinAbs(1.0, 1e-12));

    const std::vector<double> flat(10, 2.0), any{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK_FALSE(correlation_estimate(flat, any).defined);
    CHECK_THROWS_AS(correlation_estimate(std::vector<double>{1, 2}, std::vector<double>{1}), DomainError);
}
