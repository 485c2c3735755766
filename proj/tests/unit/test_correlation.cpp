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

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"

#include <cmath>
#include <numbers>

using namespace hetcorr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkModel bounded(double alpha, double epsilon, int dim = 2)
{
    NetworkModel m;
    m.alpha = alpha;
    m.dimension = dim;
    m.epsilon = epsilon;
    m.tiers = {{1.0, 1.0, 2.0}};
    return m;
}

} // namespace

TEST_CASE("temporal correlation coefficient")
{
    CHECK(temporal_corr_coefficient(FadingMoments::rayleigh()) == 0.5);
    CHECK(temporal_corr_coefficient(FadingMoments::deterministic()) == 1.0);
    CHECK(temporal_corr_coefficient({1.0, 4.0}) == 0.25);
    // general mean^2 / second moment form
    CHECK_THAT(temporal_corr_coefficient({2.0, 8.0}), WithinRel(0.5, 1e-15));
    CHECK_THROWS_AS(temporal_corr_coefficient({1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(temporal_corr_coefficient({0.0, 1.0}), DomainError);
}

TEST_CASE("path loss integrals")
{
    SECTION("quadrature agrees with the Beta-function identity")
    {
        for (int dim : {1, 2, 3}) {
            for (double eps : {0.01, 0.3, 1.0, 5.0}) {
                for (double alpha : {dim + 0.7, dim + 2.0, 2.0 * dim + 1.0}) {
                    const NetworkModel m = bounded(alpha, eps, dim);
                    CHECK_THAT(path_loss_integral(m), WithinRel(path_loss_integral_closed_form(m), 1e-10));
                }
            }
        }
    }
    SECTION("alpha = 4, eps = 1 in the plane")
    {
        const NetworkModel m = bounded(4.0, 1.0);
        CHECK_THAT(path_loss_integral(m), WithinRel(kPi * kPi / 2.0, 1e-12));
        CHECK_THAT(squared_path_loss_integral(m), WithinRel(kPi * kPi / 4.0, 1e-12));
    }
    SECTION("tail integral")
    {
        const NetworkModel singular{{{1.0, 1.0, 1.0}}, 3.0, 2, 0.0};
        // 2 pi integral_R^inf r^-2 dr = 2 pi / R
        CHECK_THAT(path_loss_tail_integral(singular, 4.0), WithinRel(2.0 * kPi / 4.0, 1e-14));
        const NetworkModel m = bounded(4.0, 1.0);
        // 2 pi integral_R^inf r / (r^4 + 1) dr = pi (pi/2 - atan(R^2)) / 1 ... = pi * atan(1/R^2)
        CHECK_THAT(path_loss_tail_integral(m, 3.0), WithinRel(kPi * std::atan(1.0 / 9.0), 1e-11));
    }
    CHECK_THROWS_AS(path_loss_integral(bounded(4.0, 0.0)), SingularPathLossError);
}

TEST_CASE("interference moments")
{
    const NetworkModel m = bounded(4.0, 1.0);
    CHECK_THAT(interference_mean(m, FadingMoments::rayleigh()), WithinRel(4.934802200544679309, 1e-12));
    CHECK_THAT(interference_variance(m, FadingMoments::rayleigh()), WithinRel(4.934802200544679309, 1e-12));

    SECTION("density scaling is linear")
    {
        NetworkModel s = m;
        s.tiers[0].density *= 3.5;
        CHECK_THAT(interference_mean(s, FadingMoments::rayleigh()),
                   WithinRel(3.5 * interference_mean(m, FadingMoments::rayleigh()), 1e-13));
    }
    SECTION("power scaling is quadratic for the variance")
    {
        NetworkModel s = m;
        s.tiers[0].power *= 3.0;
        CHECK_THAT(interference_variance(s, FadingMoments::rayleigh()),
                   WithinRel(9.0 * interference_variance(m, FadingMoments::rayleigh()), 1e-13));
    }
    SECTION("Rayleigh doubles the deterministic variance")
    {
        CHECK_THAT(interference_variance(m, FadingMoments::rayleigh()) /
                       interference_variance(m, FadingMoments::deterministic()),
                   WithinRel(2.0, 1e-14));
    }
    SECTION("doubling epsilon scales the mean by 2^(delta-1)")
    {
        NetworkModel s = m;
        s.epsilon = 2.0;
        CHECK_THAT(interference_mean(s, FadingMoments::rayleigh()),
                   WithinRel(std::pow(2.0, -0.5) * interference_mean(m, FadingMoments::rayleigh()), 1e-11));
    }
    SECTION("tiers add")
    {
        NetworkModel two = m;
        two.tiers.push_back({0.4, 3.0, 1.0});
        NetworkModel second = m;
        second.tiers = {{0.4, 3.0, 1.0}};
        const auto ray = FadingMoments::rayleigh();
        CHECK_THAT(interference_variance(two, ray),
                   WithinRel(interference_variance(m, ray) + interference_variance(second, ray), 1e-13));
    }
    CHECK_THROWS_AS(interference_mean(bounded(4.0, 0.0), FadingMoments::rayleigh()), SingularPathLossError);
    CHECK_THROWS_AS(interference_variance(bounded(4.0, 0.0), FadingMoments::rayleigh()), SingularPathLossError);
}

TEST_CASE("spatial correlation coefficient")
{
    const auto ray = FadingMoments::rayleigh();

    SECTION("zero separation recovers the temporal coefficient")
    {
        for (double eps : {0.01, 0.1, 1.0})
            CHECK_THAT(spatial_corr_coefficient(bounded(4.0, eps), 0.0, ray), WithinAbs(0.5, 1e-9));
    }
    SECTION("40-digit oracle values for alpha = 4")
    {
        CHECK_THAT(spatial_corr_coefficient(bounded(4.0, 1.0), 0.5, ray), WithinAbs(0.45051667968938541, 1e-9));
        CHECK_THAT(spatial_corr_coefficient(bounded(4.0, 1.0), 1.0, ray), WithinAbs(0.33401320055037264, 1e-9));
        CHECK_THAT(spatial_corr_coefficient(bounded(4.0, 1.0), 2.0, ray), WithinAbs(0.11160107247845329, 1e-9));
        CHECK_THAT(spatial_corr_coefficient(bounded(4.0, 0.1), 1.0, ray), WithinAbs(0.14855962718891447, 1e-9));
        CHECK_THAT(spatial_corr_coefficient(bounded(4.0, 0.01), 1.0, ray), WithinAbs(0.02451483938011251, 1e-9));
    }
    SECTION("non-increasing in separation")
    {
        const NetworkModel m = bounded(4.0, 0.1);
        double prev = spatial_corr_coefficient(m, 0.0, ray);
        for (double tau = 0.25; tau <= 3.0; tau += 0.25) {
            const double v = spatial_corr_coefficient(m, tau, ray);
            CHECK(v <= prev);
            prev = v;
        }
    }
    SECTION("far separation decorrelates")
    {
        const NetworkModel m = bounded(4.0, 1.0);
        CHECK(spatial_corr_coefficient(m, 100.0, ray) < 0.01);
    }
    SECTION("other dimensions")
    {
        for (int dim : {1, 3}) {
            const NetworkModel m = bounded(dim + 2.0, 0.5, dim);
            CHECK_THAT(spatial_corr_coefficient(m, 0.0, ray), WithinAbs(0.5, 1e-9));
            const double a = spatial_corr_coefficient(m, 0.5, ray);
            const double b = spatial_corr_coefficient(m, 1.5, ray);
            CHECK(a < 0.5);
            CHECK(b < a);
            CHECK(b > 0.0);
        }
    }
    CHECK_THROWS_AS(spatial_corr_coefficient(bounded(4.0, 0.0), 1.0, ray), SingularPathLossError);
    CHECK_THROWS_AS(spatial_corr_coefficient(bounded(4.0, 1.0), -1.0, ray), DomainError);
}
