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
#include "hetcorr/corrmath/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace hetcorr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("finite-interval integrals")
{
    CHECK_THAT(quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value,
               WithinAbs(2.0, 1e-12));
    CHECK_THAT(quad::integrate([](double x) { return x * x * x; }, -1.0, 2.0).value,
               WithinAbs(3.75, 1e-13));
    // sqrt endpoint singularity forces refinement
    auto r = quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK_THAT(r.value, WithinAbs(2.0 / 3.0, 1e-9));
    CHECK(r.intervals > 1);
    CHECK(quad::integrate([](double) { return 1.0; }, 3.0, 3.0).value == 0.0);
}

TEST_CASE("semi-infinite integrals")
{
    CHECK_THAT(quad::integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0).value,
               WithinAbs(1.0, 1e-10));
    // integral_0^inf r / (r^4 + 1) dr = pi / 4
    CHECK_THAT(quad::integrate_to_infinity([](double r) { return r / (r * r * r * r + 1.0); }, 0.0).value,
               WithinAbs(std::numbers::pi / 4.0, 1e-9));
    // heavy tail: integral_1^inf x^-1.5 = 2
    CHECK_THAT(quad::integrate_to_infinity([](double x) { return std::pow(x, -1.5); }, 1.0).value,
               WithinAbs(2.0, 1e-8));
}

TEST_CASE("non-convergence is reported")
{
    quad::Options tight{1e-300, 0.0, 10};
    CHECK_THROWS_AS(quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight),
                    QuadratureError);
}
