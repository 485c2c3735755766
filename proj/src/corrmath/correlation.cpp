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

#include "hetcorr/corrmath/correlation.hpp"

#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/corrmath/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hetcorr {
namespace {

constexpr double kPi = std::numbers::pi;

// Moment integrals span many orders of magnitude as epsilon varies; the
// relative criterion governs, the absolute floor only catches exact zeros.
const quad::Options kMomentOptions{1e-15, 1e-12, 4000};

void require_bounded(const NetworkModel& model)
{
    validate(model);
    if (!model.bounded())
        throw SingularPathLossError(
            "interference moments and spatial correlation need bounded path loss (epsilon > 0)");
}

// Integral over R^d of f(|x|), split at r = 1 where g changes regime.
double radial_integral(const NetworkModel& model, const quad::Integrand& f,
                       const quad::Options& opts = {})
{
    const int d = model.dimension;
    auto shell = [&](double r) { return std::pow(r, d - 1) * f(r); };
    const double inner = quad::integrate(shell, 0.0, 1.0, opts).value;
    const double outer = quad::integrate_to_infinity(shell, 1.0, opts).value;
    return d * unit_ball_volume(d) * (inner + outer);
}

// Integral over the sphere directions of g(|x - s|) for |x| = r, |s| = tau,
// as a function of the polar angle between x and s.
double angular_integral(const NetworkModel& model, double r, double tau)
{
    const quad::Options inner{1e-14, 1e-11, 4000};
    auto dist = [r, tau](double c) { return std::sqrt(std::max(0.0, r * r + tau * tau - 2.0 * r * tau * c)); };
    if (model.dimension == 2) {
        // both half-planes; theta in [0, pi]
        auto f = [&](double theta) { return path_loss(model, dist(std::cos(theta))); };
        return 2.0 * quad::integrate(f, 0.0, kPi, inner).value;
    }
    // d == 3: solid angle 2 pi sin(theta) d theta, written with c = cos(theta)
    auto f = [&](double c) { return path_loss(model, dist(c)); };
    return 2.0 * kPi * quad::integrate(f, -1.0, 1.0, inner).value;
}

} // namespace

double path_loss(const NetworkModel& model, double r) noexcept
{
    const double ra = std::pow(r, model.alpha);
    return model.epsilon > 0.0 ? 1.0 / (ra + model.epsilon) : 1.0 / ra;
}

double path_loss_integral(const NetworkModel& model)
{
    require_bounded(model);
    return radial_integral(model, [&](double r) { return path_loss(model, r); }, kMomentOptions);
}

double path_loss_integral_closed_form(const NetworkModel& model)
{
    require_bounded(model);
    const double d = delta(model);
    // integral_0^inf r^{d-1} / (r^alpha + eps) dr = eps^{delta-1} pi / (alpha sin(pi delta))
    const double radial =
        std::pow(model.epsilon, d - 1.0) * kPi / (model.alpha * std::sin(kPi * d));
    return model.dimension * unit_ball_volume(model.dimension) * radial;
}

double squared_path_loss_integral(const NetworkModel& model)
{
    require_bounded(model);
    return radial_integral(model, [&](double r) {
        const double g = path_loss(model, r);
        return g * g;
    }, kMomentOptions);
}

double cross_path_loss_integral(const NetworkModel& model, double separation)
{
    require_bounded(model);
    if (!(separation >= 0.0) || !std::isfinite(separation))
        throw DomainError("separation must be finite and >= 0");
    if (separation == 0.0) return squared_path_loss_integral(model);

    const double tau = separation;
    const quad::Options outer{1e-12, 1e-11, 4000};

    if (model.dimension == 1) {
        auto g = [&](double x) { return path_loss(model, std::abs(x)); };
        auto left = [&](double y) { return g(y) * g(y + tau); }; // x = -y
        auto mid = [&](double x) { return g(x) * g(tau - x); };
        return quad::integrate_to_infinity(left, 0.0, outer).value +
               quad::integrate(mid, 0.0, tau, outer).value +
               quad::integrate_to_infinity(left, 0.0, outer).value; // mirror of the right tail
    }

    auto shell = [&](double r) {
        return std::pow(r, model.dimension - 1) * path_loss(model, r) *
               angular_integral(model, r, tau);
    };
    return quad::integrate(shell, 0.0, tau, outer).value +
           quad::integrate(shell, tau, 2.0 * tau, outer).value +
           quad::integrate_to_infinity(shell, 2.0 * tau, outer).value;
}

double path_loss_tail_integral(const NetworkModel& model, double radius)
{
    validate(model);
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("tail radius must be positive and finite");
    const int d = model.dimension;
    const double surface = d * unit_ball_volume(d);
    if (!model.bounded())
        return surface * std::pow(radius, d - model.alpha) / (model.alpha - d);
    auto shell = [&](double r) { return std::pow(r, d - 1) * path_loss(model, r); };
    return surface * quad::integrate_to_infinity(shell, radius, {1e-14, 1e-12, 4000}).value;
}

double temporal_corr_coefficient(const FadingMoments& fading)
{
    validate(fading);
    return fading.mean * fading.mean / fading.second_moment;
}

double spatial_corr_coefficient(const NetworkModel& model, double separation,
                                const FadingMoments& fading)
{
    require_bounded(model);
    validate(fading);
    const double same_point = squared_path_loss_integral(model);
    const double cross = cross_path_loss_integral(model, separation);
    return temporal_corr_coefficient(fading) * cross / same_point;
}

double interference_mean(const NetworkModel& model, const FadingMoments& fading)
{
    require_bounded(model);
    validate(fading);
    double load = 0.0;
    for (const auto& t : model.tiers) load += t.density * t.power;
    return load * fading.mean * path_loss_integral(model);
}

double interference_variance(const NetworkModel& model, const FadingMoments& fading)
{
    require_bounded(model);
    validate(fading);
    double load = 0.0;
    for (const auto& t : model.tiers) load += t.density * t.power * t.power;
    return load * fading.second_moment * squared_path_loss_integral(model);
}

} // namespace hetcorr
