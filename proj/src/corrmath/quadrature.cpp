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

#include "hetcorr/corrmath/quadrature.hpp"

#include "hetcorr/corrmath/errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace hetcorr::quad {
namespace {

// Kronrod abscissae (positive half, descending) and weights; every odd index
// is also a Gauss node.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = fc * kWk[7];
    double gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXk[i];
        const double pair = f(mid - dx) + f(mid + dx);
        kronrod += kWk[i] * pair;
        if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts)
{
    if (a == b) return {};
    std::priority_queue<Segment> work;
    work.push(gauss_kronrod(f, a, b));
    double total = work.top().value;
    double error = work.top().error;
    int intervals = 1;

    auto converged = [&] {
        return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    };
    while (!converged()) {
        if (intervals >= opts.max_intervals || !std::isfinite(total))
            throw QuadratureError("adaptive quadrature did not converge", total, error);
        Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureError("quadrature interval collapsed below machine precision", total,
                                  error);
        Segment left = gauss_kronrod(f, worst.a, mid);
        Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++intervals;
    }

    // Re-sum from scratch so the running updates do not leak rounding.
    double value = 0.0, err = 0.0;
    while (!work.empty()) {
        value += work.top().value;
        err += work.top().error;
        work.pop();
    }
    return {value, err, intervals};
}

Result integrate_to_infinity(const Integrand& f, double a, const Options& opts)
{
    // x = a + t / (1 - t) written in u = 1 - t: algebraic tails become an
    // endpoint singularity at u = 0, where bisection keeps full precision.
    auto mapped = [&f, a](double u) {
        if (u <= 0.0) return 0.0;
        return f(a + (1.0 - u) / u) / (u * u);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

} // namespace hetcorr::quad
