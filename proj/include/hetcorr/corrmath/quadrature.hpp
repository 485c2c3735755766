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

#include <functional>

namespace hetcorr::quad {

struct Options {
    double abs_tol = 1e-9;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
///
/// Refines the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws QuadratureError
/// when the interval budget runs out.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Integral over [a, inf) through the map x = a + t / (1 - t), t in [0, 1).
/// The integrand must decay to zero.
Result integrate_to_infinity(const Integrand& f, double a, const Options& opts = {});

} // namespace hetcorr::quad
