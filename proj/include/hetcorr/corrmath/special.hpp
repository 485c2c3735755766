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

namespace hetcorr {

/// pi*delta / sin(pi*delta), which also equals Gamma(1-delta) Gamma(1+delta).
/// Requires delta in [kMinDelta, kMaxDelta].
double sinc_factor(double delta);

/// Diversity polynomial D_n(delta) = Gamma(n+delta) / (Gamma(n) Gamma(1+delta)).
///
/// Evaluated in log-gamma space so n may run well past the point where Gamma(n)
/// overflows a double. D_1 is exactly 1.
double diversity_polynomial(long long n, double delta);

/// log D_n(delta).
double log_diversity_polynomial(long long n, double delta);

} // namespace hetcorr
