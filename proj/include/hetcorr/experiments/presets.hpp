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

#include "hetcorr/experiments/sweep.hpp"

#include <string>
#include <vector>

namespace hetcorr::experiments {

/// A named figure setup. Figures with a family of curves carry one sweep per
/// curve; each series writes its own CSV.
struct FigurePreset {
    std::string name;
    std::vector<SweepSpec> series;

    bool operator==(const FigurePreset&) const = default;
};

/// fig2..fig6. Throws DomainError on an unknown name.
FigurePreset figure_preset(const std::string& name);

std::vector<std::string> preset_names();

/// n points from lo to hi, evenly spaced in log10.
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

inline constexpr std::int64_t kSuccessTrials = 100000;
inline constexpr std::int64_t kCorrelationTrials = 200000;

} // namespace hetcorr::experiments
