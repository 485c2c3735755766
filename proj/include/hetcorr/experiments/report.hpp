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

#include <iosfwd>
#include <string>
#include <vector>

namespace hetcorr::experiments {

struct ComparisonReport {
    std::string name;
    std::vector<double> z_scores; ///< per row, (sim - analytic) / std_error
    double max_abs_z = 0.0;
    double frac_within_3se = 1.0;
    int bound_violations = 0;
    double runtime_seconds = 0.0;
};

/// Rows whose analytic value is NaN or falls outside [lower, upper].
int count_bound_violations(const std::vector<SweepRow>& rows);

/// Throws DomainError when a row lacks an analytic value or a defined
/// simulated estimate.
ComparisonReport compare_report(const std::vector<SweepRow>& rows, const std::string& name = {});

/// Pools several series into one summary (z-scores concatenated, runtimes summed).
ComparisonReport combine(const std::vector<ComparisonReport>& parts, const std::string& name);

void write_report_text(std::ostream& out, const ComparisonReport& report);

/// JSON object with keys max_abs_z, frac_within_3se, bound_violations,
/// runtime_seconds, plus name, rows and z_scores. Each of `parts` becomes an entry of a "series" array.
void write_report_json(std::ostream& out, const ComparisonReport& report,
                       const std::vector<ComparisonReport>& parts = {});

} // namespace hetcorr::experiments
