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

#include "hetcorr/experiments/report.hpp"

#include "hetcorr/corrmath/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hetcorr::experiments {
namespace {

// Bounds and analytic come from different closed forms; allow for rounding.
constexpr double kBoundSlack = 1e-12;

void summarize(ComparisonReport& r)
{
    r.max_abs_z = 0.0;
    std::size_t within = 0;
    for (double z : r.z_scores) {
        r.max_abs_z = std::max(r.max_abs_z, std::abs(z));
        if (std::abs(z) <= 3.0) ++within;
    }
    r.frac_within_3se = r.z_scores.empty() ? 1.0 : static_cast<double>(within) / r.z_scores.size();
}

nlohmann::json to_json(const ComparisonReport& r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["rows"] = r.z_scores.size();
    j["max_abs_z"] = r.max_abs_z;
    j["frac_within_3se"] = r.frac_within_3se;
    j["bound_violations"] = r.bound_violations;
    j["runtime_seconds"] = r.runtime_seconds;
    j["z_scores"] = r.z_scores;
    return j;
}

} // namespace

int count_bound_violations(const std::vector<SweepRow>& rows)
{
    int bad = 0;
    for (const auto& row : rows) {
        if (!row.analytic) continue;
        const double a = *row.analytic;
        if (std::isnan(a)) {
            ++bad;
            continue;
        }
        const double slack = kBoundSlack * std::abs(a);
        if ((row.lower_bound && !(a >= *row.lower_bound - slack)) ||
            (row.upper_bound && !(a <= *row.upper_bound + slack)))
            ++bad;
    }
    return bad;
}

ComparisonReport compare_report(const std::vector<SweepRow>& rows, const std::string& name)
{
    ComparisonReport r;
    r.name = name;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.analytic || !row.sim || !row.sim->defined)
            throw DomainError("row " + std::to_string(i) + " lacks an analytic value or a defined estimate");
        r.z_scores.push_back(row.sim->z_score(*row.analytic));
    }
    r.bound_violations = count_bound_violations(rows);
    summarize(r);
    return r;
}

ComparisonReport combine(const std::vector<ComparisonReport>& parts, const std::string& name)
{
    ComparisonReport r;
    r.name = name;
    for (const auto& p : parts) {
        r.z_scores.insert(r.z_scores.end(), p.z_scores.begin(), p.z_scores.end());
        r.bound_violations += p.bound_violations;
        r.runtime_seconds += p.runtime_seconds;
    }
    summarize(r);
    return r;
}

void write_report_text(std::ostream& out, const ComparisonReport& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s: rows=%zu max|z|=%.6g within3se=%.6g bound_violations=%d runtime=%.6gs\n",
                  r.name.empty() ? "report" : r.name.c_str(), r.z_scores.size(), r.max_abs_z,
                  r.frac_within_3se, r.bound_violations, r.runtime_seconds);
    out << buf;
}

void write_report_json(std::ostream& out, const ComparisonReport& report,
                       const std::vector<ComparisonReport>& parts)
{
    nlohmann::json j = to_json(report);
    if (!parts.empty()) {
        j["series"] = nlohmann::json::array();
        for (const auto& p : parts) j["series"].push_back(to_json(p));
    }
    out << j.dump(2) << '\n';
}

} // namespace hetcorr::experiments
