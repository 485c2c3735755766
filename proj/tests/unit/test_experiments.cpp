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
#include "hetcorr/corrmath/success.hpp"
#include "hetcorr/experiments/presets.hpp"
#include "hetcorr/experiments/report.hpp"
#include "hetcorr/experiments/sweep.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace hetcorr;
using namespace hetcorr::experiments;
using Catch::Matchers::WithinRel;

namespace {

SweepSpec analytic_only(SweepSpec s)
{
    s.outputs.erase(Output::Simulated);
    return s;
}

std::vector<double> analytic_column(const std::vector<SweepRow>& rows)
{
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.analytic.value());
    return out;
}

SweepRow synthetic(double analytic, double sim, double se)
{
    SweepRow r;
    r.analytic = analytic;
    r.sim = sim::make_estimate(sim, se, 100);
    return r;
}

} // namespace

TEST_CASE("presets are pure data")
{
    for (const auto& name : preset_names()) {
        CHECK(figure_preset(name) == figure_preset(name));
        for (const auto& s : figure_preset(name).series) CHECK_NOTHROW(validate(s));
    }
    CHECK_THROWS_AS(figure_preset("fig7"), DomainError);
}

TEST_CASE("fig3 preset")
{
    const auto p = figure_preset("fig3");
    REQUIRE(p.series.size() == 1);
    const auto& s = p.series.front();
    const auto& t = s.base_model.tiers;
    CHECK(t[0].power / t[1].power == 10.0);
    CHECK(t[1].density / t[0].density == 2.0);
    CHECK(t[0].threshold == 1.0);
    CHECK(s.base_model.alpha == 3.0);
    CHECK(s.plan.slots == 2);
    CHECK(s.plan.trials == 100000);
    CHECK(s.grid == std::vector<double>{-4, -2, 0, 2, 4, 6, 8, 10});

    const auto rows = run_sweep(analytic_only(s));
    const auto a = analytic_column(rows);
    // independent high-precision values of the closed form
    const double oracle[] = {0.311441232038488003, 0.274945676035559121, 0.248098002939806422,
                             0.228347720176651449, 0.213818577638548730, 0.203130326466453371,
                             0.195267597277982237, 0.189483441451569706};
    for (std::size_t i = 0; i < a.size(); ++i) CHECK_THAT(a[i], WithinRel(oracle[i], 1e-12));
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] < a[i - 1]);
    CHECK(count_bound_violations(rows) == 0);
    // beta_1 = 0 dB puts every row in the approximate regime
    for (const auto& r : rows) CHECK(r.flags.count(kApproximateFlag) == 1);
}

TEST_CASE("fig4 and fig5 presets follow the density/power verdicts")
{
    for (const char* name : {"fig4", "fig5"}) {
        const auto p = figure_preset(name);
        REQUIRE(p.series.size() == 4);
        for (const auto& s : p.series) {
            INFO(s.name);
            CHECK(s.grid.size() == 11);
            const auto a = analytic_column(run_sweep(analytic_only(s)));
            const double beta2_db = linear_to_db(s.base_model.tiers[1].threshold);
            for (std::size_t i = 1; i < a.size(); ++i) {
                if (std::abs(beta2_db) < 1e-12)
                    CHECK_THAT(a[i], WithinRel(a[0], 1e-12));
                else if (beta2_db < 0)
                    CHECK(a[i] > a[i - 1]);
                else
                    CHECK(a[i] < a[i - 1]);
            }
        }
    }
    const auto f5 = figure_preset("fig5").series.front();
    CHECK(f5.base_model.tiers[0].power == 100.0);
    CHECK(f5.grid.front() == 1.0);
    CHECK(f5.grid.back() == 100.0);
    const auto f4 = figure_preset("fig4").series.front();
    CHECK(f4.grid.front() == 0.1);
    CHECK(f4.grid.back() == 10.0);
}

TEST_CASE("fig6 preset: conditional success rises toward one")
{
    const auto p = figure_preset("fig6");
    REQUIRE(p.series.size() == 2);
    std::vector<std::vector<double>> cols;
    for (const auto& s : p.series) {
        const auto a = analytic_column(run_sweep(analytic_only(s)));
        for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] > a[i - 1]);
        CHECK(a.back() < 1.0);
        cols.push_back(a);
    }
    // larger alpha, higher conditional success
    for (std::size_t i = 0; i < cols[0].size(); ++i) CHECK(cols[1][i] > cols[0][i]);
    CHECK_THAT(cols[0][0], WithinRel(0.6, 1e-12));
}

TEST_CASE("fig2 preset: correlation falls from the temporal value")
{
    const auto p = figure_preset("fig2");
    REQUIRE(p.series.size() == 3);
    std::vector<double> at_one;
    for (const auto& s : p.series) {
        CHECK(s.grid.size() == 13);
        CHECK(s.base_model.alpha == 4.0);
        const auto a = analytic_column(run_sweep(analytic_only(s)));
        CHECK_THAT(a.front(), WithinRel(0.5, 1e-6));
        for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] <= a[i - 1]);
        at_one.push_back(a[4]); // tau = 1
    }
    CHECK(at_one[0] > at_one[1]);
    CHECK(at_one[1] > at_one[2]);
}

TEST_CASE("sweep validation")
{
    SweepSpec s = figure_preset("fig3").series.front();
    SweepSpec bad = s;
    bad.grid.clear();
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = s;
    bad.grid = {0, 2, 1};
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = s;
    bad.tier = 2;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = s;
    bad.outputs = {Output::Analytic, Output::Correlation};
    CHECK_THROWS_AS(validate(bad), DomainError);

    SweepSpec corr = figure_preset("fig2").series.front();
    corr.base_model.epsilon = 0.0;
    CHECK_THROWS_AS(validate(corr), DomainError);
    CHECK_THROWS_AS(run_sweep(corr), DomainError);
}

TEST_CASE("simulated sweeps are reproducible and use per-row seeds")
{
    SweepSpec s = figure_preset("fig3").series.front();
    s.grid = {0.0, 6.0};
    s.plan.trials = 2000;
    const auto a = run_sweep(s);
    s.plan.parallelism = 3;
    const auto b = run_sweep(s);
    REQUIRE(a.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].sim->value == b[i].sim->value);
        CHECK(a[i].sim->std_error == b[i].sim->std_error);
    }
    CHECK(row_seed(1, 0) != row_seed(1, 1));
    CHECK(row_seed(1, 0) != row_seed(2, 0));
}

TEST_CASE("comparison report")
{
    SECTION("perfect agreement")
    {
        const std::vector<SweepRow> rows{synthetic(0.3, 0.3, 1e-9), synthetic(0.2, 0.2, 1e-9)};
        const auto r = compare_report(rows, "ok");
        CHECK(r.max_abs_z == 0.0);
        CHECK(r.frac_within_3se == 1.0);
        CHECK(r.bound_violations == 0);
    }
    SECTION("z-scores and the 3-sigma fraction")
    {
        const std::vector<SweepRow> rows{synthetic(0.5, 0.52, 0.01), synthetic(0.5, 0.45, 0.01),
                                         synthetic(0.5, 0.5, 0.01), synthetic(0.5, 0.49, 0.01)};
        const auto r = compare_report(rows);
        CHECK_THAT(r.max_abs_z, WithinRel(5.0, 1e-9));
        CHECK(r.frac_within_3se == 0.75);
    }
    SECTION("bound violations are flagged")
    {
        auto row = synthetic(0.5, 0.5, 0.01);
        row.lower_bound = 0.55;
        row.upper_bound = 0.6;
        auto nan_row = synthetic(0.5, 0.5, 0.01);
        nan_row.analytic = std::nan("");
        CHECK(compare_report({row, nan_row}).bound_violations == 2);
    }
    SECTION("missing columns")
    {
        SweepRow r;
        r.analytic = 0.1;
        CHECK_THROWS_AS(compare_report({r}), DomainError);
        SweepRow u = synthetic(0.1, 0.1, 0.1);
        u.sim = sim::undefined_estimate(10);
        CHECK_THROWS_AS(compare_report({u}), DomainError);
    }
    SECTION("json carries the documented keys")
    {
        auto r = compare_report({synthetic(0.3, 0.31, 0.01)}, "x");
        r.runtime_seconds = 1.5;
        std::ostringstream out;
        write_report_json(out, r, {r});
        const auto j = nlohmann::json::parse(out.str());
        for (const char* key : {"max_abs_z", "frac_within_3se", "bound_violations", "runtime_seconds"})
            CHECK(j.contains(key));
        CHECK(j["runtime_seconds"] == 1.5);
        CHECK(j["series"].size() == 1);
    }
}

TEST_CASE("csv output")
{
    SweepRow a = synthetic(1.0 / 3.0, 0.3, 0.01);
    a.sweep_value = -4;
    a.lower_bound = 0.25;
    a.flags = {"approximate-regime", "error:bad, value"};
    SweepRow b;
    b.sweep_value = 2;
    std::ostringstream out;
    write_csv(out, {a, b});
    const std::string text = out.str();
    CHECK(text.find('\r') == std::string::npos);
    std::istringstream in(text);
    std::string header, l1, l2;
    std::getline(in, header);
    std::getline(in, l1);
    std::getline(in, l2);
    CHECK(header == "sweep_value,analytic,sim_mean,sim_stderr,ci_lo,ci_hi,lower_bound,upper_bound,flags");
    CHECK(l1.rfind("-4,0.33333333333333331,0.29999999999999999,", 0) == 0);
    CHECK(l1.find(",0.25,,approximate-regime;error:bad  value") != std::string::npos);
    CHECK(l2 == "2,,,,,,,,");
}

TEST_CASE("spec files round-trip")
{
    for (const auto& name : preset_names())
        for (const auto& s : figure_preset(name).series) CHECK(spec_from_json(spec_to_json(s)) == s);

    CHECK_THROWS_AS(spec_from_json("{\"model\": {\"tiers\": []}, \"variable\": \"slots\", \"outputs\": [], \"bogus\": 1}"),
                    DomainError);
    CHECK_THROWS_AS(spec_from_json("not json"), DomainError);
    CHECK_THROWS_AS(spec_from_json("{\"model\": {\"tiers\": []}, \"variable\": \"warp\", \"outputs\": []}"),
                    DomainError);
}

TEST_CASE("grids")
{
    const auto g = log_grid(0.1, 10.0, 11);
    REQUIRE(g.size() == 11);
    CHECK_THAT(g[5], WithinRel(1.0, 1e-14));
    CHECK_THAT(g[1] / g[0], WithinRel(std::pow(10.0, 0.2), 1e-12));
    CHECK(linear_grid(0.0, 3.0, 13)[4] == 1.0);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), DomainError);
}
