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

#include "hetcorr/experiments/presets.hpp"

#include "hetcorr/corrmath/errors.hpp"

#include <cmath>
#include <cstdio>

namespace hetcorr::experiments {
namespace {

// Two tiers, tier 1 the macro layer at 0 dB.
NetworkModel two_tier(double lambda2, double p1, double p2, double beta2_db, double alpha)
{
    NetworkModel m;
    m.tiers = {{1.0, p1, 1.0}, {lambda2, p2, db_to_linear(beta2_db)}};
    m.alpha = alpha;
    return m;
}

sim::SimPlan success_plan(long long slots)
{
    sim::SimPlan p;
    p.trials = kSuccessTrials;
    p.slots = slots;
    return p;
}

std::string label(const char* key, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%g", key, v);
    return buf;
}

// Series of a two-tier sweep at each beta_2 in dB. 0 dB is the exact
// equal-threshold case, 1 dB the legend label of the figures.
constexpr double kSeriesBeta2Db[] = {-4.0, -2.0, 0.0, 1.0};

FigurePreset fig2()
{
    FigurePreset f{"fig2", {}};
    for (double eps : {1.0, 0.1, 0.01}) {
        SweepSpec s;
        s.name = label("fig2_eps", eps);
        s.base_model.tiers = {{1.0, 1.0, 1.0}};
        s.base_model.alpha = 4.0;
        s.base_model.epsilon = eps;
        s.variable = SweepVariable::Separation;
        s.grid = linear_grid(0.0, 3.0, 13);
        s.outputs = {Output::Analytic, Output::Simulated, Output::Correlation};
        s.plan.trials = kCorrelationTrials;
        s.plan.slots = 2;
        f.series.push_back(std::move(s));
    }
    return f;
}

FigurePreset fig3()
{
    SweepSpec s;
    s.name = "fig3";
    s.base_model = two_tier(2.0, 10.0, 1.0, 0.0, 3.0);
    s.variable = SweepVariable::BetaDb;
    s.tier = 1;
    s.grid = linear_grid(-4.0, 10.0, 8);
    s.outputs = {Output::Analytic, Output::Simulated, Output::Bounds};
    s.plan = success_plan(2);
    return {"fig3", {s}};
}

FigurePreset fig4()
{
    FigurePreset f{"fig4", {}};
    for (double b2 : kSeriesBeta2Db) {
        SweepSpec s;
        s.name = label("fig4_beta2_db", b2);
        s.base_model = two_tier(1.0, 10.0, 1.0, b2, 3.0);
        s.variable = SweepVariable::Density;
        s.tier = 1;
        s.grid = log_grid(0.1, 10.0, 11);
        s.outputs = {Output::Analytic, Output::Simulated, Output::Bounds};
        s.plan = success_plan(2);
        f.series.push_back(std::move(s));
    }
    return f;
}

FigurePreset fig5()
{
    FigurePreset f{"fig5", {}};
    for (double b2 : kSeriesBeta2Db) {
        SweepSpec s;
        s.name = label("fig5_beta2_db", b2);
        s.base_model = two_tier(2.0, 100.0, 1.0, b2, 3.0);
        s.variable = SweepVariable::Power;
        s.tier = 1;
        s.grid = log_grid(1.0, 100.0, 11);
        s.outputs = {Output::Analytic, Output::Simulated, Output::Bounds};
        s.plan = success_plan(2);
        f.series.push_back(std::move(s));
    }
    return f;
}

FigurePreset fig6()
{
    FigurePreset f{"fig6", {}};
    for (double alpha : {3.0, 6.0}) {
        SweepSpec s;
        s.name = label("fig6_alpha", alpha);
        s.base_model = two_tier(2.0, 10.0, 1.0, 0.0, alpha);
        s.variable = SweepVariable::Slots;
        s.grid = linear_grid(2.0, 10.0, 9);
        s.outputs = {Output::Analytic, Output::Simulated, Output::Conditional};
        s.plan = success_plan(10);
        f.series.push_back(std::move(s));
    }
    return f;
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"fig2", "fig3", "fig4", "fig5", "fig6"};
}

FigurePreset figure_preset(const std::string& name)
{
    if (name == "fig2") return fig2();
    if (name == "fig3") return fig3();
    if (name == "fig4") return fig4();
    if (name == "fig5") return fig5();
    if (name == "fig6") return fig6();
    throw DomainError("unknown preset '" + name + "' (expected fig2..fig6)");
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    if (n < 1 || !(lo > 0.0) || !(hi > 0.0)) throw DomainError("log grid needs n >= 1 and positive ends");
    if (n == 1) return {lo};
    std::vector<double> g(static_cast<std::size_t>(n));
    const double a = std::log10(lo), b = std::log10(hi);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n)
{
    if (n < 1) throw DomainError("linear grid needs n >= 1");
    if (n == 1) return {lo};
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    g.back() = hi;
    return g;
}

} // namespace hetcorr::experiments
