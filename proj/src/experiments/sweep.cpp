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

#include "hetcorr/experiments/sweep.hpp"

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/corrmath/success.hpp"
#include "hetcorr/sim/estimators.hpp"
#include "hetcorr/sim/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hetcorr::experiments {
namespace {

bool per_tier(SweepVariable v)
{
    return v == SweepVariable::BetaDb || v == SweepVariable::Density || v == SweepVariable::Power;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void fill_success_row(const SweepSpec& spec, std::size_t index, double value, SweepRow& row)
{
    const NetworkModel m = model_at(spec, value);
    const long long n = slots_at(spec, value);
    if (spec.wants(Output::Analytic)) {
        const JointSuccess js = joint_success(m, n);
        row.analytic = js.probability;
        if (js.approximate_regime) row.flags.insert(kApproximateFlag);
    }
    if (spec.wants(Output::Bounds)) {
        const SuccessBounds b = joint_success_bounds(m, n);
        row.lower_bound = b.lower;
        row.upper_bound = b.upper;
        if (b.approximate_regime) row.flags.insert(kApproximateFlag);
    }
    if (spec.wants(Output::Simulated)) {
        sim::SimPlan p = spec.plan;
        p.slots = n;
        p.master_seed = row_seed(spec.plan.master_seed, index);
        row.sim = sim::estimate_joint_success(m, p);
    }
}

void fill_correlation_row(const SweepSpec& spec, std::size_t index, double value, SweepRow& row)
{
    const NetworkModel m = model_at(spec, value);
    const double tau = spec.variable == SweepVariable::Separation ? value : spec.separation;
    if (spec.wants(Output::Analytic))
        row.analytic = spatial_corr_coefficient(m, tau, sim::moments_of(spec.plan.fading));
    if (spec.wants(Output::Simulated)) {
        sim::SimPlan p = spec.plan;
        p.master_seed = row_seed(spec.plan.master_seed, index);
        const auto mode = tau > 0.0 ? sim::CorrelationMode::Spatiotemporal : sim::CorrelationMode::Temporal;
        row.sim = sim::estimate_corr_coefficient(m, p, tau, mode);
    }
}

void fill_conditional_row(const SweepSpec& spec, std::size_t index, double value, SweepRow& row,
                          const std::optional<sim::SuccessCounts>& shared)
{
    const NetworkModel m = model_at(spec, value);
    const long long n = slots_at(spec, value);
    if (spec.wants(Output::Analytic)) row.analytic = conditional_success(n, delta(m));
    if (approximate_regime(m)) row.flags.insert(kApproximateFlag);
    if (spec.wants(Output::Simulated)) {
        if (shared) {
            row.sim = sim::conditional_from_counts(*shared, n, spec.plan.master_seed);
        } else {
            sim::SimPlan p = spec.plan;
            p.master_seed = row_seed(spec.plan.master_seed, index);
            row.sim = sim::estimate_conditional_success(m, p, n);
        }
    }
}

} // namespace

const char* to_string(SweepVariable v) noexcept
{
    switch (v) {
    case SweepVariable::BetaDb: return "beta_db";
    case SweepVariable::Density: return "density";
    case SweepVariable::Power: return "power";
    case SweepVariable::Separation: return "separation";
    case SweepVariable::Slots: return "slots";
    case SweepVariable::Alpha: return "alpha";
    case SweepVariable::Epsilon: return "epsilon";
    }
    return "?";
}

const char* to_string(Output o) noexcept
{
    switch (o) {
    case Output::Analytic: return "analytic";
    case Output::Simulated: return "simulated";
    case Output::Bounds: return "bounds";
    case Output::Conditional: return "conditional";
    case Output::Correlation: return "correlation";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& s)
{
    for (auto v : {SweepVariable::BetaDb, SweepVariable::Density, SweepVariable::Power,
                   SweepVariable::Separation, SweepVariable::Slots, SweepVariable::Alpha,
                   SweepVariable::Epsilon})
        if (s == to_string(v)) return v;
    throw DomainError("unknown sweep variable '" + s + "'");
}

Output output_from_string(const std::string& s)
{
    for (auto o : {Output::Analytic, Output::Simulated, Output::Bounds, Output::Conditional,
                   Output::Correlation})
        if (s == to_string(o)) return o;
    throw DomainError("unknown sweep output '" + s + "'");
}

void validate(const SweepSpec& spec)
{
    validate(spec.base_model);
    sim::validate(spec.plan);
    if (spec.grid.empty()) throw DomainError("sweep grid is empty");
    for (double v : spec.grid)
        if (!std::isfinite(v)) throw DomainError("sweep grid holds a non-finite value");
    if (spec.grid.size() > 1) {
        const bool up = spec.grid[1] > spec.grid[0];
        for (std::size_t i = 1; i < spec.grid.size(); ++i)
            if (up ? !(spec.grid[i] > spec.grid[i - 1]) : !(spec.grid[i] < spec.grid[i - 1]))
                throw DomainError("sweep grid must be strictly monotone");
    }
    if (per_tier(spec.variable) && spec.tier >= spec.base_model.tier_count())
        throw DomainError("sweep tier index out of range");
    if (spec.outputs.empty()) throw DomainError("sweep requests no outputs");
    if (spec.wants(Output::Conditional) && spec.wants(Output::Correlation))
        throw DomainError("a sweep reports either conditional success or correlation, not both");

    if (spec.wants(Output::Correlation)) {
        if (spec.wants(Output::Bounds)) throw DomainError("bounds apply to joint success only");
        if (spec.variable == SweepVariable::Slots || spec.variable == SweepVariable::BetaDb)
            throw DomainError("correlation does not depend on slots or thresholds");
        for (double v : spec.grid)
            if (!model_at(spec, v).bounded())
                throw DomainError("correlation requires bounded path loss (epsilon > 0)");
    }
    if (spec.wants(Output::Conditional) && spec.wants(Output::Bounds))
        throw DomainError("bounds apply to joint success only");
    if (spec.variable == SweepVariable::Separation && !spec.wants(Output::Correlation))
        throw DomainError("separation sweeps need the correlation output");
    if (spec.variable == SweepVariable::Slots) {
        for (double v : spec.grid)
            if (v != std::floor(v) || v < 1.0) throw DomainError("slot grid must hold positive integers");
        if (spec.wants(Output::Conditional))
            for (double v : spec.grid)
                if (v < 2.0) throw DomainError("conditional success needs n >= 2");
    }
    if (spec.variable == SweepVariable::Epsilon)
        for (double v : spec.grid)
            if (v < 0.0) throw DomainError("epsilon grid must be >= 0");
    for (double v : spec.grid) validate(model_at(spec, v));
}

NetworkModel model_at(const SweepSpec& spec, double value)
{
    NetworkModel m = spec.base_model;
    switch (spec.variable) {
    case SweepVariable::BetaDb: m.tiers.at(spec.tier).threshold = db_to_linear(value); break;
    case SweepVariable::Density: m.tiers.at(spec.tier).density = value; break;
    case SweepVariable::Power: m.tiers.at(spec.tier).power = value; break;
    case SweepVariable::Alpha: m.alpha = value; break;
    case SweepVariable::Epsilon: m.epsilon = value; break;
    case SweepVariable::Separation:
    case SweepVariable::Slots: break;
    }
    return m;
}

long long slots_at(const SweepSpec& spec, double value)
{
    if (spec.variable == SweepVariable::Slots) return std::llround(value);
    return spec.plan.slots;
}

std::uint64_t row_seed(std::uint64_t master_seed, std::size_t row) noexcept
{
    return sim::mix64(master_seed + 0x632be59bd9b4e019ULL * (row + 1));
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec)
{
    validate(spec);

    // A slot sweep of conditional success reads every n off one run.
    std::optional<sim::SuccessCounts> shared;
    if (spec.wants(Output::Conditional) && spec.wants(Output::Simulated) &&
        spec.variable == SweepVariable::Slots) {
        sim::SimPlan p = spec.plan;
        double n_max = 0;
        for (double v : spec.grid) n_max = std::max(n_max, v);
        p.slots = std::llround(n_max);
        shared = sim::success_prefix_counts(spec.base_model, p);
    }

    std::vector<SweepRow> rows;
    rows.reserve(spec.grid.size());
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        SweepRow row;
        row.sweep_value = spec.grid[i];
        try {
            if (spec.wants(Output::Correlation))
                fill_correlation_row(spec, i, row.sweep_value, row);
            else if (spec.wants(Output::Conditional))
                fill_conditional_row(spec, i, row.sweep_value, row, shared);
            else
                fill_success_row(spec, i, row.sweep_value, row);
        } catch (const std::exception& e) {
            row.flags.insert(std::string("error:") + e.what());
        }
        if (row.sim && !row.sim->defined) row.flags.insert("sim-undefined");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string spec_to_json(const SweepSpec& spec)
{
    nlohmann::json tiers = nlohmann::json::array();
    for (const auto& t : spec.base_model.tiers)
        tiers.push_back({{"density", t.density}, {"power", t.power}, {"threshold", t.threshold}});
    nlohmann::json outputs = nlohmann::json::array();
    for (Output o : spec.outputs) outputs.push_back(to_string(o));
    const auto& p = spec.plan;
    nlohmann::json j = {
        {"name", spec.name},
        {"model", {{"tiers", tiers},
                   {"alpha", spec.base_model.alpha},
                   {"dimension", spec.base_model.dimension},
                   {"epsilon", spec.base_model.epsilon}}},
        {"variable", to_string(spec.variable)},
        {"tier", spec.tier},
        {"grid", spec.grid},
        {"outputs", outputs},
        {"separation", spec.separation},
        {"plan", {{"window_radius", p.window_radius},
                  {"trials", p.trials},
                  {"slots", p.slots},
                  {"master_seed", p.master_seed},
                  {"parallelism", p.parallelism},
                  {"fading", p.fading == sim::FadingModel::Rayleigh ? "rayleigh" : "deterministic"},
                  {"tail_correction", p.tail_correction}}},
    };
    return j.dump(2);
}

namespace {

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> known, const char* where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw DomainError(std::string("unknown key '") + it.key() + "' in " + where);
    }
}

template <class T>
void read(const nlohmann::json& obj, const char* key, T& out)
{
    if (obj.contains(key)) out = obj.at(key).get<T>();
}

} // namespace

SweepSpec spec_from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object()) throw DomainError("sweep spec must be a JSON object");
        reject_unknown(j, {"name", "model", "variable", "tier", "grid", "outputs", "separation", "plan"}, "spec");
        SweepSpec s;
        read(j, "name", s.name);
        if (!j.contains("model")) throw DomainError("sweep spec needs a model");
        const auto& m = j.at("model");
        reject_unknown(m, {"tiers", "alpha", "dimension", "epsilon"}, "model");
        for (const auto& t : m.at("tiers")) {
            reject_unknown(t, {"density", "power", "threshold"}, "tier");
            s.base_model.tiers.push_back({t.at("density").get<double>(), t.at("power").get<double>(),
                                          t.at("threshold").get<double>()});
        }
        read(m, "alpha", s.base_model.alpha);
        read(m, "dimension", s.base_model.dimension);
        read(m, "epsilon", s.base_model.epsilon);
        s.variable = sweep_variable_from_string(j.at("variable").get<std::string>());
        read(j, "tier", s.tier);
        read(j, "grid", s.grid);
        for (const auto& o : j.at("outputs")) s.outputs.insert(output_from_string(o.get<std::string>()));
        read(j, "separation", s.separation);
        if (j.contains("plan")) {
            const auto& p = j.at("plan");
            reject_unknown(p, {"window_radius", "trials", "slots", "master_seed", "parallelism", "fading",
                               "tail_correction"}, "plan");
            read(p, "window_radius", s.plan.window_radius);
            read(p, "trials", s.plan.trials);
            read(p, "slots", s.plan.slots);
            read(p, "master_seed", s.plan.master_seed);
            read(p, "parallelism", s.plan.parallelism);
            read(p, "tail_correction", s.plan.tail_correction);
            if (p.contains("fading")) {
                const auto f = p.at("fading").get<std::string>();
                if (f == "rayleigh") s.plan.fading = sim::FadingModel::Rayleigh;
                else if (f == "deterministic") s.plan.fading = sim::FadingModel::Deterministic;
                else throw DomainError("unknown fading '" + f + "'");
            }
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed sweep spec: ") + e.what());
    }
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "sweep_value,analytic,sim_mean,sim_stderr,ci_lo,ci_hi,lower_bound,upper_bound,flags\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    for (const auto& r : rows) {
        out << format_number(r.sweep_value) << ',' << opt(r.analytic) << ',';
        if (r.sim && r.sim->defined)
            out << format_number(r.sim->value) << ',' << format_number(r.sim->std_error) << ','
                << format_number(r.sim->ci_low) << ',' << format_number(r.sim->ci_high) << ',';
        else
            out << ",,,,";
        out << opt(r.lower_bound) << ',' << opt(r.upper_bound) << ',';
        bool first = true;
        for (const auto& f : r.flags) {
            std::string clean = f;
            for (char& c : clean)
                if (c == ',' || c == '\n' || c == '"') c = ' ';
            out << (first ? "" : ";") << clean;
            first = false;
        }
        out << '\n';
    }
}

} // namespace hetcorr::experiments
