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

// hetcorr command-line driver.
//
//   hetcorr analytic --tier 1:10:0 --tier 2:1:-4 --alpha 3 --slots 2
//   hetcorr simulate --preset fig3 --beta2-db 0 --trials 100000 --seed 7
//   hetcorr sweep --preset fig6 --out results/
//
// Exit codes: 0 ok, 2 invalid input, 3 mode needs bounded path loss, 4 I/O.

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/corrmath/special.hpp"
#include "hetcorr/corrmath/success.hpp"
#include "hetcorr/experiments/presets.hpp"
#include "hetcorr/experiments/report.hpp"
#include "hetcorr/experiments/sweep.hpp"
#include "hetcorr/sim/estimators.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace hetcorr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitConflict = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string preset;
    std::vector<std::string> tiers;
    bool beta_linear = false;
    bool beta_db = false;
    std::optional<double> beta2_db;
    std::optional<double> alpha;
    std::optional<int> dimension;
    std::optional<double> epsilon;
    long long slots = 0; // 0: preset or 1
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    double window_radius = 0.0;
    int threads = 0;
    std::string fading = "rayleigh";
    bool no_tail_correction = false;
    std::string out;
    // simulate
    std::string mode = "joint";
    double separation = 0.0;
    // sweep
    std::string spec_file;
    bool no_sim = false;
};

std::string fmt6(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int default_threads()
{
    if (const char* env = std::getenv("HETCORR_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        throw DomainError("HETCORR_THREADS must be a positive integer");
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

TierParams parse_tier(const std::string& text, bool linear)
{
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("bad --tier '" + text + "': expected lambda:P:beta");
        }
    }
    if (parts.size() != 3) throw DomainError("bad --tier '" + text + "': expected lambda:P:beta");
    return {parts[0], parts[1], linear ? parts[2] : db_to_linear(parts[2])};
}

sim::FadingModel parse_fading(const std::string& f)
{
    if (f == "rayleigh") return sim::FadingModel::Rayleigh;
    if (f == "deterministic") return sim::FadingModel::Deterministic;
    throw DomainError("unknown fading '" + f + "'");
}

// Model and plan from either a preset's first series or explicit flags.
std::pair<NetworkModel, sim::SimPlan> resolve_config(const RunConfig& c)
{
    NetworkModel model;
    sim::SimPlan plan;
    if (c.beta_db && c.beta_linear) throw DomainError("--beta-db and --beta-linear are exclusive");
    if (!c.preset.empty()) {
        if (!c.tiers.empty() || c.alpha || c.dimension || c.epsilon)
            throw DomainError("--preset excludes --tier/--alpha/--dim/--epsilon");
        const auto preset = experiments::figure_preset(c.preset);
        const auto& first = preset.series.front();
        model = first.base_model;
        plan = first.plan;
        if (c.beta2_db) {
            if (model.tier_count() < 2) throw DomainError("--beta2-db needs a preset with two tiers");
            model.tiers[1].threshold = db_to_linear(*c.beta2_db);
        }
    } else {
        if (c.tiers.empty()) throw DomainError("give --preset or at least one --tier");
        if (c.beta2_db) throw DomainError("--beta2-db applies to presets; use --tier");
        for (const auto& t : c.tiers) model.tiers.push_back(parse_tier(t, c.beta_linear));
        if (c.alpha) model.alpha = *c.alpha;
        if (c.dimension) model.dimension = *c.dimension;
        if (c.epsilon) model.epsilon = *c.epsilon;
        plan.slots = 1;
    }
    if (c.slots > 0) plan.slots = c.slots;
    if (c.trials) plan.trials = *c.trials;
    if (c.seed) plan.master_seed = *c.seed;
    plan.window_radius = c.window_radius;
    plan.parallelism = c.threads > 0 ? c.threads : default_threads();
    plan.fading = parse_fading(c.fading);
    plan.tail_correction = !c.no_tail_correction;
    validate(model);
    sim::validate(plan);
    return {model, plan};
}

void print_model(std::ostream& out, const NetworkModel& m)
{
    out << "model: K=" << m.tier_count() << " alpha=" << fmt6(m.alpha) << " dim=" << m.dimension
        << " epsilon=" << fmt6(m.epsilon) << " delta=" << fmt6(delta(m)) << '\n';
    for (std::size_t k = 0; k < m.tier_count(); ++k) {
        const auto& t = m.tiers[k];
        out << "  tier " << k + 1 << ": lambda=" << fmt6(t.density) << " P=" << fmt6(t.power)
            << " beta=" << fmt6(t.threshold) << " (" << fmt6(linear_to_db(t.threshold)) << " dB)\n";
    }
}

void print_plan(std::ostream& out, const sim::SimPlan& p)
{
    out << "plan: trials=" << p.trials << " slots=" << p.slots << " seed=" << p.master_seed
        << " window_radius=" << fmt6(p.window_radius) << " threads=" << p.parallelism
        << " fading=" << (p.fading == sim::FadingModel::Rayleigh ? "rayleigh" : "deterministic")
        << " tail_correction=" << (p.tail_correction ? "on" : "off") << '\n';
}

void print_estimate(std::ostream& out, const char* label, const sim::Estimate& e, double analytic)
{
    out << label << ": ";
    if (!e.defined) {
        out << "undefined (trials=" << e.trials << ") analytic=" << fmt6(analytic) << '\n';
        return;
    }
    out << "sim=" << fmt6(e.value) << " se=" << fmt6(e.std_error) << " ci95=[" << fmt6(e.ci_low) << ", "
        << fmt6(e.ci_high) << "] analytic=" << fmt6(analytic) << " z=" << fmt6(e.z_score(analytic)) << '\n';
}

std::ofstream open_out(const fs::path& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    return f;
}

int cmd_analytic(const RunConfig& c)
{
    auto [model, plan] = resolve_config(c);
    const long long n = plan.slots;
    print_model(std::cout, model);
    std::cout << "slots: n=" << n << '\n';
    if (approximate_regime(model)) std::cout << "flag: " << experiments::kApproximateFlag << " (some beta <= 1)\n";

    const double d = delta(model);
    std::cout << "p(1) = " << fmt6(joint_success(model, 1).probability) << '\n';
    std::cout << "p(n) = " << fmt6(joint_success(model, n).probability) << '\n';
    const auto b = joint_success_bounds(model, n);
    std::cout << "bounds: lower=" << fmt6(b.lower) << " upper=" << fmt6(b.upper) << '\n';
    std::cout << "diversity D_n = " << fmt6(diversity_polynomial(n, d)) << '\n';
    if (n >= 2) std::cout << "conditional P(success n | 1..n-1) = " << fmt6(conditional_success(n, d)) << '\n';
    if (model.tier_count() >= 2)
        for (std::size_t m = 0; m < model.tier_count(); ++m) {
            const auto v = monotonicity_verdict(model, m);
            std::cout << "tier " << m + 1 << " density/power verdict: " << to_string(v.direction)
                      << " (margin " << fmt6(v.margin) << ")\n";
        }
    const FadingMoments fm = sim::moments_of(plan.fading);
    std::cout << "temporal correlation rho_t = " << fmt6(temporal_corr_coefficient(fm)) << '\n';
    if (model.bounded()) {
        std::cout << "interference mean = " << fmt6(interference_mean(model, fm)) << '\n';
        std::cout << "interference variance = " << fmt6(interference_variance(model, fm)) << '\n';
        if (c.separation > 0.0)
            std::cout << "spatial correlation rho(" << fmt6(c.separation)
                      << ") = " << fmt6(spatial_corr_coefficient(model, c.separation, fm)) << '\n';
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& c)
{
    auto [model, plan] = resolve_config(c);
    if ((c.mode == "correlation" || c.mode == "moments") && !model.bounded())
        throw SingularPathLossError("mode '" + c.mode + "' needs --epsilon > 0");
    if (c.mode != "joint" && c.mode != "conditional" && c.mode != "correlation" && c.mode != "moments")
        throw DomainError("unknown --mode '" + c.mode + "'");
    if (!(c.separation >= 0.0)) throw DomainError("--separation must be >= 0");

    const double max_sep = c.mode == "correlation" ? c.separation : 0.0;
    const sim::SimPlan shown = sim::resolve(model, plan, max_sep);
    print_model(std::cout, model);
    print_plan(std::cout, shown);
    std::cout << "mode: " << c.mode;
    if (c.mode == "correlation") std::cout << " separation=" << fmt6(c.separation);
    std::cout << '\n';
    if (approximate_regime(model)) std::cout << "flag: " << experiments::kApproximateFlag << '\n';

    experiments::SweepRow row;
    const FadingMoments fm = sim::moments_of(plan.fading);
    if (c.mode == "joint") {
        const auto js = joint_success(model, plan.slots);
        const auto b = joint_success_bounds(model, plan.slots);
        row.sweep_value = static_cast<double>(plan.slots);
        row.analytic = js.probability;
        row.lower_bound = b.lower;
        row.upper_bound = b.upper;
        row.sim = sim::estimate_joint_success(model, plan);
        print_estimate(std::cout, "joint success", *row.sim, js.probability);
    } else if (c.mode == "conditional") {
        if (plan.slots < 2) throw DomainError("conditional mode needs --slots >= 2");
        row.sweep_value = static_cast<double>(plan.slots);
        row.analytic = conditional_success(plan.slots, delta(model));
        row.sim = sim::estimate_conditional_success(model, plan, plan.slots);
        print_estimate(std::cout, "conditional success", *row.sim, *row.analytic);
    } else if (c.mode == "correlation") {
        row.sweep_value = c.separation;
        row.analytic = spatial_corr_coefficient(model, c.separation, fm);
        const auto mode = c.separation > 0.0 ? sim::CorrelationMode::Spatiotemporal : sim::CorrelationMode::Temporal;
        row.sim = sim::estimate_corr_coefficient(model, plan, c.separation, mode);
        print_estimate(std::cout, "correlation", *row.sim, *row.analytic);
    } else {
        const auto mom = sim::estimate_interference_moments(model, plan);
        const double mean = interference_mean(model, fm);
        print_estimate(std::cout, "interference mean", mom.mean, mean);
        print_estimate(std::cout, "interference variance", mom.variance, interference_variance(model, fm));
        row.analytic = mean;
        row.sim = mom.mean;
    }
    if (approximate_regime(model)) row.flags.insert(experiments::kApproximateFlag);

    if (!c.out.empty()) {
        auto f = open_out(c.out);
        experiments::write_csv(f, {row});
        if (!f) throw IoError("failed writing " + c.out);
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& c)
{
    std::vector<experiments::SweepSpec> series;
    std::string name;
    if (!c.preset.empty() && !c.spec_file.empty()) throw DomainError("--preset and --spec are exclusive");
    if (!c.tiers.empty() || c.alpha || c.dimension || c.epsilon || c.beta2_db)
        throw DomainError("sweep takes its model from --preset or --spec");
    if (!c.preset.empty()) {
        auto p = experiments::figure_preset(c.preset);
        name = p.name;
        series = std::move(p.series);
    } else if (!c.spec_file.empty()) {
        std::ifstream f(c.spec_file);
        if (!f) throw IoError("cannot read " + c.spec_file);
        std::stringstream text;
        text << f.rdbuf();
        series.push_back(experiments::spec_from_json(text.str()));
        name = series.front().name.empty() ? "sweep" : series.front().name;
        if (series.front().name.empty()) series.front().name = name;
    } else {
        throw DomainError("sweep needs --preset or --spec");
    }

    const int threads = c.threads > 0 ? c.threads : default_threads();
    for (auto& s : series) {
        if (c.trials) s.plan.trials = *c.trials;
        if (c.seed) s.plan.master_seed = *c.seed;
        if (c.window_radius > 0.0) s.plan.window_radius = c.window_radius;
        s.plan.parallelism = threads;
        if (c.no_sim) s.outputs.erase(experiments::Output::Simulated);
        experiments::validate(s);
    }

    const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<experiments::ComparisonReport> parts;
    int violations = 0;
    for (const auto& s : series) {
        std::cout << "series " << s.name << ":\n" << experiments::spec_to_json(s) << '\n';
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = experiments::run_sweep(s);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const fs::path csv = dir / (s.name + ".csv");
        auto f = open_out(csv);
        experiments::write_csv(f, rows);
        f.close();
        if (!f) throw IoError("failed writing " + csv.string());

        for (const auto& r : rows)
            for (const auto& flag : r.flags)
                if (flag.rfind("error:", 0) == 0) std::cout << "  row " << fmt6(r.sweep_value) << ": " << flag << '\n';

        experiments::ComparisonReport rep;
        if (s.wants(experiments::Output::Simulated) && s.wants(experiments::Output::Analytic)) {
            try {
                rep = experiments::compare_report(rows, s.name);
            } catch (const DomainError& e) {
                std::cout << "  comparison skipped: " << e.what() << '\n';
                rep.name = s.name;
                rep.bound_violations = experiments::count_bound_violations(rows);
            }
        } else {
            rep.name = s.name;
            rep.bound_violations = experiments::count_bound_violations(rows);
        }
        rep.runtime_seconds = secs;
        violations += rep.bound_violations;
        experiments::write_report_text(std::cout, rep);
        std::cout << "  wrote " << csv.string() << '\n';
        parts.push_back(std::move(rep));
    }

    const auto total = experiments::combine(parts, name);
    experiments::write_report_text(std::cout, total);
    const fs::path json = dir / (name + "_report.json");
    auto f = open_out(json);
    experiments::write_report_json(f, total, parts);
    f.close();
    if (!f) throw IoError("failed writing " + json.string());
    std::cout << "wrote " << json.string() << '\n';
    return violations == 0 ? kExitOk : 1;
}

void add_common(CLI::App* app, RunConfig& c, bool model_flags)
{
    if (model_flags) {
        app->add_option("--tier", c.tiers, "Tier as lambda:P:beta (beta in dB unless --beta-linear); repeat per tier");
        app->add_flag("--beta-db", c.beta_db, "Thresholds in --tier are in dB (default)");
        app->add_flag("--beta-linear", c.beta_linear, "Thresholds in --tier are linear");
        app->add_option("--beta2-db", c.beta2_db, "Override the tier-2 threshold of a preset, in dB");
        app->add_option("--alpha", c.alpha, "Path-loss exponent (default 4)");
        app->add_option("--dim", c.dimension, "Spatial dimension 1..3 (default 2)");
        app->add_option("--epsilon", c.epsilon, "Bounded path-loss offset (default 0)");
        app->add_option("--slots", c.slots, "Number of slots n");
    }
    app->add_option("--preset", c.preset, "Figure preset: fig2..fig6");
    app->add_option("--trials", c.trials, "Monte Carlo trials");
    app->add_option("--seed", c.seed, "Master seed (default: preset or 1)");
    app->add_option("--window-radius", c.window_radius, "Simulation window radius (0: automatic)");
    app->add_option("--threads", c.threads, "Worker threads (default: HETCORR_THREADS or all cores)");
    app->add_option("--out", c.out, "Output CSV file (simulate) or directory (sweep)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hetcorr: joint success and interference correlation in K-tier networks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analytic = app.add_subcommand("analytic", "Evaluate the closed forms");
    add_common(analytic, cfg, true);
    analytic->add_option("--separation", cfg.separation, "Also report spatial correlation at this separation");
    analytic->add_option("--fading", cfg.fading, "rayleigh or deterministic");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate next to the closed form");
    add_common(simulate, cfg, true);
    simulate->add_option("--mode", cfg.mode, "joint, conditional, correlation or moments");
    simulate->add_option("--separation", cfg.separation, "Receiver separation for correlation mode");
    simulate->add_option("--fading", cfg.fading, "rayleigh or deterministic");
    simulate->add_flag("--no-tail-correction", cfg.no_tail_correction, "Drop the far-field mean interference");

    auto* sweep = app.add_subcommand("sweep", "Run a figure preset or a JSON sweep spec");
    add_common(sweep, cfg, false);
    sweep->add_option("--spec", cfg.spec_file, "JSON sweep spec file");
    sweep->add_flag("--no-sim", cfg.no_sim, "Closed forms and bounds only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*analytic) return cmd_analytic(cfg);
        if (*simulate) return cmd_simulate(cfg);
        return cmd_sweep(cfg);
    } catch (const SingularPathLossError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConflict;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
