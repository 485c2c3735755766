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

#include "hetcorr/sim/estimators.hpp"

#include "hetcorr/corrmath/correlation.hpp"
#include "hetcorr/corrmath/errors.hpp"
#include "hetcorr/sim/parallel.hpp"
#include "hetcorr/sim/realization.hpp"
#include "hetcorr/sim/rng.hpp"

#include <cmath>
#include <random>

namespace hetcorr::sim {
namespace {

// Path loss from a squared distance. Integer exponents (all figure setups)
// avoid pow: r^a is r2^(a/2), times sqrt(r2) when a is odd.
struct RadialPathLoss {
    double half_alpha;
    double epsilon;
    int int_alpha; // 0 when alpha is not an integer below 16

    double distance_power(double r2) const noexcept
    {
        if (int_alpha == 0) return std::pow(r2, half_alpha);
        double p = 1.0;
        for (int k = 0; k < int_alpha / 2; ++k) p *= r2;
        return (int_alpha & 1) ? p * std::sqrt(r2) : p;
    }

    double from_squared(double r2) const noexcept
    {
        return 1.0 / (distance_power(r2) + epsilon);
    }
};

RadialPathLoss radial_path_loss(const NetworkModel& model)
{
    const double a = model.alpha;
    const bool integral = a == std::floor(a) && a < 16.0;
    return {0.5 * a, model.epsilon, integral ? static_cast<int>(a) : 0};
}

double tail_for(const NetworkModel& model, const SimPlan& plan)
{
    if (!plan.tail_correction) return 0.0;
    return tail_interference(model, plan.window_radius) * moments_of(plan.fading).mean;
}

void require_bounded(const NetworkModel& model)
{
    if (!model.bounded())
        throw SingularPathLossError("interference moments and correlation need bounded path loss (epsilon > 0)");
}

struct SuccessWorkspace {
    std::vector<double> signal;    // point-major, slots per point
    std::vector<double> threshold; // per point
    std::vector<double> total;     // per slot
};

// Longest prefix of slots that a single BS clears, maximized over BSs.
int best_success_run(const NetworkModel& model, const SimPlan& plan, std::uint64_t trial,
                     double tail, SuccessWorkspace& ws)
{
    const auto slots = static_cast<std::size_t>(plan.slots);
    const RadialPathLoss g = radial_path_loss(model);
    const double r2_scale = plan.window_radius * plan.window_radius;

    ws.signal.clear();
    ws.threshold.clear();
    ws.total.assign(slots, tail);

    for (std::size_t k = 0; k < model.tier_count(); ++k) {
        const auto& tier = model.tiers[k];
        const auto count = sampling::point_count(model, plan, trial, k);
        const CounterRng radius(stream_key(plan.master_seed, trial, Stream::Radius, k));
        const CounterRng fading(stream_key(plan.master_seed, trial, Stream::Fading, k));
        for (std::int64_t j = 0; j < count; ++j) {
            const auto idx = static_cast<std::uint64_t>(j);
            double gain;
            if (model.dimension == 2) {
                gain = g.from_squared(r2_scale * radius.uniform_at(idx));
            } else {
                const double r = sampling::point_radius(radius, idx, plan.window_radius, model.dimension);
                gain = g.from_squared(r * r);
            }
            const double mean_rx = tier.power * gain;
            for (std::size_t t = 0; t < slots; ++t) {
                const double s = mean_rx * sampling::fading_draw(fading, idx, t, plan.fading);
                ws.signal.push_back(s);
                ws.total[t] += s;
            }
            ws.threshold.push_back(tier.threshold);
        }
    }

    int best = 0;
    const std::size_t points = ws.threshold.size();
    for (std::size_t j = 0; j < points; ++j) {
        const double* s = &ws.signal[j * slots];
        const double beta = ws.threshold[j];
        std::size_t run = 0;
        while (run < slots) {
            const double interference = ws.total[run] - s[run];
            // SIR > beta; a BS with nothing else in range has infinite SIR
            if (interference > 0.0 && !(s[run] > beta * interference)) break;
            ++run;
        }
        best = std::max(best, static_cast<int>(run));
        if (best == static_cast<int>(slots)) break;
    }
    return best;
}

} // namespace

SuccessCounts success_prefix_counts(const NetworkModel& model, const SimPlan& plan_in)
{
    validate(model);
    const SimPlan plan = resolve(model, plan_in);
    const double tail = tail_for(model, plan);

    std::vector<int> best(static_cast<std::size_t>(plan.trials));
    parallel_for_trials(plan.trials, plan.parallelism, [] { return SuccessWorkspace{}; },
                        [&](std::int64_t i, SuccessWorkspace& ws) {
                            best[static_cast<std::size_t>(i)] =
                                best_success_run(model, plan, static_cast<std::uint64_t>(i), tail, ws);
                        });

    SuccessCounts counts;
    counts.trials = plan.trials;
    counts.at_least.assign(static_cast<std::size_t>(plan.slots) + 1, 0);
    for (int b : best)
        for (int k = 0; k <= b; ++k) ++counts.at_least[static_cast<std::size_t>(k)];
    return counts;
}

Estimate estimate_joint_success(const NetworkModel& model, const SimPlan& plan)
{
    const SuccessCounts counts = success_prefix_counts(model, plan);
    return bernoulli_estimate(counts.at_least.back(), counts.trials);
}

Estimate conditional_from_counts(const SuccessCounts& counts, long long n,
                                 std::uint64_t bootstrap_seed, int resamples)
{
    if (n < 2) throw DomainError("conditional success needs n >= 2");
    if (static_cast<std::size_t>(n) >= counts.at_least.size())
        throw DomainError("conditional success needs counts for n slots");
    if (resamples < 2) throw DomainError("bootstrap needs at least two resamples");

    const std::int64_t trials = counts.trials;
    const std::int64_t both = counts.at_least[static_cast<std::size_t>(n)];
    const std::int64_t first = counts.at_least[static_cast<std::size_t>(n - 1)];
    if (first == 0) return undefined_estimate(trials);
    const double ratio = static_cast<double>(both) / static_cast<double>(first);

    // Each trial falls in one of three cells: failed early, passed n-1 only,
    // passed all n. Resampling trials with replacement is a multinomial draw
    // over those cells.
    const double p_both = static_cast<double>(both) / trials;
    const std::int64_t only_first = first - both;
    const std::int64_t rest = trials - both;
    const double p_only_given_rest = rest > 0 ? static_cast<double>(only_first) / rest : 0.0;

    CounterRng rng(stream_key(bootstrap_seed, static_cast<std::uint64_t>(n), Stream::Bootstrap));
    double sum = 0.0, sum_sq = 0.0;
    int used = 0;
    for (int b = 0; b < resamples; ++b) {
        std::binomial_distribution<std::int64_t> draw_both(trials, p_both);
        const std::int64_t nb = draw_both(rng);
        std::binomial_distribution<std::int64_t> draw_only(trials - nb, p_only_given_rest);
        const std::int64_t no = draw_only(rng);
        if (nb + no == 0) continue;
        const double r = static_cast<double>(nb) / static_cast<double>(nb + no);
        sum += r;
        sum_sq += r * r;
        ++used;
    }
    if (used < 2) return undefined_estimate(trials);
    const double mean = sum / used;
    const double var = std::max(0.0, (sum_sq - used * mean * mean) / (used - 1));
    return make_probability_estimate(ratio, std::sqrt(var), trials);
}

Estimate estimate_conditional_success(const NetworkModel& model, const SimPlan& plan, long long n)
{
    if (n < 2) throw DomainError("conditional success needs n >= 2");
    SimPlan p = plan;
    p.slots = n;
    const SuccessCounts counts = success_prefix_counts(model, p);
    return conditional_from_counts(counts, n, plan.master_seed);
}

InterferenceMoments estimate_interference_moments(const NetworkModel& model, const SimPlan& plan_in)
{
    validate(model);
    require_bounded(model);
    const SimPlan plan = resolve(model, plan_in);
    const double tail = tail_for(model, plan);
    const RadialPathLoss g = radial_path_loss(model);
    const double window = plan.window_radius;

    std::vector<double> samples(static_cast<std::size_t>(plan.trials));
    parallel_for_trials(plan.trials, plan.parallelism, [] { return 0; },
                        [&](std::int64_t i, int&) {
                            const auto trial = static_cast<std::uint64_t>(i);
                            double total = tail;
                            for (std::size_t k = 0; k < model.tier_count(); ++k) {
                                const auto count = sampling::point_count(model, plan, trial, k);
                                const CounterRng radius(stream_key(plan.master_seed, trial, Stream::Radius, k));
                                const CounterRng fading(stream_key(plan.master_seed, trial, Stream::Fading, k));
                                double tier_sum = 0.0;
                                for (std::int64_t j = 0; j < count; ++j) {
                                    const auto idx = static_cast<std::uint64_t>(j);
                                    const double r = sampling::point_radius(radius, idx, window, model.dimension);
                                    tier_sum += g.from_squared(r * r) *
                                                sampling::fading_draw(fading, idx, 0, plan.fading);
                                }
                                total += model.tiers[k].power * tier_sum;
                            }
                            samples[static_cast<std::size_t>(i)] = total;
                        });
    return {mean_estimate(samples), variance_estimate(samples)};
}

InterferencePairs sample_interference_pairs(const NetworkModel& model, const SimPlan& plan_in,
                                            double separation)
{
    validate(model);
    require_bounded(model);
    if (!(separation >= 0.0) || !std::isfinite(separation))
        throw DomainError("separation must be finite and >= 0");
    SimPlan plan = resolve(model, plan_in, separation);
    if (plan.slots < 2) plan.slots = 2;
    const double tail = tail_for(model, plan);
    const double window = plan.window_radius;
    const RadialPathLoss g = radial_path_loss(model);

    InterferencePairs out;
    out.at_u.resize(static_cast<std::size_t>(plan.trials));
    out.at_v.resize(static_cast<std::size_t>(plan.trials));
    parallel_for_trials(plan.trials, plan.parallelism, [] { return 0; },
                        [&](std::int64_t i, int&) {
                            const auto trial = static_cast<std::uint64_t>(i);
                            double iu = tail, iv = tail;
                            for (std::size_t k = 0; k < model.tier_count(); ++k) {
                                const auto count = sampling::point_count(model, plan, trial, k);
                                const CounterRng radius(stream_key(plan.master_seed, trial, Stream::Radius, k));
                                const CounterRng direction(stream_key(plan.master_seed, trial, Stream::Direction, k));
                                const CounterRng fading(stream_key(plan.master_seed, trial, Stream::Fading, k));
                                const double power = model.tiers[k].power;
                                for (std::int64_t j = 0; j < count; ++j) {
                                    const auto idx = static_cast<std::uint64_t>(j);
                                    const double r = sampling::point_radius(radius, idx, window, model.dimension);
                                    const double r2 = r * r;
                                    double dv2 = r2;
                                    if (separation > 0.0) {
                                        // v sits on the first axis
                                        const Location dir = sampling::point_direction(direction, idx, model.dimension);
                                        dv2 = std::max(0.0, r2 - 2.0 * separation * r * dir[0] + separation * separation);
                                    }
                                    iu += power * g.from_squared(r2) * sampling::fading_draw(fading, idx, 0, plan.fading);
                                    iv += power * g.from_squared(dv2) * sampling::fading_draw(fading, idx, 1, plan.fading);
                                }
                            }
                            out.at_u[static_cast<std::size_t>(i)] = iu;
                            out.at_v[static_cast<std::size_t>(i)] = iv;
                        });
    return out;
}

Estimate estimate_corr_coefficient(const NetworkModel& model, const SimPlan& plan,
                                   double separation, CorrelationMode mode)
{
    require_bounded(model);
    if (mode == CorrelationMode::Temporal && separation != 0.0)
        throw DomainError("temporal correlation is measured at zero separation");
    if (mode == CorrelationMode::Spatiotemporal && !(separation > 0.0))
        throw DomainError("spatiotemporal correlation needs a positive separation");
    const InterferencePairs pairs = sample_interference_pairs(model, plan, separation);
    return correlation_estimate(pairs.at_u, pairs.at_v);
}

} // namespace hetcorr::sim
