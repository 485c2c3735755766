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

#include "hetcorr/corrmath/model.hpp"
#include "hetcorr/sim/estimate.hpp"
#include "hetcorr/sim/plan.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hetcorr::experiments {

enum class SweepVariable {
    BetaDb,     ///< threshold of `tier`, in dB
    Density,    ///< density of `tier`
    Power,      ///< transmit power of `tier`
    Separation, ///< receiver separation |u - v|
    Slots,      ///< number of slots n
    Alpha,      ///< path-loss exponent
    Epsilon,    ///< bounded path-loss offset
};

/// What a sweep computes per grid value. Conditional and Correlation switch
/// the analytic/simulated columns from joint success to that quantity.
enum class Output { Analytic, Simulated, Bounds, Conditional, Correlation };

const char* to_string(SweepVariable v) noexcept;
const char* to_string(Output o) noexcept;
SweepVariable sweep_variable_from_string(const std::string& s);
Output output_from_string(const std::string& s);

struct SweepSpec {
    std::string name;
    NetworkModel base_model;
    SweepVariable variable = SweepVariable::BetaDb;
    std::size_t tier = 0; ///< zero-based, for per-tier variables
    std::vector<double> grid;
    std::set<Output> outputs;
    sim::SimPlan plan; ///< plan.slots is n unless n is the sweep variable
    double separation = 0.0; ///< receiver separation for correlation rows

    bool wants(Output o) const { return outputs.count(o) > 0; }
    bool operator==(const SweepSpec&) const = default;
};

/// Throws DomainError on an empty or non-monotone grid, an out-of-range
/// tier, or outputs the variable cannot produce.
void validate(const SweepSpec& spec);

struct SweepRow {
    double sweep_value = 0.0;
    std::optional<double> analytic;
    std::optional<sim::Estimate> sim;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;
    std::set<std::string> flags;
};

inline constexpr const char* kApproximateFlag = "approximate-regime";

/// One row per grid value, in grid order. Per-row failures land in the row's
/// flags ("error:<message>") without aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Model and slot count at one grid value.
NetworkModel model_at(const SweepSpec& spec, double value);
long long slots_at(const SweepSpec& spec, double value);

/// Seed for the simulation of row `row`.
std::uint64_t row_seed(std::uint64_t master_seed, std::size_t row) noexcept;

/// JSON round trip for spec files. Unknown keys are rejected; missing keys
/// take SweepSpec/SimPlan defaults. Throws DomainError on malformed input.
std::string spec_to_json(const SweepSpec& spec);
SweepSpec spec_from_json(const std::string& text);

/// CSV with header `sweep_value,analytic,sim_mean,sim_stderr,ci_lo,ci_hi,lower_bound,upper_bound,flags`.
/// Missing values are empty; numbers carry 17 significant digits; LF endings.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace hetcorr::experiments
