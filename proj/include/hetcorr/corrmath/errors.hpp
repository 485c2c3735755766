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

#include <stdexcept>
#include <string>

namespace hetcorr {

/// A parameter lies outside the domain where the requested quantity is defined.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A quantity requires bounded path loss (epsilon > 0) but the model uses the singular law.
class SingularPathLossError : public DomainError {
public:
    explicit SingularPathLossError(const std::string& what) : DomainError(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget before meeting tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

} // namespace hetcorr
