// Copyright 2026 The ggkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GGKP_ERRORS_H
#define GGKP_ERRORS_H

#include <stdexcept>

namespace ggkp {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Physical parameters that do not define a valid torus distribution.
struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadrature could not resolve the integrand within its node budget.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certified lattice sum would need more terms than the hard cap allows.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat-limit scan could not locate a half-maximum crossing.
struct ScanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range run configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ggkp

#endif
