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

#ifndef GGKP_CONFIG_H
#define GGKP_CONFIG_H

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggkp/gaussian.h"
#include "ggkp/torus.h"
#include "ggkp/zak.h"

namespace ggkp {

struct StateParams {
    double q = 0.0;
    double p = 0.0;
    double sigma = 1.0;

    GaussianState state() const {
        return GaussianState(q, p, sigma);
    }
};

/// Everything a CLI run needs. Defaults: hbar = 1, L = P = 2 pi, vacuum
/// states of width 1, a 5x5 grid over [-1/2, 1/2]^2.
struct RunConfig {
    double hbar = 1.0;
    double L = kTwoPi;
    double P = kTwoPi;
    StateParams probe;
    StateParams signal;
    GridSpec grid;
    double tolerance = kDefaultThetaTolerance;
    ThetaCharacteristic characteristic;
    int64_t resolution = 512;
    std::vector<double> scales{1.0, 2.0, 4.0, 8.0};
    QuadConfig quadrature;

    TorusGeometry geometry() const {
        return TorusGeometry(L, P, hbar);
    }

    /// Re-runs every upstream invariant; throws ConfigError naming the failure.
    void validate() const;
};

/// Default config with GGKP_TOL applied when set.
RunConfig default_config();

/// Overlays the keys present in `doc` onto `base`. Unknown keys and type
/// mismatches throw ConfigError.
RunConfig apply_config_json(const nlohmann::json &doc, RunConfig base);

RunConfig load_config_file(const std::string &path, RunConfig base);

nlohmann::json config_to_json(const RunConfig &cfg);

/// "e1,e2;d1,d2" with rational entries.
ThetaCharacteristic parse_characteristic(const std::string &text);

}  // namespace ggkp

#endif
