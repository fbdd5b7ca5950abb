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

#ifndef GGKP_SAMPLING_H
#define GGKP_SAMPLING_H

#include <cstdint>
#include <random>

#include "ggkp/gaussian.h"
#include "ggkp/theta.h"
#include "ggkp/torus.h"

namespace ggkp {

/// Seeded parameter generator whose draws are identical on every platform.
///
/// std::uniform_real_distribution is implementation-defined, so doubles are
/// built from the top 53 bits of mt19937_64 directly.
class Sampler {
   public:
    explicit Sampler(uint64_t seed) : rng_(seed) {
    }

    double uniform(double lo, double hi) {
        double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    int64_t integer(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(rng_() % span);
    }

   private:
    std::mt19937_64 rng_;
};

/// Parameter box for randomized matrix-element checks.
struct StateRanges {
    double sigma_lo = 0.3;
    double sigma_hi = 3.0;
    double center_lo = -2.0;
    double center_hi = 2.0;
    double period_lo = 2.0;
    double period_hi = 10.0;
};

struct ElementCase {
    GaussianState probe;
    GaussianState signal;
    TorusGeometry geom;
};

ElementCase sample_element_case(Sampler &s, const StateRanges &r = {}, double hbar = 1.0);

/// Element case whose lattice terms decay fast enough that a radius-12 box
/// captures the Zak sum to ~1e-15: both diagonal entries of Re(Gamma) >= min_decay.
ElementCase sample_zak_case(Sampler &s, double min_decay = 0.08);

/// Random period matrix with Im(Omega) = A A^T + floor * I.
PeriodMatrix sample_period_matrix(Sampler &s, double floor = 0.3, double spread = 1.0);

}  // namespace ggkp

#endif
