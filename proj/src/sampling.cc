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

#include "ggkp/sampling.h"

namespace ggkp {

ElementCase sample_element_case(Sampler &s, const StateRanges &r, double hbar) {
    auto state = [&]() {
        double q = s.uniform(r.center_lo, r.center_hi);
        double p = s.uniform(r.center_lo, r.center_hi);
        return GaussianState(q, p, s.uniform(r.sigma_lo, r.sigma_hi));
    };
    GaussianState probe = state();
    GaussianState signal = state();
    double L = s.uniform(r.period_lo, r.period_hi);
    double P = s.uniform(r.period_lo, r.period_hi);
    return {probe, signal, TorusGeometry(L, P, hbar)};
}

ElementCase sample_zak_case(Sampler &s, double min_decay) {
    StateRanges r{0.5, 2.0, -1.0, 1.0, 2.0, 6.0};
    while (true) {
        ElementCase c = sample_element_case(s, r);
        ClosedFormParts parts = closed_form_parts(c.probe, c.signal, c.geom);
        if (parts.gamma.a11.real() >= min_decay && parts.gamma.a22.real() >= min_decay) {
            return c;
        }
    }
}

PeriodMatrix sample_period_matrix(Sampler &s, double floor, double spread) {
    double a = s.uniform(-spread, spread);
    double b = s.uniform(-spread, spread);
    double c = s.uniform(-spread, spread);
    double y11 = a * a + b * b + floor;
    double y12 = a * c;
    double y22 = c * c + floor;
    return PeriodMatrix(
        cplx(s.uniform(-1.0, 1.0), y11), cplx(s.uniform(-1.0, 1.0), y12), cplx(s.uniform(-1.0, 1.0), y22));
}

}  // namespace ggkp
