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

#ifndef GGKP_NUMERIC_H
#define GGKP_NUMERIC_H

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace ggkp {

using cplx = std::complex<double>;
using Vec2c = std::array<cplx, 2>;
using Vec2d = std::array<double, 2>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Symmetric 2x2 complex matrix stored by its three independent entries.
struct SymMat2 {
    cplx a11;
    cplx a12;
    cplx a22;

    /// v^T M v for integer-or-real vectors.
    cplx quad_form(double v1, double v2) const {
        return a11 * (v1 * v1) + 2.0 * a12 * (v1 * v2) + a22 * (v2 * v2);
    }
};

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
   public:
    void add(cplx x) {
        add_real(x.real(), re_, re_c_);
        add_real(x.imag(), im_, im_c_);
    }
    cplx value() const {
        return {re_ + re_c_, im_ + im_c_};
    }

   private:
    static void add_real(double x, double &sum, double &comp) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double re_ = 0.0;
    double re_c_ = 0.0;
    double im_ = 0.0;
    double im_c_ = 0.0;
};

/// |a - b| / max(|b|, floor).
inline double relative_error(cplx a, cplx b, double floor = 1e-14) {
    return std::abs(a - b) / std::max(std::abs(b), floor);
}

/// Error scaled so that `<= rtol` means |a - b| <= max(rtol |b|, atol).
/// Below |b| = atol / rtol the comparison is effectively absolute.
inline double mixed_error(cplx a, cplx b, double rtol, double atol) {
    return std::abs(a - b) / std::max(std::abs(b), atol / rtol);
}

}  // namespace ggkp

#endif
