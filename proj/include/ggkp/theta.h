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

#ifndef GGKP_THETA_H
#define GGKP_THETA_H

#include <cstdint>
#include <utility>

#include "ggkp/numeric.h"
#include "ggkp/torus.h"

namespace ggkp {

inline constexpr double kDefaultThetaTolerance = 1e-10;
/// Largest certified box radius before a lattice sum is refused.
inline constexpr int64_t kMaxThetaRadius = 10000;
/// Below this Im(tau) the Jacobi theta is evaluated through tau -> -1/tau.
inline constexpr double kInversionThreshold = 0.05;

/// Genus-2 period matrix: complex symmetric with positive-definite imaginary part.
class PeriodMatrix {
   public:
    /// Throws GeometryError unless Im(Omega) is positive-definite and all entries finite.
    PeriodMatrix(cplx o11, cplx o12, cplx o22);
    explicit PeriodMatrix(const SymMat2 &omega) : PeriodMatrix(omega.a11, omega.a12, omega.a22) {
    }
    static PeriodMatrix diagonal(cplx tau1, cplx tau2) {
        return PeriodMatrix(tau1, 0.0, tau2);
    }

    const SymMat2 &omega() const {
        return omega_;
    }
    bool is_diagonal() const {
        return omega_.a12 == cplx(0.0, 0.0);
    }
    /// Smallest eigenvalue of Im(Omega).
    double imag_min_eigenvalue() const;

   private:
    SymMat2 omega_;
};

/// A truncated lattice sum with its certified truncation error.
///
/// `tail_bound` bounds the absolute size of everything omitted. The radius is
/// chosen so that it is at most tol times the magnitude of the centred
/// (dominant) summand, which is 1 for real arguments.
struct ThetaValue {
    cplx value;
    int64_t truncation_radius = 0;
    double tail_bound = 0.0;
};

/// Smallest R such that the omitted shells ||m - m0||_inf > R of a genus-2
/// sum centred on its dominant term m0 total less than `tol` relative to the
/// Gaussian envelope. This is the radius for real arguments; evaluation at a
/// complex argument may go further when the centred term sits below the
/// envelope.
///
/// Shell k holds 8k lattice points, each at least (k - 1/2) away from the
/// Gaussian's centre in the sup norm, so its contribution is at most
/// 8k exp(-pi lambda_min (k - 1/2)^2); the tail of that series is bounded by a
/// geometric majorant. Throws DomainError for tol outside (0, 1) and
/// CapacityError if R would exceed kMaxThetaRadius.
int64_t truncation_radius(const PeriodMatrix &omega, double tol);

/// Closed-form bound on sum_{k > R} shell_count(k) exp(-pi lambda (k - offset)^2),
/// with shell_count 8k in genus 2 and 2 in genus 1. Returns +inf if the
/// geometric majorant does not apply.
double lattice_tail_bound(int genus, double lambda, int64_t radius, double offset = 0.5);

/// Genus-2 Riemann theta function with characteristics,
///   sum_m exp(pi i (m+eps)^T Omega (m+eps) + 2 pi i (m+eps)^T (xi+delta)),
/// truncated at a certified radius around the dominant term.
ThetaValue riemann_theta(
    const Vec2c &xi,
    const PeriodMatrix &omega,
    const ThetaCharacteristic &ch = ThetaCharacteristic::zero(),
    double tol = kDefaultThetaTolerance);

/// The same lattice sum over a box of fixed radius about the dominant term.
/// No certification; used to audit the certified path.
cplx riemann_theta_box(const Vec2c &xi, const PeriodMatrix &omega, const ThetaCharacteristic &ch, int64_t radius);

/// Jacobi theta_3(z, tau) = sum_n exp(i pi tau n^2 + 2 pi i z n).
///
/// Uses the direct certified sum for Im(tau) >= kInversionThreshold and the
/// modular transformations tau -> tau - 1 and tau -> -1/tau otherwise.
ThetaValue jacobi_theta3(cplx z, cplx tau, double tol = kDefaultThetaTolerance);
/// Certified direct summation regardless of Im(tau).
ThetaValue jacobi_theta3_direct(cplx z, cplx tau, double tol = kDefaultThetaTolerance);
/// Direct sum over |n - n0| <= radius about the dominant term, accumulated in
/// quad precision. Intended as a reference for the certified routes.
cplx jacobi_theta3_box(cplx z, cplx tau, int64_t radius);

/// Quad-precision direct sum together with its first-order sensitivity to the
/// inputs, |z| |d theta/dz| + |tau| |d theta/dtau|. A double-precision
/// evaluation cannot be expected to beat roughly unit roundoff times the
/// sensitivity, since rounding z and tau already moves the value that much.
struct ThetaReference {
    cplx value;
    double sensitivity = 0.0;
};
ThetaReference jacobi_theta3_reference(cplx z, cplx tau, int64_t radius);

/// Unit roundoff of double and the number of such units of input perturbation
/// the certified routes are allowed when audited against the reference.
inline constexpr double kUnitRoundoff = 0x1p-53;
inline constexpr double kBackwardErrorUlps = 64.0;

struct FactorizationCheck {
    ThetaValue genus2;
    ThetaValue product;
};

/// Evaluates Theta(xi | diag(tau1, tau2)) both as a genus-2 sum and as
/// theta_3(xi_1, tau1) theta_3(xi_2, tau2). Throws DomainError for
/// non-diagonal Omega. The default tolerance sits well below the 1e-11
/// agreement the two routes are expected to reach.
FactorizationCheck diagonal_factorization_check(const PeriodMatrix &omega, const Vec2c &xi, double tol = 1e-15);

}  // namespace ggkp

#endif
