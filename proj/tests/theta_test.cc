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

#include "ggkp/theta.h"

#include <gtest/gtest.h>

#include "ggkp/errors.h"
#include "ggkp/sampling.h"

using namespace ggkp;

namespace {

// Reference values from 30-digit arbitrary-precision theta evaluation.
constexpr double kTheta3ZeroI = 1.08643481121330801457;
constexpr double kTheta3HalfI = 0.91357913815611682141;
constexpr double kTheta3ZeroI_Squared = 1.18034059901609622605;
constexpr double kTheta3ZeroTwoI = 1.00373488548773909105;

const PeriodMatrix kIdentity = PeriodMatrix::diagonal({0, 1}, {0, 1});

// Plain sum of |summand| over ||m||_inf in (r, r + extra], centred at 0 (xi = 0).
double shell_mass(const PeriodMatrix &om, int64_t r, int64_t extra) {
    double total = 0;
    const SymMat2 &o = om.omega();
    for (int64_t i = -(r + extra); i <= r + extra; i++)
        for (int64_t j = -(r + extra); j <= r + extra; j++) {
            if (std::max(std::abs(i), std::abs(j)) <= r) continue;
            total += std::exp(-kPi * o.quad_form(static_cast<double>(i), static_cast<double>(j)).imag());
        }
    return total;
}

}  // namespace

TEST(theta, period_matrix_validation) {
    EXPECT_THROW(PeriodMatrix({0, 1}, {0, 2}, {0, 1}), GeometryError);
    EXPECT_THROW(PeriodMatrix({0, -1}, 0.0, {0, 1}), GeometryError);
    EXPECT_THROW(PeriodMatrix({0, 1}, 0.0, {NAN, 1}), GeometryError);
    PeriodMatrix ok({0.3, 2}, {0.1, 0.5}, {0, 1});
    EXPECT_NEAR(ok.imag_min_eigenvalue(), 1.5 - std::sqrt(0.5), 1e-14);
    EXPECT_FALSE(ok.is_diagonal());
}

TEST(theta, truncation_radius_reference_case) {
    int64_t r = truncation_radius(kIdentity, 1e-12);
    EXPECT_LE(r, 6);
    EXPECT_LT(shell_mass(kIdentity, r, 10), 1e-12);
    EXPECT_GE(truncation_radius(kIdentity, 0.5), 1);
}

TEST(theta, truncation_radius_monotone_in_lambda) {
    for (double tol : {1e-4, 1e-10, 1e-14}) {
        int64_t prev = truncation_radius(PeriodMatrix::diagonal({0, 0.01}, {0, 0.01}), tol);
        for (double lam : {0.02, 0.04, 0.08, 0.16, 0.32, 0.64}) {
            int64_t r = truncation_radius(PeriodMatrix::diagonal({0, lam}, {0, lam}), tol);
            EXPECT_LE(r, prev);
            prev = r;
        }
    }
}

TEST(theta, truncation_radius_errors) {
    EXPECT_THROW(truncation_radius(kIdentity, 0.0), DomainError);
    EXPECT_THROW(truncation_radius(kIdentity, 1.0), DomainError);
    EXPECT_THROW(truncation_radius(PeriodMatrix::diagonal({0, 1e-9}, {0, 1}), 1e-10), CapacityError);
}

TEST(theta, riemann_theta_reference_values) {
    ThetaValue v = riemann_theta({0.0, 0.0}, kIdentity);
    EXPECT_NEAR(v.value.real(), kTheta3ZeroI_Squared, 1e-14);
    EXPECT_NEAR(v.value.imag(), 0.0, 1e-15);
    EXPECT_LE(v.tail_bound, kDefaultThetaTolerance);

    PeriodMatrix om = PeriodMatrix::diagonal({0, 1}, {0, 2});
    EXPECT_NEAR(riemann_theta({0.5, 0.0}, om).value.real(), kTheta3HalfI * kTheta3ZeroTwoI, 1e-14);
}

TEST(theta, riemann_theta_rejects_non_finite_argument) {
    EXPECT_THROW(riemann_theta({NAN, 0.0}, kIdentity), DomainError);
}

TEST(theta, odd_genus_one_factor_vanishes) {
    // [1/2,0; 1/2,0] is odd in the first variable, so Theta vanishes at xi = 0.
    Rational h(1, 2);
    ThetaCharacteristic ch{{h, Rational(0)}, {h, Rational(0)}};
    PeriodMatrix om = PeriodMatrix::diagonal({0.2, 1.1}, {-0.3, 0.7});
    EXPECT_LT(std::abs(riemann_theta({0.0, 0.0}, om, ch).value), 1e-14);
    // Same for the full half characteristic on a diagonal period matrix.
    EXPECT_LT(std::abs(riemann_theta({0.0, 0.0}, om, ThetaCharacteristic::half()).value), 1e-14);
}

TEST(theta, integer_periodicity_and_evenness) {
    Sampler s(8);
    for (int t = 0; t < 30; t++) {
        PeriodMatrix om = sample_period_matrix(s);
        Vec2c xi{cplx(s.uniform(-2, 2), s.uniform(-0.3, 0.3)), cplx(s.uniform(-2, 2), s.uniform(-0.3, 0.3))};
        cplx base = riemann_theta(xi, om).value;
        EXPECT_LT(relative_error(riemann_theta({xi[0] + 1.0, xi[1]}, om).value, base), 1e-12);
        EXPECT_LT(relative_error(riemann_theta({xi[0], xi[1] - 3.0}, om).value, base), 1e-12);
        EXPECT_LT(relative_error(riemann_theta({-xi[0], -xi[1]}, om).value, base), 1e-12);
    }
}

TEST(theta, quasi_periodicity) {
    Sampler s(9);
    for (int t = 0; t < 30; t++) {
        PeriodMatrix om = sample_period_matrix(s);
        const SymMat2 &o = om.omega();
        Vec2c xi{cplx(s.uniform(-1, 1), s.uniform(-0.3, 0.3)), cplx(s.uniform(-1, 1), s.uniform(-0.3, 0.3))};
        cplx base = riemann_theta(xi, om).value;
        cplx first = riemann_theta({xi[0] + o.a11, xi[1] + o.a12}, om).value;
        EXPECT_LT(relative_error(first, std::exp(-kI * kPi * o.a11 - 2.0 * kPi * kI * xi[0]) * base), 1e-10);
        cplx second = riemann_theta({xi[0] + o.a12, xi[1] + o.a22}, om).value;
        EXPECT_LT(relative_error(second, std::exp(-kI * kPi * o.a22 - 2.0 * kPi * kI * xi[1]) * base), 1e-10);
    }
}

TEST(theta, certified_error_bounds_wider_sum) {
    Sampler s(10);
    for (int t = 0; t < 30; t++) {
        PeriodMatrix om = sample_period_matrix(s, 0.05, 0.7);
        Vec2c xi{cplx(s.uniform(-1, 1), s.uniform(-0.5, 0.5)), cplx(s.uniform(-1, 1), s.uniform(-0.5, 0.5))};
        for (double tol : {1e-3, 1e-6}) {
            ThetaValue v = riemann_theta(xi, om, ThetaCharacteristic::zero(), tol);
            cplx wide = riemann_theta_box(xi, om, ThetaCharacteristic::zero(), v.truncation_radius + 8);
            EXPECT_LE(std::abs(v.value - wide), v.tail_bound);
        }
    }
}

TEST(theta, jacobi_reference_values) {
    EXPECT_NEAR(jacobi_theta3(0.0, {0, 1}).value.real(), kTheta3ZeroI, 1e-14);
    EXPECT_NEAR(jacobi_theta3(0.5, {0, 1}).value.real(), kTheta3HalfI, 1e-14);
    EXPECT_NEAR(jacobi_theta3(0.3, {0, 0.03}).value.real(), 0.00046591888192688294527, 1e-15);
    EXPECT_THROW(jacobi_theta3(0.0, {1, 0}), DomainError);
    EXPECT_THROW(jacobi_theta3(0.0, {1, -0.1}), DomainError);
}

TEST(theta, jacobi_periodicity) {
    Sampler s(12);
    for (int t = 0; t < 20; t++) {
        cplx tau(s.uniform(-1, 1), s.uniform(0.01, 2));
        cplx z(s.uniform(-1, 1), s.uniform(-0.2, 0.2));
        EXPECT_LT(relative_error(jacobi_theta3(z + 1.0, tau).value, jacobi_theta3(z, tau).value), 1e-11);
    }
}

TEST(theta, modular_inversion_matches_direct_summation) {
    Sampler s(13);
    for (int t = 0; t < 40; t++) {
        cplx tau(s.uniform(-0.6, 0.6), s.uniform(0.02, 0.05));
        cplx z(s.uniform(-1, 1), s.uniform(-0.02, 0.02));
        ThetaReference ref = jacobi_theta3_reference(z, tau, 2000);
        double floor = kBackwardErrorUlps * kUnitRoundoff * ref.sensitivity;
        EXPECT_LT(mixed_error(jacobi_theta3(z, tau, 1e-15).value, ref.value, 1e-9, floor), 1e-9) << "tau=" << tau << " z=" << z;
    }
}

TEST(theta, diagonal_factorization) {
    FactorizationCheck fc = diagonal_factorization_check(kIdentity, {0.0, 0.0});
    EXPECT_NEAR(fc.genus2.value.real(), kTheta3ZeroI_Squared, 1e-14);
    EXPECT_NEAR(fc.product.value.real(), kTheta3ZeroI_Squared, 1e-14);

    Sampler s(14);
    for (int t = 0; t < 100; t++) {
        PeriodMatrix om = PeriodMatrix::diagonal(cplx(s.uniform(-1, 1), s.uniform(0.03, 2)), cplx(s.uniform(-1, 1), s.uniform(0.03, 2)));
        Vec2c xi{cplx(s.uniform(-2, 2), s.uniform(-0.5, 0.5)), cplx(s.uniform(-2, 2), s.uniform(-0.5, 0.5))};
        FactorizationCheck c = diagonal_factorization_check(om, xi);
        EXPECT_LT(relative_error(c.genus2.value, c.product.value), 1e-11);
    }
    EXPECT_THROW(diagonal_factorization_check(PeriodMatrix({0, 1}, 0.1, {0, 1}), {0.0, 0.0}), DomainError);
}

TEST(theta, inversion_is_relatively_accurate_in_troughs) {
    // Between comb peaks the O(1) terms of the direct sum cancel down to
    // ~5e-14; reference from 40-digit arithmetic.
    cplx tau(0.0, 0.03);
    cplx z = 0.5 + 0.5 * tau + cplx(1e-5, 0.0);
    const cplx reference(1.659884263746034994622818336e-18, 5.283575708998474711229846053e-14);
    EXPECT_LT(relative_error(jacobi_theta3(z, tau, 1e-15).value, reference), 1e-9);
    EXPECT_LT(relative_error(jacobi_theta3_box(z, tau, 200), reference), 1e-12);
}

TEST(theta, certified_radius_measured_against_the_dominant_term) {
    // After inversion this point has Im(tau') ~ 48 and a centred term ~e^-37
    // below the envelope; an envelope-relative radius of 0 drops a term of
    // relative size 0.1. Reference from 50-digit arithmetic.
    cplx tau(0.00042154307906372424, 0.020964671547991982);
    cplx z(0.49287004160433678, -0.0072282921364622199);
    const cplx reference(9.7102828019e-16, 2.36864495714e-16);
    EXPECT_LT(relative_error(jacobi_theta3(z, tau, 1e-15).value, reference), 1e-9);
    cplx tp = -1.0 / tau;
    ThetaValue inner = jacobi_theta3_direct(z / tau, tp, 1e-15);
    EXPECT_GE(inner.truncation_radius, 1);
}

TEST(theta, box_rejects_negative_radius) {
    EXPECT_THROW(jacobi_theta3_box(0.0, {0, 1}, -1), DomainError);
}
