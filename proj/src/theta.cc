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

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <quadmath.h>

#include "ggkp/errors.h"

namespace ggkp {

namespace {

bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_tolerance(double tol) {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw DomainError("Theta tolerance must lie in (0, 1).");
    }
}

// Smallest radius whose tail bound, relative to the envelope, is below
// tol * e^{-slack}. The slack lets callers measure tol against the largest
// term instead, which can sit far below the envelope.
int64_t certified_radius(int genus, double lambda, double tol, double slack = 0.0) {
    check_tolerance(tol);
    const double log_target = std::log(tol) - slack;
    for (int64_t r = 0; r <= kMaxThetaRadius; r++) {
        if (std::log(lattice_tail_bound(genus, lambda, r)) < log_target) {
            return r;
        }
    }
    throw CapacityError(
        "Certified theta sum needs a radius above " + std::to_string(kMaxThetaRadius) +
        " (smallest eigenvalue of Im(Omega) is " + std::to_string(lambda) + ").");
}

}  // namespace

PeriodMatrix::PeriodMatrix(cplx o11, cplx o12, cplx o22) : omega_{o11, o12, o22} {
    if (!finite(o11) || !finite(o12) || !finite(o22)) {
        throw GeometryError("Period matrix entries must be finite.");
    }
    double y11 = o11.imag();
    double y22 = o22.imag();
    double y12 = o12.imag();
    if (!(y11 > 0.0) || !(y11 * y22 - y12 * y12 > 0.0)) {
        throw GeometryError("Imaginary part of the period matrix is not positive-definite.");
    }
}

double PeriodMatrix::imag_min_eigenvalue() const {
    double y11 = omega_.a11.imag();
    double y22 = omega_.a22.imag();
    double y12 = omega_.a12.imag();
    double half_gap = std::hypot(0.5 * (y11 - y22), y12);
    double lambda_max = 0.5 * (y11 + y22) + half_gap;
    // det / lambda_max avoids cancellation when the eigenvalues are far apart.
    return (y11 * y22 - y12 * y12) / lambda_max;
}

double lattice_tail_bound(int genus, double lambda, int64_t radius, double offset) {
    if (genus != 1 && genus != 2) {
        throw DomainError("lattice_tail_bound supports genus 1 and 2.");
    }
    double k = static_cast<double>(radius + 1);
    double count = genus == 2 ? 8.0 * k : 2.0;
    double first = count * std::exp(-kPi * lambda * (k - offset) * (k - offset));
    // Successive shells shrink at least by this ratio for every k >= R + 1.
    double growth = genus == 2 ? (k + 1.0) / k : 1.0;
    double ratio = growth * std::exp(-kPi * lambda * (2.0 * k + 1.0 - 2.0 * offset));
    if (!(ratio < 1.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return first / (1.0 - ratio);
}

int64_t truncation_radius(const PeriodMatrix &omega, double tol) {
    return certified_radius(2, omega.imag_min_eigenvalue(), tol);
}

namespace {

struct Centre {
    int64_t m1;
    int64_t m2;
    double log_envelope;
    // How far the centred lattice term sits below the envelope, as a
    // positive exponent pi * d.Y.d with d the offset from the Gaussian peak.
    double dominant_gap;
};

// Lattice point nearest the maximum of |summand| and log of that maximum's bound.
Centre dominant_term(const Vec2c &xi, const PeriodMatrix &omega, const Vec2d &eps) {
    const SymMat2 &o = omega.omega();
    double y11 = o.a11.imag();
    double y12 = o.a12.imag();
    double y22 = o.a22.imag();
    double b1 = xi[0].imag();
    double b2 = xi[1].imag();
    double det = y11 * y22 - y12 * y12;
    double c1 = (y22 * b1 - y12 * b2) / det;
    double c2 = (y11 * b2 - y12 * b1) / det;
    double log_envelope = kPi * (c1 * b1 + c2 * b2);
    int64_t m1 = std::llround(-c1 - eps[0]);
    int64_t m2 = std::llround(-c2 - eps[1]);
    double d1 = static_cast<double>(m1) + eps[0] + c1;
    double d2 = static_cast<double>(m2) + eps[1] + c2;
    double gap = kPi * (y11 * d1 * d1 + 2.0 * y12 * d1 * d2 + y22 * d2 * d2);
    return {m1, m2, log_envelope, gap};
}

cplx box_sum(const Vec2c &xi, const PeriodMatrix &omega, const Vec2d &eps, const Vec2d &delta, const Centre &c, int64_t r) {
    const SymMat2 &o = omega.omega();
    cplx z1 = xi[0] + delta[0];
    cplx z2 = xi[1] + delta[1];
    CompensatedSum sum;
    if (o.a12 == cplx(0.0, 0.0)) {
        // No cross term: each summand is a product of a row and a column factor.
        std::vector<cplx> cols;
        cols.reserve(static_cast<size_t>(2 * r + 1));
        for (int64_t j = c.m2 - r; j <= c.m2 + r; j++) {
            double v2 = static_cast<double>(j) + eps[1];
            cols.push_back(std::exp(kI * kPi * (o.a22 * (v2 * v2)) + 2.0 * kPi * kI * (v2 * z2)));
        }
        for (int64_t i = c.m1 - r; i <= c.m1 + r; i++) {
            double v1 = static_cast<double>(i) + eps[0];
            cplx row = std::exp(kI * kPi * (o.a11 * (v1 * v1)) + 2.0 * kPi * kI * (v1 * z1));
            for (const cplx &col : cols) {
                sum.add(row * col);
            }
        }
        return sum.value();
    }
    for (int64_t i = c.m1 - r; i <= c.m1 + r; i++) {
        double v1 = static_cast<double>(i) + eps[0];
        cplx row = kI * kPi * (o.a11 * (v1 * v1)) + 2.0 * kPi * kI * (v1 * z1);
        cplx cross = 2.0 * kI * kPi * (o.a12 * v1);
        for (int64_t j = c.m2 - r; j <= c.m2 + r; j++) {
            double v2 = static_cast<double>(j) + eps[1];
            cplx e = row + cross * v2 + kI * kPi * (o.a22 * (v2 * v2)) + 2.0 * kPi * kI * (v2 * z2);
            sum.add(std::exp(e));
        }
    }
    return sum.value();
}

Vec2d to_doubles(const std::array<Rational, 2> &v) {
    return {v[0].to_double(), v[1].to_double()};
}

}  // namespace

ThetaValue riemann_theta(const Vec2c &xi, const PeriodMatrix &omega, const ThetaCharacteristic &ch, double tol) {
    if (!finite(xi[0]) || !finite(xi[1])) {
        throw DomainError("Theta argument must be finite.");
    }
    Vec2d eps = to_doubles(ch.epsilon);
    Centre c = dominant_term(xi, omega, eps);
    int64_t r = certified_radius(2, omega.imag_min_eigenvalue(), tol, c.dominant_gap);
    ThetaValue out;
    out.value = box_sum(xi, omega, eps, to_doubles(ch.delta), c, r);
    out.truncation_radius = r;
    out.tail_bound = std::exp(c.log_envelope) * lattice_tail_bound(2, omega.imag_min_eigenvalue(), r);
    return out;
}

cplx riemann_theta_box(const Vec2c &xi, const PeriodMatrix &omega, const ThetaCharacteristic &ch, int64_t radius) {
    if (radius < 0) {
        throw DomainError("Box radius must be non-negative.");
    }
    Vec2d eps = to_doubles(ch.epsilon);
    Centre c = dominant_term(xi, omega, eps);
    return box_sum(xi, omega, eps, to_doubles(ch.delta), c, radius);
}

namespace {

struct Centre1 {
    int64_t n0;
    double log_envelope;
    double dominant_gap;
};

Centre1 dominant_term1(cplx z, cplx tau) {
    double c = z.imag() / tau.imag();
    int64_t n0 = std::llround(-c);
    double d = static_cast<double>(n0) + c;
    return {n0, kPi * c * z.imag(), kPi * tau.imag() * d * d};
}

cplx line_sum(cplx z, cplx tau, int64_t n0, int64_t r) {
    CompensatedSum sum;
    for (int64_t n = n0 - r; n <= n0 + r; n++) {
        double v = static_cast<double>(n);
        sum.add(std::exp(kI * kPi * (tau * (v * v)) + 2.0 * kPi * kI * (z * v)));
    }
    return sum.value();
}

void check_tau(cplx z, cplx tau) {
    if (!(tau.imag() > 0.0) || !finite(tau)) {
        throw DomainError("Jacobi theta needs Im(tau) > 0.");
    }
    if (!finite(z)) {
        throw DomainError("Theta argument must be finite.");
    }
}

ThetaValue theta3_reduced(cplx z, cplx tau, double tol, int depth) {
    // theta_3 has period 1 in z.
    z -= std::round(z.real());
    if (tau.imag() >= kInversionThreshold || depth > 64) {
        return jacobi_theta3_direct(z, tau, tol);
    }
    double shift = std::round(tau.real());
    if (shift != 0.0) {
        // theta_3(z, tau + j) = theta_3(z + j/2, tau).
        return theta3_reduced(z + 0.5 * shift, tau - shift, tol, depth + 1);
    }
    // theta_3(z, tau) = (-i tau)^{-1/2} e^{-i pi z^2 / tau} theta_3(z/tau, -1/tau).
    cplx log_factor = -0.5 * std::log(-kI * tau) - kI * kPi * z * z / tau;
    ThetaValue inner = theta3_reduced(z / tau, -1.0 / tau, tol, depth + 1);
    cplx factor = std::exp(log_factor);
    return {factor * inner.value, inner.truncation_radius, std::abs(factor) * inner.tail_bound};
}

}  // namespace

ThetaValue jacobi_theta3_direct(cplx z, cplx tau, double tol) {
    check_tau(z, tau);
    Centre1 c = dominant_term1(z, tau);
    int64_t r = certified_radius(1, tau.imag(), tol, c.dominant_gap);
    return {line_sum(z, tau, c.n0, r), r, std::exp(c.log_envelope) * lattice_tail_bound(1, tau.imag(), r)};
}

ThetaReference jacobi_theta3_reference(cplx z, cplx tau, int64_t radius) {
    check_tau(z, tau);
    if (radius < 0) {
        throw DomainError("Summation radius must be non-negative.");
    }
    // Quad precision: in the troughs between comb peaks the O(1) terms cancel
    // by up to ~20 orders of magnitude.
    using q = __float128;
    const q pi = M_PIq;
    const q tr = tau.real(), ti = tau.imag(), zr = z.real(), zi = z.imag();
    const int64_t n0 = dominant_term1(z, tau).n0;
    q re = 0, im = 0, dz_re = 0, dz_im = 0, dt_re = 0, dt_im = 0;
    const Centre1 centre = dominant_term1(z, tau);
    for (int64_t n = n0 - radius; n <= n0 + radius; n++) {
        // Terms more than e^-120 below the envelope cannot reach the quad
        // precision result, so the transcendental calls are skipped for them.
        const double vd = static_cast<double>(n);
        const double decay = kPi * (tau.imag() * vd * vd + 2.0 * z.imag() * vd) + centre.log_envelope;
        if (decay > 120.0) {
            continue;
        }
        const q v = static_cast<q>(n);
        const q mag = expq(-pi * (ti * v * v + 2 * zi * v));
        // Phase in units of pi, reduced mod 2 before the trig call.
        const q turns = fmodq(tr * v * v + 2 * zr * v, 2);
        const q c = mag * cosq(pi * turns);
        const q sn = mag * sinq(pi * turns);
        re += c;
        im += sn;
        // d/dz brings down 2 pi i n, d/dtau brings down i pi n^2.
        dz_re -= 2 * pi * v * sn;
        dz_im += 2 * pi * v * c;
        dt_re -= pi * v * v * sn;
        dt_im += pi * v * v * c;
    }
    ThetaReference out;
    out.value = cplx(static_cast<double>(re), static_cast<double>(im));
    const double dz = std::hypot(static_cast<double>(dz_re), static_cast<double>(dz_im));
    const double dt = std::hypot(static_cast<double>(dt_re), static_cast<double>(dt_im));
    out.sensitivity = std::abs(z) * dz + std::abs(tau) * dt;
    return out;
}

cplx jacobi_theta3_box(cplx z, cplx tau, int64_t radius) {
    return jacobi_theta3_reference(z, tau, radius).value;
}

ThetaValue jacobi_theta3(cplx z, cplx tau, double tol) {
    check_tau(z, tau);
    check_tolerance(tol);
    return theta3_reduced(z, tau, tol, 0);
}

FactorizationCheck diagonal_factorization_check(const PeriodMatrix &omega, const Vec2c &xi, double tol) {
    if (!omega.is_diagonal()) {
        throw DomainError("Factorization check requires a diagonal period matrix.");
    }
    FactorizationCheck out;
    out.genus2 = riemann_theta(xi, omega, ThetaCharacteristic::zero(), tol);
    ThetaValue t1 = jacobi_theta3(xi[0], omega.omega().a11, tol);
    ThetaValue t2 = jacobi_theta3(xi[1], omega.omega().a22, tol);
    out.product.value = t1.value * t2.value;
    out.product.truncation_radius = std::max(t1.truncation_radius, t2.truncation_radius);
    out.product.tail_bound =
        std::abs(t1.value) * t2.tail_bound + std::abs(t2.value) * t1.tail_bound + t1.tail_bound * t2.tail_bound;
    return out;
}

}  // namespace ggkp
