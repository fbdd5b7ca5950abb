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

#include "ggkp/torus.h"

#include <charconv>
#include <cmath>
#include <numeric>

#include "ggkp/errors.h"

namespace ggkp {

TorusGeometry::TorusGeometry(double L, double P, double hbar) : L_(L), P_(P), hbar_(hbar) {
    if (!(std::isfinite(L) && L > 0) || !(std::isfinite(P) && P > 0) || !(std::isfinite(hbar) && hbar > 0)) {
        throw DomainError("TorusGeometry requires finite L > 0, P > 0 and hbar > 0.");
    }
}

TorusGeometry TorusGeometry::scaled(double c) const {
    return TorusGeometry(c * L_, c * P_, hbar_);
}

double deformation_parameter(const TorusGeometry &geom) {
    return geom.theta0();
}

cplx commutation_phase(const TorusGeometry &geom) {
    return std::polar(1.0, kTwoPi * geom.theta0());
}

TorusCharacter character_star(const TorusCharacter &a, const TorusCharacter &b, const TorusGeometry &geom) {
    // Integer exponent kept exact before it meets floating point.
    int64_t form = a.n * b.m - a.m * b.n;
    cplx twist = std::polar(1.0, kPi * geom.theta0() * static_cast<double>(form));
    return TorusCharacter{a.m + b.m, a.n + b.n, a.phase * b.phase * twist};
}

Rational::Rational(int64_t num, int64_t den) {
    if (den == 0) {
        throw DomainError("Rational with zero denominator.");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        int64_t v = 0;
        const char *first = part.data();
        const char *last = part.data() + part.size();
        if (!part.empty() && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw DomainError("Not a rational number: '" + std::string(text) + "'.");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational &o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational &o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Parity characteristic_parity(std::span<const Rational> epsilon, std::span<const Rational> delta) {
    if (epsilon.size() != delta.size()) {
        throw DomainError("Characteristic vectors must have equal length.");
    }
    int64_t form = 0;
    for (size_t k = 0; k < epsilon.size(); k++) {
        Rational e2 = epsilon[k] * Rational(2);
        Rational d2 = delta[k] * Rational(2);
        if (e2.den() != 1 || d2.den() != 1) {
            throw DomainError("Parity is only defined for half-integer characteristics.");
        }
        form += e2.num() * d2.num();
    }
    return (form % 2 == 0) ? Parity::even : Parity::odd;
}

Parity characteristic_parity(const ThetaCharacteristic &c) {
    return characteristic_parity(std::span<const Rational>(c.epsilon), std::span<const Rational>(c.delta));
}

}  // namespace ggkp
