// SPDX-License-Identifier: Apache-2.0
//
// sfdort: stepped-frequency DORT imaging for a single-antenna UWB radar
// in a mirror-wall multipath environment
// Copyright (C) 2026 the sfdort developers
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

#include "sfdort/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace sfdort {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Below the split the ascending series converges with at most ~3 digits of
// cancellation; above it the Hankel asymptotic expansion truncated at its
// smallest term is already below 1e-11 absolute.
constexpr double kSeriesSplit = 12.0;

double j0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-20 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

double y0_series(double x) {
    // Y0 = (2/pi) [ (ln(x/2) + gamma) J0(x) + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2 ]
    const double q = 0.25 * x * x;
    double term = 1.0; // q^k / (k!)^2
    double harmonic = 0.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        sum += sign * harmonic * term;
        sign = -sign;
        if (term * harmonic < 1e-20 * (1.0 + std::abs(sum))) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0_series(x) + sum);
}

struct PQ {
    double p;
    double q;
};

// Stokes coefficients c_k = prod_{j=1..k} (2j-1)^2 / (k! 8^k), applied as
// P ~ 1 - c2/x^2 + c4/x^4 - ...,  Q ~ -c1/x + c3/x^3 - ...
// Summed until the terms stop decreasing (optimal truncation).
PQ hankel_pq(double x) {
    const double inv = 1.0 / x;
    double c = 1.0; // c_k at k = 0
    double pow_inv = 1.0;
    double p = 1.0;
    double q = 0.0;
    double prev_mag = 1.0;
    double sq = -1.0; // sign for Q terms: -c1/x + c3/x^3 - ...
    double sp = -1.0; // sign for P terms: -c2/x^2 + c4/x^4 - ...
    for (int k = 1; k <= 40; ++k) {
        c *= static_cast<double>(2 * k - 1) * (2 * k - 1) / (8.0 * k);
        pow_inv *= inv;
        const double mag = c * pow_inv;
        if (mag > prev_mag) break; // divergent tail reached
        prev_mag = mag;
        if (k % 2 == 1) {
            q += sq * mag;
            sq = -sq;
        } else {
            p += sp * mag;
            sp = -sp;
        }
        if (mag < 1e-19) break;
    }
    return {p, q};
}

double j0_asymptotic(double x) {
    const PQ pq = hankel_pq(x);
    const double theta = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::cos(theta) - pq.q * std::sin(theta));
}

double y0_asymptotic(double x) {
    const PQ pq = hankel_pq(x);
    const double theta = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::sin(theta) + pq.q * std::cos(theta));
}

void check_range(double x) {
    if (x > kMaxBesselArgument)
        throw std::range_error("bessel argument exceeds supported range (x > 5000)");
    if (std::isnan(x)) throw std::domain_error("bessel argument is NaN");
}

} // namespace

double bessel_j0(double x) {
    check_range(x);
    if (x < 0.0) throw std::domain_error("bessel_j0 requires x >= 0");
    return x < kSeriesSplit ? j0_series(x) : j0_asymptotic(x);
}

double bessel_y0(double x) {
    check_range(x);
    if (x <= 0.0) throw std::domain_error("bessel_y0 requires x > 0 (logarithmic singularity)");
    return x < kSeriesSplit ? y0_series(x) : y0_asymptotic(x);
}

HankelValue hankel0(double x) {
    check_range(x);
    if (x <= 0.0) throw std::domain_error("hankel0 requires x > 0");
    if (x < kSeriesSplit) return {j0_series(x), y0_series(x)};
    const PQ pq = hankel_pq(x);
    const double theta = x - 0.25 * kPi;
    const double amp = std::sqrt(2.0 / (kPi * x));
    const double c = std::cos(theta), s = std::sin(theta);
    return {amp * (pq.p * c - pq.q * s), amp * (pq.p * s + pq.q * c)};
}

} // namespace sfdort
