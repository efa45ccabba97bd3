// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#include "support/bessel_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "support/doubledouble.hpp"

namespace sfdort::testsupport {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kSplit = 45.0;
constexpr int kSeriesTerms = 200;

// J0 = sum (-1)^k q^k / (k!)^2, q = x^2/4, accumulated in double-double.
double j0_series_dd(double x) {
    const DD q = div(mul(two_prod(x, x), 1.0), 4.0);
    DD term{1.0};
    DD sum{1.0};
    for (int k = 1; k <= kSeriesTerms; ++k) {
        term = div(mul(term, q), -static_cast<double>(k) * k);
        sum = add(sum, term);
        if (std::abs(to_double(term)) < 1e-28 * (1.0 + std::abs(to_double(sum)))) break;
    }
    return to_double(sum);
}

// Y0 = (2/pi) [ (ln(x/2) + gamma) J0 + sum (-1)^{k+1} H_k q^k / (k!)^2 ].
// Only the alternating series needs extended precision; the logarithmic
// prefactor contributes at most one double ulp times |J0|.
double y0_series_dd(double x) {
    const DD q = div(mul(two_prod(x, x), 1.0), 4.0);
    DD term{1.0};
    DD harmonic{0.0};
    DD sum{0.0};
    double sign = 1.0;
    for (int k = 1; k <= kSeriesTerms; ++k) {
        term = div(mul(term, q), static_cast<double>(k) * k);
        harmonic = add(harmonic, div(DD{1.0}, static_cast<double>(k)));
        sum = add(sum, mul(mul(term, harmonic), sign));
        sign = -sign;
        if (std::abs(to_double(term)) < 1e-28 * (1.0 + std::abs(to_double(sum)))) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0_series_dd(x) +
                          to_double(sum));
}

struct PQ {
    double p, q;
};

// Optimally truncated Hankel expansion; at x >= 45 the smallest term is below
// 1e-30, so plain double is already exact to rounding.
PQ pq_asymptotic(double x) {
    const double inv = 1.0 / x;
    double c = 1.0, pow_inv = 1.0, p = 1.0, q = 0.0, prev = 1.0;
    double sp = -1.0, sq = -1.0;
    for (int k = 1; k <= 50; ++k) {
        c *= static_cast<double>(2 * k - 1) * (2 * k - 1) / (8.0 * k);
        pow_inv *= inv;
        const double mag = c * pow_inv;
        if (mag > prev) break;
        prev = mag;
        if (k % 2 == 1) {
            q += sq * mag;
            sq = -sq;
        } else {
            p += sp * mag;
            sp = -sp;
        }
        if (mag < 1e-24) break;
    }
    return {p, q};
}

} // namespace

double oracle_j0(double x) {
    if (x < 0.0) throw std::domain_error("oracle_j0: x >= 0 required");
    if (x <= kSplit) return j0_series_dd(x);
    const PQ pq = pq_asymptotic(x);
    const double th = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::cos(th) - pq.q * std::sin(th));
}

double oracle_y0(double x) {
    if (x <= 0.0) throw std::domain_error("oracle_y0: x > 0 required");
    if (x <= kSplit) return y0_series_dd(x);
    const PQ pq = pq_asymptotic(x);
    const double th = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::sin(th) + pq.q * std::cos(th));
}

void write_bessel_fixture(const char* path, double x_lo, double x_hi, int n) {
    std::FILE* f = std::fopen(path, "w");
    if (!f) throw std::runtime_error("cannot open fixture path");
    std::fprintf(f, "x,j0,y0\n");
    const double step = std::log(x_hi / x_lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double x = x_lo * std::exp(i * step);
        std::fprintf(f, "%.17g,%.17g,%.17g\n", x, oracle_j0(x), oracle_y0(x));
    }
    std::fclose(f);
}

} // namespace sfdort::testsupport
