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

#include "sfdort/forward.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sfdort/errors.hpp"
#include "sfdort/specfun.hpp"

namespace sfdort {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr std::complex<double> kQuarterJ{0.0, 0.25};
} // namespace

std::complex<double> g0(double omega_rad_s, Point2 a, Point2 b, double speed) {
    const double d = distance(a, b);
    if (d == 0.0) throw std::invalid_argument("g0: coincident endpoints (H0 singular at 0)");
    if (!(omega_rad_s > 0.0)) throw std::invalid_argument("g0: omega must be positive");
    return kQuarterJ * hankel0(omega_rad_s * d / speed);
}

std::complex<double> path_green_sq(double omega_rad_s, const Scene& scene, PathId path,
                                   Point2 x) {
    const std::complex<double> a = g0(omega_rad_s, scene.antenna, x, scene.speed);
    const std::complex<double> b =
        scene.reflection * g0(omega_rad_s, mirror(scene.antenna), x, scene.speed);
    switch (path) {
        case PathId::direct: return a * a;
        case PathId::one_bounce: return a * b;
        case PathId::two_bounce: return b * b;
    }
    throw std::logic_error("unreachable path id");
}

std::complex<double> total_green_sq(double omega_rad_s, const Scene& scene, Point2 x) {
    const std::complex<double> a = g0(omega_rad_s, scene.antenna, x, scene.speed);
    const std::complex<double> b =
        scene.reflection * g0(omega_rad_s, mirror(scene.antenna), x, scene.speed);
    const std::complex<double> g = a + b;
    return g * g;
}

std::vector<ScatterPoint> scatter_points(const Scene& scene, const Target& target,
                                         const FrequencyGrid& grid) {
    if (target.radius <= 0.0) return {{target.center, target.contrast}};
    const double omega_max = grid.omega0 + grid.n_total * grid.delta_omega;
    const double lambda_min = 2.0 * kPi * scene.speed / omega_max;
    const int n_ring = std::max(
        8, static_cast<int>(std::ceil(2.0 * kPi * target.radius / (lambda_min / 4.0))));
    // midpoint placement on the semicircle facing the antenna
    const double phi0 = std::atan2(scene.antenna.y - target.center.y,
                                   scene.antenna.x - target.center.x);
    std::vector<ScatterPoint> pts;
    pts.reserve(n_ring);
    const double w = target.contrast / n_ring;
    for (int k = 0; k < n_ring; ++k) {
        const double th = phi0 - 0.5 * kPi + (k + 0.5) * kPi / n_ring;
        pts.push_back({{target.center.x + target.radius * std::cos(th),
                        target.center.y + target.radius * std::sin(th)},
                       w});
    }
    return pts;
}

SpectrumVector synthesize(const Scene& scene, const FrequencyGrid& grid, const Pulse& pulse,
                          SpectrumConvention convention) {
    validate_scene(scene);
    validate_grid(grid);

    std::vector<ScatterPoint> pts;
    for (const Target& t : scene.targets) {
        auto tp = scatter_points(scene, t, grid);
        pts.insert(pts.end(), tp.begin(), tp.end());
    }

    SpectrumVector sv;
    sv.grid = grid;
    sv.convention = convention;
    sv.values.assign(grid.n_total, {0.0, 0.0});

    for (int n = 1; n <= grid.n_total; ++n) {
        const double w = omega(grid, n);
        const std::complex<double> st = pulse_spectrum(pulse, w);
        const std::complex<double> pulse_factor =
            convention == SpectrumConvention::matched
                ? std::complex<double>{std::norm(st), 0.0}
                : st;
        // the weight multiplies last so superposition and contrast scaling
        // are bit-exact, not just accurate
        std::complex<double> acc{0.0, 0.0};
        for (const ScatterPoint& p : pts)
            acc += p.weight * (w * w * total_green_sq(w, scene, p.position) * pulse_factor);
        sv.values[n - 1] = acc;
    }
    return sv;
}

SpectrumVector add_noise(const SpectrumVector& sv, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db) && snr_db > 0.0) return sv;
    if (std::isnan(snr_db)) throw ValidationError("noise.snr_db: must be finite or +inf");

    double signal_power = 0.0;
    for (const auto& v : sv.values) signal_power += std::norm(v);
    signal_power /= static_cast<double>(sv.values.size());
    const double noise_power = signal_power * std::pow(10.0, -snr_db / 10.0);
    const double scale = std::sqrt(noise_power);

    // Box-Muller on the raw engine keeps the stream identical across standard
    // library implementations.
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return (rng() >> 11) * 0x1.0p-53; // [0, 1) with 53 random bits
    };

    SpectrumVector out = sv;
    for (auto& v : out.values) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double mag = std::sqrt(-std::log(1.0 - u1)); // E|z|^2 = 1
        const double ph = 2.0 * kPi * u2;
        v += scale * std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
    return out;
}

} // namespace sfdort
