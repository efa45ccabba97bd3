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

#include "sfdort/imaging.hpp"

#include <algorithm>
#include <cmath>

#include "sfdort/errors.hpp"
#include "sfdort/specfun.hpp"

namespace sfdort {

namespace {

constexpr std::complex<double> kQuarterJ{0.0, 0.25};

void validate_raster(const RasterSpec& raster) {
    if (raster.width < 1 || raster.height < 1)
        throw ValidationError("raster: width and height must be positive");
    if (!(raster.pixel_mm > 0.0)) throw ValidationError("raster: pixel size must be positive");
}

// Normalize to max 1; an all-zero image is left untouched and flagged.
void normalize(ImageGrid& image) {
    double mx = 0.0;
    for (double v : image.intensities) mx = std::max(mx, v);
    if (mx <= 0.0) {
        image.normalized = false;
        return;
    }
    for (double& v : image.intensities) v /= mx;
    image.normalized = true;
}

// Per-pixel distances with the validity mask applied once up front.
struct PixelGeometry {
    std::vector<double> d_direct;
    std::vector<double> d_mirror;
    std::vector<char> valid;
    int n_valid{0};
};

PixelGeometry pixel_geometry(const Scene& scene, const RasterSpec& raster,
                             const ImagingOptions& options) {
    PixelGeometry g;
    const int n = raster.pixel_count();
    g.d_direct.resize(n);
    g.d_mirror.resize(n);
    g.valid.resize(n);
    const Point2 mant = mirror(scene.antenna);
    for (int row = 0; row < raster.height; ++row) {
        for (int col = 0; col < raster.width; ++col) {
            const int i = row * raster.width + col;
            const Point2 x = raster.pixel_center(row, col);
            const double dd = distance(scene.antenna, x);
            const double dm = distance(mant, x);
            g.d_direct[i] = dd;
            g.d_mirror[i] = dm;
            const bool ok = x.y > options.min_clearance_mm && dd > options.min_range_mm &&
                            dd > 0.0 && dm > 0.0;
            g.valid[i] = ok ? 1 : 0;
            if (ok) ++g.n_valid;
        }
    }
    return g;
}

std::complex<double> green_for_path(PathId path, std::complex<double> a,
                                    std::complex<double> b) {
    switch (path) {
        case PathId::direct: return a * a;
        case PathId::one_bounce: return a * b;
        case PathId::two_bounce: return b * b;
    }
    return {};
}

} // namespace

bool pixel_valid(const Scene& scene, Point2 x, const ImagingOptions& options) {
    const double dd = distance(scene.antenna, x);
    const double dm = distance(mirror(scene.antenna), x);
    return x.y > options.min_clearance_mm && dd > options.min_range_mm && dd > 0.0 && dm > 0.0;
}

SteeringVector steering(const Scene& scene, const FrequencyGrid& grid, const Pulse& pulse,
                        PathId path, Point2 x, SteeringKind kind) {
    const std::vector<int> idx =
        kind == SteeringKind::coarse ? coarse_indices(grid) : fine_indices(grid);
    SteeringVector sv;
    sv.path = path;
    sv.kind = kind;
    sv.values.reserve(idx.size());
    for (int n : idx) {
        const double w = omega(grid, n);
        sv.values.push_back(w * w * path_green_sq(w, scene, path, x) * pulse_spectrum(pulse, w));
    }
    return sv;
}

ImageGrid tr_image(const SpectrumVector& sv, const Scene& scene, const Pulse& pulse,
                   const RasterSpec& raster, const ImagingOptions& options) {
    validate_raster(raster);
    validate_grid(sv.grid);
    if (raster.pixel_count() == 0) throw ValidationError("tr_image: empty raster");

    const PixelGeometry geo = pixel_geometry(scene, raster, options);
    const int n_pix = raster.pixel_count();
    const FrequencyGrid& grid = sv.grid;

    std::vector<std::complex<double>> acc(n_pix, {0.0, 0.0});
    for (int n = 1; n <= grid.n_total; ++n) {
        const double w = omega(grid, n);
        // TR operates on matched-filtered data; raw spectra get the S_T^*
        // filter here.
        std::complex<double> sample = sv.values[n - 1];
        if (sv.convention == SpectrumConvention::raw)
            sample *= std::conj(pulse_spectrum(pulse, w));
        const std::complex<double> weight = w * w * std::conj(sample);
        const double k = w / scene.speed;
        for (int i = 0; i < n_pix; ++i) {
            if (!geo.valid[i]) continue;
            const std::complex<double> a = kQuarterJ * hankel0(k * geo.d_direct[i]);
            const std::complex<double> b =
                scene.reflection * kQuarterJ * hankel0(k * geo.d_mirror[i]);
            const std::complex<double> g = a + b;
            acc[i] += weight * g * g;
        }
    }

    ImageGrid image;
    image.raster = raster;
    image.intensities.assign(n_pix, 0.0);
    // back-propagated field at t = 0: real and maximal at the target
    for (int i = 0; i < n_pix; ++i)
        if (geo.valid[i]) image.intensities[i] = std::max(acc[i].real(), 0.0);
    normalize(image);
    return image;
}

ImageGrid subspace_image(const NoiseSubspace& ns, SubspaceSide side, const Scene& scene,
                         const FrequencyGrid& grid, const Pulse& pulse,
                         const RasterSpec& raster, const ImagingOptions& options) {
    validate_raster(raster);
    validate_grid(grid);
    const auto& basis = side == SubspaceSide::left ? ns.left : ns.right;
    if (basis.empty()) throw ValidationError("subspace_image: empty noise basis");
    if (options.paths.empty()) throw ValidationError("subspace_image: empty path set");

    const std::vector<int> idx =
        side == SubspaceSide::left ? coarse_indices(grid) : fine_indices(grid);
    const int l = static_cast<int>(idx.size());
    const PixelGeometry geo = pixel_geometry(scene, raster, options);
    const int n_pix = raster.pixel_count();

    // steering ingredients per subsampled frequency
    std::vector<double> ks(l), w2(l);
    std::vector<std::complex<double>> st(l);
    for (int c = 0; c < l; ++c) {
        const double w = omega(grid, idx[c]);
        ks[c] = w / scene.speed;
        w2[c] = w * w;
        st[c] = pulse_spectrum(pulse, w);
    }

    ImageGrid image;
    image.raster = raster;
    image.intensities.assign(n_pix, 0.0);
    int n_live = 0;

    std::vector<std::complex<double>> a(l), b(l), gp(l);
    for (int i = 0; i < n_pix; ++i) {
        if (!geo.valid[i]) continue;
        for (int c = 0; c < l; ++c) {
            a[c] = kQuarterJ * hankel0(ks[c] * geo.d_direct[i]);
            b[c] = scene.reflection * kQuarterJ * hankel0(ks[c] * geo.d_mirror[i]);
        }
        double den = 0.0;
        bool degenerate = false;
        for (PathId path : options.paths) {
            double norm2 = 0.0;
            for (int c = 0; c < l; ++c) {
                gp[c] = w2[c] * green_for_path(path, a[c], b[c]) * st[c];
                norm2 += std::norm(gp[c]);
            }
            if (norm2 == 0.0) {
                degenerate = true; // e.g. rho = 0 kills the wall paths
                break;
            }
            for (const auto& u : basis) {
                std::complex<double> proj{0.0, 0.0};
                if (side == SubspaceSide::left) {
                    for (int c = 0; c < l; ++c) proj += std::conj(u[c]) * gp[c];
                } else {
                    // bilinear on the right: v carries the conjugated fine
                    // signature, so v^T h peaks at the target
                    for (int c = 0; c < l; ++c) proj += u[c] * gp[c];
                }
                den += std::norm(proj) / norm2;
            }
        }
        if (degenerate) continue;
        image.intensities[i] = 1.0 / std::max(den, 1e-300);
        ++n_live;
    }

    if (n_live == 0)
        throw NumericalError("subspace_image: every pixel degenerate for the given path set");
    normalize(image);
    return image;
}

ImageGrid dort_image(const ImageGrid& left, const ImageGrid& right) {
    if (!(left.raster == right.raster))
        throw ValidationError("dort_image: left and right rasters differ");
    ImageGrid image;
    image.raster = left.raster;
    const std::size_t n = left.intensities.size();
    image.intensities.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        image.intensities[i] = left.intensities[i] * right.intensities[i];
    normalize(image);
    return image;
}

} // namespace sfdort
