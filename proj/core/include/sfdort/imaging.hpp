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

#pragma once

#include <vector>

#include "sfdort/forward.hpp"
#include "sfdort/subspace.hpp"

namespace sfdort {

/// Rectangular pixel raster. Pixel (row, col) is centred at
/// origin + ((col + 0.5) * pixel_mm, (row + 0.5) * pixel_mm).
/// The default covers x in [0, 1200] mm, y in [0, 1500] mm at 5 mm with pixel
/// centres on the round coordinates.
struct RasterSpec {
    Point2 origin{-2.5, -2.5};
    double pixel_mm{5.0};
    int width{241};
    int height{301};

    Point2 pixel_center(int row, int col) const {
        return {origin.x + (col + 0.5) * pixel_mm, origin.y + (row + 0.5) * pixel_mm};
    }
    int pixel_count() const { return width * height; }
};

inline bool operator==(const RasterSpec& a, const RasterSpec& b) {
    return a.origin == b.origin && a.pixel_mm == b.pixel_mm && a.width == b.width &&
           a.height == b.height;
}

/// Nonnegative intensity raster, normalized to max 1 unless the image came out
/// identically zero (then `normalized` is false and the values are left as-is).
struct ImageGrid {
    RasterSpec raster;
    std::vector<double> intensities; // row-major, height * width
    bool normalized{false};

    double at(int row, int col) const { return intensities[row * raster.width + col]; }
    double& at(int row, int col) { return intensities[row * raster.width + col]; }
};

/// Pixel-validity and path-set options shared by all imagers.
///
/// A pixel is evaluated only if it is a physically admissible target-center
/// hypothesis: strictly above the wall by `min_clearance_mm` (the hypothesis
/// radius during sweeps; a target may not intersect the wall) and outside the
/// antenna near-field disc of radius `min_range_mm`, inside which the
/// logarithmic near-singularity of the 2-D Green function dominates any
/// backprojection. Excluded pixels carry intensity 0.
struct ImagingOptions {
    double min_range_mm{250.0};
    double min_clearance_mm{0.0};
    std::vector<PathId> paths{kAllPaths.begin(), kAllPaths.end()};
};

bool pixel_valid(const Scene& scene, Point2 x, const ImagingOptions& options);

enum class SteeringKind { coarse, fine };
enum class SubspaceSide { left, right };

/// Model signature of a hypothetical point target at x for one path:
/// component k = omega^2 G_p^2(omega, antenna, x) S_T(omega) evaluated at the
/// coarse or fine subsampling frequencies.
struct SteeringVector {
    ComplexVector values; // length L
    PathId path;
    SteeringKind kind;
};

SteeringVector steering(const Scene& scene, const FrequencyGrid& grid, const Pulse& pulse,
                        PathId path, Point2 x, SteeringKind kind);

/// Conventional time-reversal image: the matched-filtered spectrum is
/// back-propagated through the two-way multipath Green function and the pixel
/// takes the clamped real part of the coherent sum (the back-propagated field
/// at t = 0, which is real and maximal at the true target). A raw-convention
/// spectrum is matched-filtered with S_T^* first.
ImageGrid tr_image(const SpectrumVector& sv, const Scene& scene, const Pulse& pulse,
                   const RasterSpec& raster, const ImagingOptions& options = {});

/// Left/right noise-subspace image. Left pairs the u_i with coarse-frequency
/// steering vectors g_p, right pairs the v_i with fine-frequency steering
/// vectors h_p. Pixel value is 1 over the accumulated normalized projections
/// onto the noise basis. Pixels where any selected path has zero steering norm
/// are excluded; if every pixel is excluded a NumericalError is thrown.
///
/// The right-side projection is bilinear (v_i^T h_p): the right singular
/// vectors of the frequency-frequency matrix carry the conjugated fine
/// signatures, so a sesquilinear form would peak at the conjugate-matched
/// range instead of the target.
ImageGrid subspace_image(const NoiseSubspace& ns, SubspaceSide side, const Scene& scene,
                         const FrequencyGrid& grid, const Pulse& pulse,
                         const RasterSpec& raster, const ImagingOptions& options = {});

/// Pixel-wise product of the left and right images, renormalized to max 1.
/// Throws ValidationError if the rasters differ.
ImageGrid dort_image(const ImageGrid& left, const ImageGrid& right);

} // namespace sfdort
