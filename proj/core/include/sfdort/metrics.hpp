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

#include <string>

#include "sfdort/imaging.hpp"

namespace sfdort {

/// Physical coordinates of the argmax pixel centre; ties break to the lowest
/// row-major index. Throws ValidationError on a uniform image.
Point2 peak_position(const ImageGrid& image);

/// e(r) = | |x_E - x_T| - r |: distance from the estimate to the target
/// surface.
double position_error(Point2 estimated, Point2 actual_center, double radius_mm);

/// Muller-Buffington sharpness h_q: mean of the q-th powers of max-normalized
/// intensities, accumulated with compensated summation so the result does not
/// depend on reduction order. Smaller is sharper. Throws ValidationError for
/// q < 1 or an all-zero image.
double mb_sharpness(const ImageGrid& image, double q = 4.0);

/// Rectangular pixel window for the region-of-interest sharpness variant.
struct RegionOfInterest {
    int row0{0};
    int col0{0};
    int height{0};
    int width{0};
};

/// h_q restricted to a window: normalization and pixel count both use the
/// window only. The whole-raster overload above is the default metric.
double mb_sharpness(const ImageGrid& image, double q, const RegionOfInterest& roi);

/// One evaluated method on one scene.
struct EvalReport {
    std::string method; // "tr" or "dort"
    Point2 estimated_position;
    double error_mm{0.0};
    double sharpness_h4{0.0};
    double runtime_s{0.0};
};

} // namespace sfdort
