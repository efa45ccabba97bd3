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

#include "sfdort/metrics.hpp"

#include <cmath>

#include "sfdort/errors.hpp"

namespace sfdort {

Point2 peak_position(const ImageGrid& image) {
    const auto& v = image.intensities;
    if (v.empty()) throw ValidationError("peak_position: empty image");
    double mx = v[0], mn = v[0];
    std::size_t arg = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > mx) {
            mx = v[i];
            arg = i; // strict > keeps the lowest row-major index on ties
        }
        if (v[i] < mn) mn = v[i];
    }
    if (mx == mn) throw ValidationError("peak_position: uniform image has no peak");
    const int row = static_cast<int>(arg) / image.raster.width;
    const int col = static_cast<int>(arg) % image.raster.width;
    return image.raster.pixel_center(row, col);
}

double position_error(Point2 estimated, Point2 actual_center, double radius_mm) {
    if (radius_mm < 0.0) throw ValidationError("position_error: radius must be >= 0");
    return std::abs(distance(estimated, actual_center) - radius_mm);
}

namespace {

// Neumaier-compensated mean of (x/mx)^q; the result must not depend on
// reduction order.
template <typename NextFn>
double compensated_hq(NextFn next, std::size_t count, double mx, double q) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double term = std::pow(next(i) / mx, q);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return (sum + comp) / static_cast<double>(count);
}

} // namespace

double mb_sharpness(const ImageGrid& image, double q) {
    if (q < 1.0) throw ValidationError("mb_sharpness: order q must be >= 1");
    const auto& v = image.intensities;
    if (v.empty()) throw ValidationError("mb_sharpness: empty image");
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, x);
    if (mx <= 0.0) throw ValidationError("mb_sharpness: zero image");
    return compensated_hq([&](std::size_t i) { return v[i]; }, v.size(), mx, q);
}

double mb_sharpness(const ImageGrid& image, double q, const RegionOfInterest& roi) {
    if (q < 1.0) throw ValidationError("mb_sharpness: order q must be >= 1");
    if (roi.row0 < 0 || roi.col0 < 0 || roi.height < 1 || roi.width < 1 ||
        roi.row0 + roi.height > image.raster.height ||
        roi.col0 + roi.width > image.raster.width)
        throw ValidationError("mb_sharpness: region of interest outside the raster");
    double mx = 0.0;
    for (int r = roi.row0; r < roi.row0 + roi.height; ++r)
        for (int c = roi.col0; c < roi.col0 + roi.width; ++c)
            mx = std::max(mx, image.at(r, c));
    if (mx <= 0.0) throw ValidationError("mb_sharpness: zero image in the region of interest");
    const std::size_t count = static_cast<std::size_t>(roi.height) * roi.width;
    return compensated_hq(
        [&](std::size_t i) {
            const int r = roi.row0 + static_cast<int>(i) / roi.width;
            const int c = roi.col0 + static_cast<int>(i) % roi.width;
            return image.at(r, c);
        },
        count, mx, q);
}

} // namespace sfdort
