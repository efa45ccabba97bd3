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

#include "sfdort/geometry.hpp"

#include <cmath>

#include "sfdort/errors.hpp"

namespace sfdort {

namespace {

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

} // namespace

std::optional<std::string> scene_violation(const Scene& scene) {
    if (!finite(scene.antenna)) return "scene.antenna: coordinates must be finite";
    if (!(scene.antenna.y > 0.0)) return "scene.antenna: antenna must be above the wall (y > 0)";
    if (!std::isfinite(scene.reflection.real()) || !std::isfinite(scene.reflection.imag()))
        return "scene.reflection_coeff: must be finite";
    if (std::abs(scene.reflection) > 1.0 + 1e-12)
        return "scene.reflection_coeff: |rho| must not exceed 1";
    if (!(scene.speed > 0.0) || !std::isfinite(scene.speed))
        return "scene.speed: propagation speed must be positive and finite";
    for (std::size_t i = 0; i < scene.targets.size(); ++i) {
        const Target& t = scene.targets[i];
        const std::string tag = "scene.targets[" + std::to_string(i) + "]";
        if (!finite(t.center)) return tag + ".center: coordinates must be finite";
        if (!(t.radius >= 0.0) || !std::isfinite(t.radius))
            return tag + ".radius: must be >= 0";
        if (!(t.center.y - t.radius > 0.0))
            return tag + ": target intersects the wall (center.y - radius must be > 0)";
        if (!std::isfinite(t.contrast)) return tag + ".contrast: must be finite";
    }
    return std::nullopt;
}

void validate_scene(const Scene& scene) {
    if (auto v = scene_violation(scene)) throw ValidationError(*v);
}

PathLengths path_lengths(const Scene& scene, Point2 p) {
    return {distance(scene.antenna, p), distance(mirror(scene.antenna), p)};
}

} // namespace sfdort
