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

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace sfdort {

/// Propagation speed in free space, in mm/s (all geometry is in millimetres).
inline constexpr double kSpeedOfLight = 2.9979e11;

struct Point2 {
    double x{0.0};
    double y{0.0};
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Metallic scatterer. radius 0 means an ideal point target; the contrast is
/// the collapsed Born scattering weight of the target.
struct Target {
    Point2 center;
    double radius{0.0};
    double contrast{1.0};
};

/// Monostatic radar scene. The mirror wall is the x-axis (y = 0); everything
/// physical lives strictly above it.
struct Scene {
    Point2 antenna{0.0, 600.0};
    std::complex<double> reflection{-1.0, 0.0}; // wall reflection coefficient rho
    double speed{kSpeedOfLight};                // mm/s
    std::vector<Target> targets;
};

/// Point symmetric about the wall (x-axis). Involution: mirror(mirror(p)) == p.
inline Point2 mirror(Point2 p) { return {p.x, -p.y}; }

/// First violated scene invariant as a human-readable message, or nullopt if
/// the scene is valid.
std::optional<std::string> scene_violation(const Scene& scene);

/// Throws ValidationError naming the offending field if the scene is invalid.
void validate_scene(const Scene& scene);

struct PathLengths {
    double direct;   // |antenna - p|
    double mirrored; // |mirror(antenna) - p|
};

/// Direct and via-wall distances from the antenna to a field point.
PathLengths path_lengths(const Scene& scene, Point2 p);

} // namespace sfdort
