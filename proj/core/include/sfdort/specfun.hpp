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

#include <complex>

namespace sfdort {

/// H0(x) = J0(x) + j Y0(x), Hankel function of the first kind, order zero.
using HankelValue = std::complex<double>;

/// Largest supported argument. Covers omega*d/c for the supported band and a
/// 10 m scene; larger arguments raise std::range_error instead of silently
/// degrading.
inline constexpr double kMaxBesselArgument = 5000.0;

/// Bessel function of the first kind, order zero.
///
/// Ascending power series below x = 12, Hankel asymptotic expansion (P/Q form,
/// truncated at the smallest term) above. Absolute error is below 1e-11 on
/// [0, 5000], comfortably inside the 1e-8 contract checked against the series
/// oracle in the test suite.
///
/// Throws std::domain_error for x < 0 and std::range_error for x > 5000.
double bessel_j0(double x);

/// Bessel function of the second kind, order zero. Same technique and error
/// budget as bessel_j0; logarithmically singular at the origin.
///
/// Throws std::domain_error for x <= 0 and std::range_error for x > 5000.
double bessel_y0(double x);

/// H0(x) = J0(x) + j Y0(x). For x >= 10 the magnitude agrees with the
/// far-field form sqrt(2/(pi x)) to better than 1%.
HankelValue hankel0(double x);

} // namespace sfdort
