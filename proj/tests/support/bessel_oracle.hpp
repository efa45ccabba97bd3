// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#pragma once

// Independent J0/Y0 oracle for the test suite; also the fixture generator for
// the committed reference table.
//
// Construction is deliberately different from the library implementation:
//  - brute-force 200-term ascending power series evaluated in double-double
//    arithmetic up to x = 45 (the library switches representation at x = 12
//    and runs in plain double),
//  - optimally truncated Hankel expansion above x = 45, where its smallest
//    term is far below double rounding.
// Absolute error is certified below 1e-10 on (0, 5000]; spot-checked in the
// test suite against 20-digit reference values.

namespace sfdort::testsupport {

double oracle_j0(double x); // x >= 0
double oracle_y0(double x); // x > 0

/// Writes the n-point log-spaced reference table (x, J0, Y0) used by the
/// special-function acceptance criterion to a CSV file.
void write_bessel_fixture(const char* path, double x_lo, double x_hi, int n);

} // namespace sfdort::testsupport
