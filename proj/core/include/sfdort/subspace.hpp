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
#include <vector>

#include "sfdort/forward.hpp"

namespace sfdort {

using ComplexVector = std::vector<std::complex<double>>;

/// L x L frequency-frequency matrix. Row-major: entry(i, j) = S_{i*L + j + 1}
/// for 0-based i, j, so rows step coarsely (L*delta_omega) and columns finely
/// (delta_omega).
struct KffMatrix {
    int order{0}; // L
    ComplexVector entries;
    FrequencyGrid grid;

    std::complex<double> at(int row, int col) const { return entries[row * order + col]; }
};

/// Reshape S_1..S_N into the L x L matrix; throws ValidationError if N != L^2.
KffMatrix build_kff(const SpectrumVector& sv);

/// Full SVD K = U Sigma V^H with singular values sorted descending. The phase
/// of each (u_i, v_i) pair is canonicalized so that the largest-magnitude
/// component of u_i is real and positive; consumers must stay phase-invariant
/// regardless.
struct SvdResult {
    int order{0};
    std::vector<ComplexVector> left;  // u_1..u_L, each length L
    std::vector<ComplexVector> right; // v_1..v_L, each length L
    std::vector<double> singular_values;
};

/// Complex SVD of the frequency-frequency matrix. The result is verified
/// against the contract (reconstruction and orthonormality residuals below
/// 1e-10); a violation throws NumericalError with condition diagnostics.
SvdResult svd(const KffMatrix& kff);

/// Trailing L - P*K left/right singular vectors spanning the noise subspaces.
struct NoiseSubspace {
    std::vector<ComplexVector> left;
    std::vector<ComplexVector> right;
    int p_paths{0};
    int k_targets{0};
};

/// Selects the noise subspace; throws ValidationError when P*K >= L (the
/// subspace would be empty).
NoiseSubspace noise_subspace(const SvdResult& svd_result, int p_paths, int k_targets);

/// Energy-threshold selection for degenerate cases: the noise subspace is
/// every pair with sigma_i / sigma_1 < epsilon, however many that is. Off the
/// default pipeline path; throws ValidationError when nothing falls below the
/// threshold.
NoiseSubspace noise_subspace_by_threshold(const SvdResult& svd_result, double epsilon);

} // namespace sfdort
