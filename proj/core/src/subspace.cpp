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

#include "sfdort/subspace.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <string>

#include "sfdort/errors.hpp"

namespace sfdort {

KffMatrix build_kff(const SpectrumVector& sv) {
    const int l = sv.grid.n_coarse;
    if (static_cast<int>(sv.values.size()) != l * l ||
        sv.grid.n_total != l * l)
        throw ValidationError("build_kff: spectrum length " +
                              std::to_string(sv.values.size()) + " is not L^2 with L=" +
                              std::to_string(l));
    KffMatrix k;
    k.order = l;
    k.grid = sv.grid;
    k.entries = sv.values; // row i = S_{iL+1} .. S_{iL+L}, already row-major
    return k;
}

SvdResult svd(const KffMatrix& kff) {
    const int l = kff.order;
    Eigen::MatrixXcd m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const auto v = kff.at(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ValidationError("svd: non-finite matrix entry");
            m(i, j) = v;
        }

    Eigen::JacobiSVD<Eigen::MatrixXcd> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXcd u = dec.matrixU();
    Eigen::MatrixXcd v = dec.matrixV();
    const Eigen::VectorXd sig = dec.singularValues();

    // Canonical phase: rotate each (u_i, v_i) pair so the largest-magnitude
    // component of u_i is real-positive. u v^H is invariant under the
    // same-phase rotation of both vectors.
    for (int i = 0; i < l; ++i) {
        int arg = 0;
        double best = -1.0;
        for (int r = 0; r < l; ++r) {
            const double a = std::abs(u(r, i));
            if (a > best) {
                best = a;
                arg = r;
            }
        }
        if (best > 0.0) {
            const std::complex<double> phase = u(arg, i) / best;
            u.col(i) /= phase;
            v.col(i) /= phase;
        }
    }

    // Contract check in lieu of an iteration-count failure signal.
    const double fro = m.norm();
    const double recon_err =
        fro > 0.0 ? (u * sig.asDiagonal() * v.adjoint() - m).norm() / fro : 0.0;
    const double orth_u = (u.adjoint() * u - Eigen::MatrixXcd::Identity(l, l)).norm();
    const double orth_v = (v.adjoint() * v - Eigen::MatrixXcd::Identity(l, l)).norm();
    if (recon_err > 1e-10 || orth_u > 1e-10 || orth_v > 1e-10) {
        const double cond =
            sig(l - 1) > 0.0 ? sig(0) / sig(l - 1) : std::numeric_limits<double>::infinity();
        throw NumericalError("svd: contract violated (reconstruction " +
                             std::to_string(recon_err) + ", orthonormality " +
                             std::to_string(std::max(orth_u, orth_v)) + ", sigma1/sigmaL " +
                             std::to_string(cond) + ")");
    }

    SvdResult out;
    out.order = l;
    out.singular_values.assign(sig.data(), sig.data() + l);
    out.left.resize(l);
    out.right.resize(l);
    for (int i = 0; i < l; ++i) {
        out.left[i].resize(l);
        out.right[i].resize(l);
        for (int r = 0; r < l; ++r) {
            out.left[i][r] = u(r, i);
            out.right[i][r] = v(r, i);
        }
    }
    return out;
}

NoiseSubspace noise_subspace(const SvdResult& svd_result, int p_paths, int k_targets) {
    const int l = svd_result.order;
    const int pk = p_paths * k_targets;
    if (p_paths < 1 || k_targets < 1)
        throw ValidationError("noise_subspace: P and K must be positive");
    if (pk >= l)
        throw ValidationError("noise_subspace: P*K = " + std::to_string(pk) +
                              " leaves no noise subspace for L = " + std::to_string(l));
    NoiseSubspace ns;
    ns.p_paths = p_paths;
    ns.k_targets = k_targets;
    for (int i = pk; i < l; ++i) {
        ns.left.push_back(svd_result.left[i]);
        ns.right.push_back(svd_result.right[i]);
    }
    return ns;
}

NoiseSubspace noise_subspace_by_threshold(const SvdResult& svd_result, double epsilon) {
    const int l = svd_result.order;
    if (!(epsilon > 0.0))
        throw ValidationError("noise_subspace_by_threshold: epsilon must be positive");
    const double cutoff = epsilon * svd_result.singular_values[0];
    int first = l; // singular values are sorted descending
    while (first > 0 && svd_result.singular_values[first - 1] < cutoff) --first;
    if (first == l)
        throw ValidationError(
            "noise_subspace_by_threshold: no singular value below the threshold");
    NoiseSubspace ns;
    ns.p_paths = first; // implied signal dimension
    ns.k_targets = 1;
    for (int i = first; i < l; ++i) {
        ns.left.push_back(svd_result.left[i]);
        ns.right.push_back(svd_result.right[i]);
    }
    return ns;
}

} // namespace sfdort
