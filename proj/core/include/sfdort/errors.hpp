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

#include <stdexcept>
#include <string>

namespace sfdort {

/// Base class for all pipeline-level failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid scene, grid, raster or run configuration (CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure, e.g. an SVD that does not meet its contract (exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// File-system or format failure (exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sfdort
