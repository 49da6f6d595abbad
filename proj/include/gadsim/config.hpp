// Copyright 2026 The gadsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

namespace gadsim {

// All numerical tolerances used for validation and verification live here.
struct Tolerances {
    // DensityMatrix construction.
    static constexpr double hermitian = 1e-12;
    static constexpr double trace = 1e-12;
    static constexpr double psd_floor = -1e-12;

    // Symmetry required before an eigenvalue routine will run.
    static constexpr double eig_input_hermitian = 1e-10;

    // Cyclic Jacobi on 4x4 Hermitian matrices.
    static constexpr double jacobi_offdiag = 1e-13;
    static constexpr int jacobi_max_sweeps = 100;

    // Sum of populations in a Populations record.
    static constexpr double populations = 1e-12;

    // KrausSet completeness when built by kraus_gad.
    static constexpr double completeness = 1e-12;

    // verify_cptp verdict thresholds (looser: absorbs Jacobi error).
    static constexpr double cptp_residual = 1e-10;
    static constexpr double cptp_min_eigenvalue = -1e-10;

    // (lambda, t) parameterization consistency with p.
    static constexpr double rate_consistency = 1e-12;

    // second_interferometer weight bookkeeping.
    static constexpr double port_weight = 1e-12;
};

}  // namespace gadsim
