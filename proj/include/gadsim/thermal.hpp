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

#include <algorithm>
#include <cmath>
#include <limits>

#include "gadsim/config.hpp"
#include "gadsim/error.hpp"
#include "gadsim/smallmat.hpp"

namespace gadsim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Inverse temperature and energy gap of a polarization qubit. |H> is the
/// ground state, |V> the excited state; beta may be +inf or -inf.
struct ThermalSpec {
    double beta = 0;
    double eps = 1;

    void validate() const {
        if (!(eps > 0) || !std::isfinite(eps)) {
            throw Error(ErrorCode::InvalidSpec, "energy gap must be finite and > 0");
        }
        if (std::isnan(beta)) {
            throw Error(ErrorCode::InvalidSpec, "beta is NaN");
        }
    }
};

struct Populations {
    double p_h = 0.5;
    double p_v = 0.5;

    /// Diagonal of a state, clamped into [0, 1] to absorb rounding.
    static Populations of(const DensityMatrix &rho) {
        return checked(std::clamp(rho.p_h(), 0.0, 1.0), std::clamp(rho.p_v(), 0.0, 1.0));
    }

    static Populations checked(double p_h, double p_v) {
        if (!(p_h >= 0 && p_h <= 1 && p_v >= 0 && p_v <= 1) ||
            std::abs(p_h + p_v - 1) > Tolerances::populations) {
            throw Error(ErrorCode::InvalidSpec, "populations must lie in [0,1] and sum to 1");
        }
        return {p_h, p_v};
    }
};

namespace detail {

inline void check_gap(double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw Error(ErrorCode::InvalidSpec, "energy gap must be finite and > 0");
    }
}

// 1 / (1 + e^x) without overflow for any x, including +-inf.
inline double logistic_complement(double x) {
    if (x >= 0) {
        const double e = std::exp(-x);
        return e / (1 + e);
    }
    return 1 / (1 + std::exp(x));
}

}  // namespace detail

/// Excited-state population xi = 1 / (1 + e^{beta eps}); 0 at beta = +inf,
/// 1 at beta = -inf.
inline double excited_population(double beta, double eps = 1) {
    detail::check_gap(eps);
    if (std::isnan(beta)) {
        throw Error(ErrorCode::InvalidSpec, "beta is NaN");
    }
    return detail::logistic_complement(beta * eps);
}

/// Gibbs state diag(P_H, P_V). Each population is computed in its own
/// non-overflowing form so neither underflows to zero via cancellation.
inline DensityMatrix thermal_state(const ThermalSpec &spec) {
    spec.validate();
    const double x = spec.beta * spec.eps;
    const double p_v = detail::logistic_complement(x);
    const double p_h = detail::logistic_complement(-x);
    return DensityMatrix::from_diagonal(p_h, p_v);
}

/// beta = ln(P_H / P_V) / eps. Pure H gives +inf, pure V gives -inf.
inline double inverse_temperature(const Populations &pop, double eps = 1) {
    detail::check_gap(eps);
    if (pop.p_h == 0 && pop.p_v == 0) {
        throw Error(ErrorCode::DegenerateState, "both populations are zero");
    }
    return (std::log(pop.p_h) - std::log(pop.p_v)) / eps;
}

}  // namespace gadsim
