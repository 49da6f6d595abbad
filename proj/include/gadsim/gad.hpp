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

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <sstream>

#include "gadsim/config.hpp"
#include "gadsim/error.hpp"
#include "gadsim/smallmat.hpp"

namespace gadsim {

/// Generalized amplitude damping parameters.
///
/// xi is the bath's excited-state population and p the decay probability.
/// xi is accepted on all of [0, 1]; xi > 1/2 is a negative-temperature bath.
/// (lambda, t) is optional: when present, p must equal 1 - e^{-lambda t}.
struct GadParams {
    double xi = 0;
    double p = 0;
    std::optional<double> lambda;
    std::optional<double> t;

    static GadParams from_rate(double xi, double lambda, double t) {
        GadParams params{xi, 1 - std::exp(-lambda * t), lambda, t};
        params.validate();
        return params;
    }

    void validate() const {
        if (!(xi >= 0 && xi <= 1)) {
            throw Error(ErrorCode::InvalidParams, "xi must lie in [0, 1]");
        }
        if (!(p >= 0 && p <= 1)) {
            throw Error(ErrorCode::InvalidParams, "p must lie in [0, 1]");
        }
        if (lambda.has_value() != t.has_value()) {
            throw Error(ErrorCode::InvalidParams, "lambda and t must be given together");
        }
        if (lambda) {
            if (!(*lambda >= 0) || !(*t >= 0)) {
                throw Error(ErrorCode::InvalidParams, "lambda and t must be >= 0");
            }
            if (std::abs(p - (1 - std::exp(-*lambda * *t))) > Tolerances::rate_consistency) {
                throw Error(ErrorCode::InvalidParams, "p is inconsistent with 1 - exp(-lambda t)");
            }
        }
    }
};

/// Four Kraus operators. Built by kraus_gad these satisfy completeness;
/// hand-assembled sets are unchecked until passed to verify_cptp.
struct KrausSet {
    std::array<Mat2, 4> ops{};
};

/// Largest entry of |sum_k G_k^dag G_k - I|.
inline double completeness_residual(std::span<const Mat2> ops) {
    Mat2 sum{};
    for (const auto &g : ops) {
        sum += adjoint(g) * g;
    }
    return max_abs_diff(sum, Mat2::identity());
}

inline KrausSet kraus_gad(const GadParams &params) {
    params.validate();
    const double keep = std::sqrt(1 - params.xi);
    const double bath = std::sqrt(params.xi);
    const double decay = std::sqrt(params.p);
    const double survive = std::sqrt(1 - params.p);

    KrausSet k;
    k.ops[0] = Mat2::diagonal({keep, keep * survive});
    k.ops[1](0, 1) = keep * decay;
    k.ops[2](1, 0) = bath * decay;
    k.ops[3] = Mat2::diagonal({bath * survive, bath});

    const double residual = completeness_residual(k.ops);
    if (residual > Tolerances::completeness) {
        std::ostringstream ss;
        ss << "Kraus completeness residual " << residual;
        throw Error(ErrorCode::InvalidParams, ss.str());
    }
    return k;
}

/// rho -> sum_k G_k rho G_k^dag. Throws Error(InvalidState) if the result is
/// not a valid state (possible only for a non-CPTP hand-built set).
inline DensityMatrix apply_channel(const KrausSet &k, const DensityMatrix &rho) {
    Mat2 out{};
    for (const auto &g : k.ops) {
        out += g * rho.matrix() * adjoint(g);
    }
    return DensityMatrix::from_matrix(out);
}

/// Closed-form GAD output: populations relax toward (1 - xi, xi) with weight
/// p; coherences shrink by sqrt(1 - p).
inline DensityMatrix gad_closed_form(const DensityMatrix &rho, const GadParams &params) {
    params.validate();
    const double p = params.p;
    const double xi = params.xi;
    const double excited = rho.p_v();
    const double coherence = std::sqrt(1 - p);
    Mat2 out{};
    out(0, 0) = 1 - p * xi - excited * (1 - p);
    out(0, 1) = rho(0, 1) * coherence;
    out(1, 0) = rho(1, 0) * coherence;
    out(1, 1) = excited * (1 - p) + p * xi;
    return DensityMatrix::from_matrix(out);
}

/// Infinite-interaction-time output diag(1 - xi, xi), independent of input.
inline DensityMatrix full_thermalization(double xi) {
    if (!(xi >= 0 && xi <= 1)) {
        throw Error(ErrorCode::InvalidParams, "xi must lie in [0, 1]");
    }
    return DensityMatrix::from_diagonal(1 - xi, xi);
}

/// Choi matrix sum_k (G_k (x) I)|Phi><Phi|(G_k (x) I)^dag with the
/// unnormalized |Phi> = |00> + |11>, so a trace-preserving map has Tr C = 2.
inline Mat4 choi_matrix(std::span<const Mat2> ops) {
    Mat4 c{};
    for (const auto &g : ops) {
        // (G (x) I)|Phi> = sum_j G|j> (x) |j>, i.e. entry (2i + j) = G(i, j).
        std::array<Complex, 4> v{};
        for (std::size_t i = 0; i < 2; i++) {
            for (std::size_t j = 0; j < 2; j++) {
                v[2 * i + j] = g(i, j);
            }
        }
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t s = 0; s < 4; s++) {
                c(r, s) += v[r] * std::conj(v[s]);
            }
        }
    }
    return c;
}

inline Mat4 choi_matrix(const KrausSet &k) {
    return choi_matrix(std::span<const Mat2>(k.ops));
}

struct CptpReport {
    double completeness_residual = 0;
    double min_choi_eigenvalue = 0;
    bool pass = false;
};

/// Checks trace preservation (completeness) and complete positivity (Choi
/// spectrum) of an arbitrary set of Kraus operators.
inline CptpReport verify_cptp(std::span<const Mat2> ops) {
    CptpReport report;
    report.completeness_residual = completeness_residual(ops);
    report.min_choi_eigenvalue = eig_hermitian_4(choi_matrix(ops))[0];
    report.pass = report.completeness_residual <= Tolerances::cptp_residual &&
                  report.min_choi_eigenvalue >= Tolerances::cptp_min_eigenvalue;
    return report;
}

inline CptpReport verify_cptp(const KrausSet &k) {
    return verify_cptp(std::span<const Mat2>(k.ops));
}

}  // namespace gadsim
