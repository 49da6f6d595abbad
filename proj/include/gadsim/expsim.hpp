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
#include <cstdint>
#include <exception>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gadsim/error.hpp"
#include "gadsim/optics.hpp"
#include "gadsim/rng.hpp"
#include "gadsim/smallmat.hpp"
#include "gadsim/thermal.hpp"

namespace gadsim {

/// Phenomenological two-crystal SPDC source producing
/// cos(alpha)|HH> + e^{i delta} sin(alpha)|VV> (signal (x) idler).
struct SourceConfig {
    double alpha = 0;
    double delta = 0;

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(delta)) {
            throw Error(ErrorCode::InvalidSpec, "source angles must be finite");
        }
    }

    /// Heralded signal populations (cos^2 alpha, sin^2 alpha), exact at the
    /// pure-state settings alpha = 0 and pi/2.
    Populations signal_populations() const {
        return Populations::checked(cos_sq(alpha), sin_sq(alpha));
    }
};

struct CountRecord {
    std::uint64_t n_total = 0;
    std::uint64_t n_h = 0;
    std::uint64_t n_v = 0;
    double beta_hat = 0;
    double beta_err = 0;

    bool operator==(const CountRecord &other) const = default;
};

inline Mat4 source_state(const SourceConfig &cfg) {
    cfg.validate();
    const std::array<Complex, 4> psi{std::cos(cfg.alpha), 0.0, 0.0, std::polar(1.0, cfg.delta) * std::sin(cfg.alpha)};
    Mat4 rho{};
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            rho(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return rho;
}

/// Signal state prepared by detecting the idler without polarization
/// analysis.
inline DensityMatrix heralded_signal(const SourceConfig &cfg) {
    return partial_trace_idler(source_state(cfg));
}

/// Point estimate ln(n_h / n_v) / eps and delta-method standard error
/// sqrt(1/n_h + 1/n_v) / eps. A zero count gives an infinite estimate and an
/// infinite error.
inline std::pair<double, double> estimate_beta(const CountRecord &counts, double eps = 1) {
    if (counts.n_total == 0) {
        throw Error(ErrorCode::EmptyRun, "no heralded events");
    }
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw Error(ErrorCode::InvalidSpec, "energy gap must be finite and > 0");
    }
    if (counts.n_h == 0 || counts.n_v == 0) {
        return {counts.n_v == 0 ? kInf : -kInf, kInf};
    }
    const double h = static_cast<double>(counts.n_h);
    const double v = static_cast<double>(counts.n_v);
    return {(std::log(h) - std::log(v)) / eps, std::sqrt(1 / h + 1 / v) / eps};
}

/// Projective H/V detection of n heralded photons. Estimates are filled in
/// for eps when n > 0.
inline CountRecord sample_counts(const DensityMatrix &rho, std::uint64_t n, RngStream &rng, double eps = 1) {
    const double p_h = std::clamp(rho.p_h(), 0.0, 1.0);
    CountRecord rec;
    rec.n_total = n;
    rec.n_h = rng.binomial(n, p_h);
    rec.n_v = n - rec.n_h;
    if (n > 0) {
        std::tie(rec.beta_hat, rec.beta_err) = estimate_beta(rec, eps);
    }
    return rec;
}

struct ExperimentRow {
    std::size_t input_index = 0;
    double alpha = 0;
    double phi = 0;
    double theta = 0;
    double beta_in = 0;
    double beta_out_analytic = 0;
    CountRecord counts;

    bool operator==(const ExperimentRow &other) const = default;
};

/// Runs one heralded measurement block per (input, phi, theta), in that
/// lexicographic order. Point k draws from rng.substream(k), so results do
/// not depend on `threads`.
inline std::vector<ExperimentRow> run_experiment(const std::vector<SourceConfig> &inputs, const std::vector<double> &phis,
                                                 const std::vector<double> &thetas, std::uint64_t n_per_point,
                                                 double eps, const RngStream &rng, unsigned threads = 1) {
    if (inputs.empty() || phis.empty() || thetas.empty()) {
        throw Error(ErrorCode::InvalidSpec, "inputs, phis and thetas must be nonempty");
    }
    if (n_per_point == 0) {
        throw Error(ErrorCode::EmptyRun, "n_per_point must be > 0");
    }
    detail::check_gap(eps);

    std::vector<DensityMatrix> signals;
    signals.reserve(inputs.size());
    for (const auto &cfg : inputs) {
        signals.push_back(heralded_signal(cfg));
    }

    const std::size_t per_input = phis.size() * thetas.size();
    std::vector<ExperimentRow> rows(inputs.size() * per_input);

    auto run_point = [&](std::size_t k) {
        const std::size_t in = k / per_input;
        const std::size_t f = (k % per_input) / thetas.size();
        const std::size_t t = k % thetas.size();
        const BathAngles angles{thetas[t], phis[f], eps};

        ExperimentRow &row = rows[k];
        row.input_index = in;
        row.alpha = inputs[in].alpha;
        row.phi = phis[f];
        row.theta = thetas[t];
        row.beta_in = inverse_temperature(inputs[in].signal_populations(), eps);
        row.beta_out_analytic = beta_out(angles);

        RngStream point_rng = rng.substream(k);
        row.counts = sample_counts(pipeline(signals[in], angles, false), n_per_point, point_rng, eps);
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
    if (threads == 1) {
        for (std::size_t k = 0; k < rows.size(); k++) {
            run_point(k);
        }
        return rows;
    }

    std::vector<std::exception_ptr> failures(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < rows.size(); k += threads) {
                        run_point(k);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto &failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return rows;
}

}  // namespace gadsim
