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

#include "gadsim/error.hpp"
#include "gadsim/smallmat.hpp"

namespace gadsim {

// Element-by-element model of the thermal-bath optical scheme:
//
//   rho_in -> [unbalanced MZI: dephase] -> [HWP: H->D, V->A]
//          -> PBS -> { H arm: HWP H->|phi>, V arm: HWP V->|theta> } -> PBS
//          -> both output ports summed on one detector -> rho_out
//
// Conventions: |phi> = cos(phi)|H> + sin(phi)|V>, |theta> = sin(theta)|H> +
// cos(theta)|V>. The recombining PBS transmits H and reflects V; port "s"
// collects the H-arm transmission and the V-arm reflection, port "l" the rest.
// Both interferometers are unbalanced beyond the coherence length, so arms
// and ports add incoherently.

/// Arm wave-plate angles of the second interferometer and the energy gap
/// used to express its output as an inverse temperature.
struct BathAngles {
    double theta = 0;
    double phi = 0;
    double eps = 1;

    void validate() const {
        if (!std::isfinite(theta) || !std::isfinite(phi)) {
            throw Error(ErrorCode::InvalidSpec, "bath angles must be finite");
        }
        if (!(eps > 0) || !std::isfinite(eps)) {
            throw Error(ErrorCode::InvalidSpec, "energy gap must be finite and > 0");
        }
    }
};

/// Output of the second interferometer. Weights follow the convention
/// c_s + c_l = 2, with rho_out = (c_s rho_s + c_l rho_l) / 2. A dark port has
/// weight 0 and a maximally mixed placeholder state.
struct PortPair {
    DensityMatrix rho_s = DensityMatrix::maximally_mixed();
    double c_s = 0;
    DensityMatrix rho_l = DensityMatrix::maximally_mixed();
    double c_l = 0;
};

// cos^2 and sin^2 through the double angle. Exact zeros at multiples of pi/2,
// where cos(x)^2 would leave ~1e-33 behind.
inline double cos_sq(double x) {
    return 0.5 * (1 + std::cos(2 * x));
}
inline double sin_sq(double x) {
    return 0.5 * (1 - std::cos(2 * x));
}

/// Jones matrix of a half-wave plate with its fast axis at `angle` from H.
inline Mat2 half_wave_plate(double angle) {
    const double c = std::cos(2 * angle);
    const double s = std::sin(2 * angle);
    Mat2 m{};
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -c;
    return m;
}

/// First (unbalanced) interferometer: coherences vanish, populations stay.
inline DensityMatrix dephase(const DensityMatrix &rho) {
    return DensityMatrix::from_diagonal(rho.p_h(), rho.p_v());
}

/// Wave plate taking |H> -> |D>, |V> -> |A>.
inline DensityMatrix rotate_hv_to_da(const DensityMatrix &rho) {
    const double r = 1 / std::sqrt(2.0);
    Mat2 u{};
    u(0, 0) = r;
    u(0, 1) = r;
    u(1, 0) = r;
    u(1, 1) = -r;
    return DensityMatrix::from_matrix(u * rho.matrix() * adjoint(u));
}

/// Second unbalanced interferometer with a wave plate in each arm.
///
/// The input PBS sends the H population into the phi arm and the V population
/// into the theta arm; only populations survive because the arms are
/// mutually incoherent. For the equal-population input produced by
/// rotate_hv_to_da(dephase(.)) this gives rho_s = diag(cos^2 phi, cos^2 theta)
/// / c_s and rho_l = diag(sin^2 theta, sin^2 phi) / c_l.
inline PortPair second_interferometer(const DensityMatrix &rho2, const BathAngles &angles) {
    angles.validate();
    const double weight_h_arm = rho2.p_h();
    const double weight_v_arm = rho2.p_v();

    // H arm carries |H>, V arm carries |V>. The V-arm plate sits at -theta/2
    // so that |V> -> -|theta>; the global sign is irrelevant.
    const Mat2 plate_h = half_wave_plate(angles.phi / 2);
    const Mat2 plate_v = half_wave_plate(-angles.theta / 2);
    const std::array<Complex, 2> out_h{plate_h(0, 0), plate_h(1, 0)};
    const std::array<Complex, 2> out_v{plate_v(0, 1), plate_v(1, 1)};

    // Unnormalized diagonal port states, indexed [H, V].
    const std::array<double, 2> port_s{weight_h_arm * std::norm(out_h[0]), weight_v_arm * std::norm(out_v[1])};
    const std::array<double, 2> port_l{weight_v_arm * std::norm(out_v[0]), weight_h_arm * std::norm(out_h[1])};

    auto normalized = [](const std::array<double, 2> &port, double c) {
        if (c == 0) {
            return DensityMatrix::maximally_mixed();
        }
        return DensityMatrix::from_diagonal(2 * port[0] / c, 2 * port[1] / c);
    };

    PortPair ports;
    ports.c_s = 2 * (port_s[0] + port_s[1]);
    ports.c_l = 2 * (port_l[0] + port_l[1]);
    ports.rho_s = normalized(port_s, ports.c_s);
    ports.rho_l = normalized(port_l, ports.c_l);
    return ports;
}

/// Both ports land on the same detector: rho_out = (c_s rho_s + c_l rho_l)/2.
inline DensityMatrix spatial_trace(const PortPair &ports) {
    return DensityMatrix::from_matrix(0.5 * (ports.c_s * ports.rho_s.matrix() + ports.c_l * ports.rho_l.matrix()));
}

/// The full scheme. With pre_dephase = false the first interferometer is
/// skipped, which is exact for inputs that are already diagonal in H/V.
inline DensityMatrix pipeline(const DensityMatrix &rho_in, const BathAngles &angles, bool pre_dephase = true) {
    const DensityMatrix rho1 = pre_dephase ? dephase(rho_in) : rho_in;
    return spatial_trace(second_interferometer(rotate_hv_to_da(rho1), angles));
}

/// ln[(cos^2 phi + sin^2 theta) / (cos^2 theta + sin^2 phi)] / eps; +inf or
/// -inf when the output is a pure H or V state.
inline double beta_out(const BathAngles &angles) {
    angles.validate();
    const double ground = cos_sq(angles.phi) + sin_sq(angles.theta);
    const double excited = cos_sq(angles.theta) + sin_sq(angles.phi);
    return (std::log(ground) - std::log(excited)) / angles.eps;
}

/// Bath excited population realized by the scheme:
/// xi = (cos^2 theta + sin^2 phi) / 2.
inline double xi_from_angles(const BathAngles &angles) {
    angles.validate();
    return 0.5 * (cos_sq(angles.theta) + sin_sq(angles.phi));
}

}  // namespace gadsim
