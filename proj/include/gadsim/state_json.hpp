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
#include <string>

#include "gadsim/smallmat.hpp"
#include "json.hpp"

namespace gadsim {

// Matrices serialize as {"re": [[...]], "im": [[...]]}, rows outermost.

template <std::size_t N>
nlohmann::json matrix_to_json(const Matrix<N> &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t i = 0; i < N; i++) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::size_t j = 0; j < N; j++) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parses {"re": ..., "im": ...}. "im" may be omitted (all zero). Throws
/// Error(InvalidState) on a shape or type mismatch.
template <std::size_t N>
Matrix<N> matrix_from_json(const nlohmann::json &j) {
    auto bad = [](const std::string &why) { return Error(ErrorCode::InvalidState, "matrix JSON: " + why); };
    if (!j.is_object() || !j.contains("re")) {
        throw bad("expected an object with an \"re\" field");
    }
    Matrix<N> m{};
    auto read_part = [&](const char *key, bool imaginary) {
        const auto &rows = j.at(key);
        if (!rows.is_array() || rows.size() != N) {
            throw bad(std::string("\"") + key + "\" must have " + std::to_string(N) + " rows");
        }
        for (std::size_t r = 0; r < N; r++) {
            if (!rows[r].is_array() || rows[r].size() != N) {
                throw bad(std::string("\"") + key + "\" row " + std::to_string(r) + " must have " +
                          std::to_string(N) + " entries");
            }
            for (std::size_t c = 0; c < N; c++) {
                if (!rows[r][c].is_number()) {
                    throw bad(std::string("\"") + key + "\" entries must be numbers");
                }
                const double v = rows[r][c].get<double>();
                if (imaginary) {
                    m(r, c).imag(v);
                } else {
                    m(r, c).real(v);
                }
            }
        }
    };
    read_part("re", false);
    if (j.contains("im")) {
        read_part("im", true);
    }
    return m;
}

inline nlohmann::json state_to_json(const DensityMatrix &rho) {
    return matrix_to_json(rho.matrix());
}

inline DensityMatrix state_from_json(const nlohmann::json &j) {
    return DensityMatrix::from_matrix(matrix_from_json<2>(j));
}

}  // namespace gadsim
