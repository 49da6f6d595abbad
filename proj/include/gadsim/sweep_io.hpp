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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gadsim/error.hpp"
#include "gadsim/expsim.hpp"
#include "json.hpp"

namespace gadsim {

/// One plotted point: input state, bath setting, analytic output temperature
/// and, for Monte Carlo runs, the counts and estimate.
struct SweepRow {
    std::string input_id;
    double alpha = 0;
    double phi = 0;
    double theta = 0;
    double beta_in = 0;
    double beta_out_analytic = 0;
    std::optional<CountRecord> counts;
};

inline constexpr const char *kCsvHeader =
    "input_id,alpha,phi,theta,beta_in,beta_out_analytic,n_total,n_h,n_v,beta_hat,beta_err";

/// 17 significant digits; infinities as inf / -inf.
inline std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline double parse_double_field(const std::string &s) {
    if (s == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw Error(ErrorCode::InvalidSpec, "not a number: '" + s + "'");
    }
    return v;
}

namespace detail {

inline std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string &line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); i++) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                i++;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

inline nlohmann::json json_double(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

inline double json_to_double(const nlohmann::json &j) {
    if (j.is_string()) {
        return parse_double_field(j.get<std::string>());
    }
    return j.get<double>();
}

}  // namespace detail

inline void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kCsvHeader << "\r\n";
    for (const auto &r : rows) {
        out << detail::csv_escape(r.input_id) << ',' << format_double(r.alpha) << ',' << format_double(r.phi) << ','
            << format_double(r.theta) << ',' << format_double(r.beta_in) << ',' << format_double(r.beta_out_analytic);
        if (r.counts) {
            out << ',' << r.counts->n_total << ',' << r.counts->n_h << ',' << r.counts->n_v << ','
                << format_double(r.counts->beta_hat) << ',' << format_double(r.counts->beta_err);
        } else {
            out << ",,,,,";
        }
        out << "\r\n";
    }
}

inline std::vector<SweepRow> read_csv(std::istream &in) {
    std::vector<SweepRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (header) {
            if (line != kCsvHeader) {
                throw Error(ErrorCode::InvalidSpec, "unexpected CSV header");
            }
            header = false;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto f = detail::csv_split(line);
        if (f.size() != 11) {
            throw Error(ErrorCode::InvalidSpec, "CSV row must have 11 fields");
        }
        SweepRow r;
        r.input_id = f[0];
        r.alpha = parse_double_field(f[1]);
        r.phi = parse_double_field(f[2]);
        r.theta = parse_double_field(f[3]);
        r.beta_in = parse_double_field(f[4]);
        r.beta_out_analytic = parse_double_field(f[5]);
        if (!f[6].empty()) {
            CountRecord c;
            c.n_total = std::stoull(f[6]);
            c.n_h = std::stoull(f[7]);
            c.n_v = std::stoull(f[8]);
            c.beta_hat = parse_double_field(f[9]);
            c.beta_err = parse_double_field(f[10]);
            r.counts = c;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Array of row objects with the CSV field names. Infinities are the strings
/// "inf" / "-inf"; Monte Carlo fields are null for analytic sweeps.
inline nlohmann::json rows_to_json(const std::vector<SweepRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) {
        nlohmann::json o;
        o["input_id"] = r.input_id;
        o["alpha"] = detail::json_double(r.alpha);
        o["phi"] = detail::json_double(r.phi);
        o["theta"] = detail::json_double(r.theta);
        o["beta_in"] = detail::json_double(r.beta_in);
        o["beta_out_analytic"] = detail::json_double(r.beta_out_analytic);
        if (r.counts) {
            o["n_total"] = r.counts->n_total;
            o["n_h"] = r.counts->n_h;
            o["n_v"] = r.counts->n_v;
            o["beta_hat"] = detail::json_double(r.counts->beta_hat);
            o["beta_err"] = detail::json_double(r.counts->beta_err);
        } else {
            for (const char *k : {"n_total", "n_h", "n_v", "beta_hat", "beta_err"}) {
                o[k] = nullptr;
            }
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

inline std::vector<SweepRow> rows_from_json(const nlohmann::json &arr) {
    std::vector<SweepRow> rows;
    for (const auto &o : arr) {
        SweepRow r;
        r.input_id = o.at("input_id").get<std::string>();
        r.alpha = detail::json_to_double(o.at("alpha"));
        r.phi = detail::json_to_double(o.at("phi"));
        r.theta = detail::json_to_double(o.at("theta"));
        r.beta_in = detail::json_to_double(o.at("beta_in"));
        r.beta_out_analytic = detail::json_to_double(o.at("beta_out_analytic"));
        if (!o.at("n_total").is_null()) {
            CountRecord c;
            c.n_total = o.at("n_total").get<std::uint64_t>();
            c.n_h = o.at("n_h").get<std::uint64_t>();
            c.n_v = o.at("n_v").get<std::uint64_t>();
            c.beta_hat = detail::json_to_double(o.at("beta_hat"));
            c.beta_err = detail::json_to_double(o.at("beta_err"));
            r.counts = c;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << rows_to_json(rows).dump(2) << "\n";
}

}  // namespace gadsim
