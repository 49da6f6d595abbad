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
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gadsim/config.hpp"
#include "gadsim/error.hpp"
#include "gadsim/expsim.hpp"
#include "gadsim/gad.hpp"
#include "gadsim/optics.hpp"
#include "gadsim/rng.hpp"
#include "gadsim/smallmat.hpp"
#include "gadsim/state_json.hpp"
#include "gadsim/sweep_io.hpp"
#include "gadsim/thermal.hpp"
#include "json.hpp"

namespace gadsim::cli {

// Exit codes are a scripting contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses a real number or a multiple of pi: "0.3", "pi", "-pi/4", "3pi/8",
/// "3*pi/8", "1.5/2".
inline double parse_angle(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    auto bad = [&] { return UsageError("cannot parse number '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto plain = [&](const std::string &s) {
        try {
            return parse_double_field(s);
        } catch (const Error &) {
            throw bad();
        }
    };

    std::string numerator = text;
    double denominator = 1;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        numerator = text.substr(0, slash);
        denominator = plain(text.substr(slash + 1));
        if (denominator == 0) {
            throw bad();
        }
    }
    double value;
    if (numerator.size() >= 2 && numerator.compare(numerator.size() - 2, 2, "pi") == 0) {
        std::string factor = numerator.substr(0, numerator.size() - 2);
        if (!factor.empty() && factor.back() == '*') {
            factor.pop_back();
        }
        double scale = 1;
        if (factor == "-") {
            scale = -1;
        } else if (!factor.empty() && factor != "+") {
            scale = plain(factor);
        }
        value = scale * std::numbers::pi;
    } else {
        value = plain(numerator);
    }
    return value / denominator;
}

inline std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

/// Reads key=value lines. Blank lines and lines starting with '#' are
/// skipped; '-' in keys is treated as '_'.
inline std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        for (auto *s : {&key, &value}) {
            s->erase(0, s->find_first_not_of(" \t"));
            s->erase(s->find_last_not_of(" \t\r") + 1);
        }
        std::replace(key.begin(), key.end(), '-', '_');
        values[key] = value;
    }
    return values;
}

/// Settings shared by sweep and simulate.
struct RunConfig {
    double eps = 1;
    double theta_start = 0;
    double theta_stop = std::numbers::pi;
    std::uint64_t theta_count = 37;
    std::vector<double> phis{0, std::numbers::pi / 8, std::numbers::pi / 4, 3 * std::numbers::pi / 8};
    std::vector<std::string> inputs{"H", "V", "mixed:1", "mixed:0", "mixed:-1"};
    std::uint64_t n_per_point = 10000;
    std::uint64_t seed = 42;
    std::string out = "-";
    std::string format = "csv";
    unsigned threads = 1;

    std::vector<double> thetas() const {
        std::vector<double> grid(theta_count);
        for (std::uint64_t i = 0; i < theta_count; i++) {
            grid[i] = theta_count == 1 ? theta_start
                                       : theta_start + (theta_stop - theta_start) * static_cast<double>(i) /
                                                           static_cast<double>(theta_count - 1);
        }
        return grid;
    }
};

/// An input state token: H, V, mixed:<beta>, or a bare source angle alpha.
inline SourceConfig source_from_token(const std::string &token, double eps) {
    if (token == "H") {
        return {0, 0};
    }
    if (token == "V") {
        return {std::numbers::pi / 2, 0};
    }
    if (token.rfind("mixed:", 0) == 0) {
        const double beta = parse_angle(token.substr(6));
        if (std::isnan(beta)) {
            throw UsageError("bad input token '" + token + "'");
        }
        // cos^2(alpha) = P_H of the Gibbs state at beta.
        const double p_h = thermal_state({beta, eps}).p_h();
        return {std::acos(std::sqrt(p_h)), 0};
    }
    try {
        return {parse_angle(token), 0};
    } catch (const UsageError &) {
        throw UsageError("bad input token '" + token + "' (expected H, V, mixed:<beta> or an angle)");
    }
}

/// A single-qubit state from a token (H, V, D, A, mixed:<beta>) or a JSON
/// file holding {"re": [[...]], "im": [[...]]}.
inline DensityMatrix state_from_token(const std::string &token, double eps) {
    if (token == "H") {
        return DensityMatrix::horizontal();
    }
    if (token == "V") {
        return DensityMatrix::vertical();
    }
    if (token == "D") {
        return DensityMatrix::from_bloch(1, 0, 0);
    }
    if (token == "A") {
        return DensityMatrix::from_bloch(-1, 0, 0);
    }
    if (token.rfind("mixed:", 0) == 0) {
        return thermal_state({parse_angle(token.substr(6)), eps});
    }
    std::ifstream in(token);
    if (!in) {
        throw UsageError("state '" + token + "' is neither a known token nor a readable file");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("state file '" + token + "': " + e.what());
    }
    return state_from_json(j);
}

namespace detail {

// Raw option strings, filled from flags and the config file.
class Options {
   public:
    Options(CLI::App &sub, std::initializer_list<std::pair<const char *, const char *>> keys) : sub_(sub) {
        sub.add_option("--config", config_path_, "key=value file; flags override its values");
        for (const auto &[key, help] : keys) {
            std::string flag = std::string("--") + key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            auto &slot = raw_[key];
            flags_[key] = flag;
            sub.add_option(flag, slot, help);
        }
    }

    void load() {
        if (config_path_.empty()) {
            return;
        }
        for (const auto &[key, value] : read_config_file(config_path_)) {
            if (!raw_.contains(key)) {
                throw UsageError("unknown config key '" + key + "'");
            }
            if (sub_.count(flags_.at(key)) == 0) {
                raw_[key] = value;
                from_file_.insert(key);
            }
        }
    }

    std::optional<std::string> get(const std::string &key) const {
        if (sub_.count(flags_.at(key)) > 0 || from_file_.contains(key)) {
            return raw_.at(key);
        }
        return std::nullopt;
    }

   private:
    CLI::App &sub_;
    std::string config_path_;
    std::map<std::string, std::string> raw_;
    std::map<std::string, std::string> flags_;
    std::set<std::string> from_file_;
};

inline std::uint64_t parse_count(const std::string &key, const std::string &text) {
    try {
        std::size_t used = 0;
        if (!text.empty() && text[0] == '-') {
            throw std::invalid_argument("negative");
        }
        const auto v = std::stoull(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception &) {
        // Allow 1e5-style counts.
        const double d = parse_angle(text);
        if (d < 0 || d != std::floor(d) || d > 1e18) {
            throw UsageError(key + " must be a non-negative integer");
        }
        return static_cast<std::uint64_t>(d);
    }
}

inline const std::initializer_list<std::pair<const char *, const char *>> kRunKeys = {
    {"eps", "qubit energy gap (default 1)"},
    {"theta_start", "first theta of the grid (default 0)"},
    {"theta_stop", "last theta of the grid (default pi)"},
    {"theta_count", "number of theta points (default 37)"},
    {"phis", "comma-separated phi values (default 0,pi/8,pi/4,3pi/8)"},
    {"inputs", "comma-separated inputs: H, V, mixed:<beta>, or alpha (default H,V,mixed:1,mixed:0,mixed:-1)"},
    {"n_per_point", "heralded photons per point (default 10000)"},
    {"seed", "random seed (default 42)"},
    {"out", "output path, - for stdout (default -)"},
    {"format", "csv or json (default csv)"},
    {"threads", "worker threads (default 1); output does not depend on it"},
};

inline RunConfig resolve_run_config(const Options &opt) {
    RunConfig cfg;
    if (auto v = opt.get("eps")) {
        cfg.eps = parse_angle(*v);
        if (!(cfg.eps > 0) || !std::isfinite(cfg.eps)) {
            throw UsageError("eps must be finite and > 0");
        }
    }
    if (auto v = opt.get("theta_start")) {
        cfg.theta_start = parse_angle(*v);
    }
    if (auto v = opt.get("theta_stop")) {
        cfg.theta_stop = parse_angle(*v);
    }
    if (!std::isfinite(cfg.theta_start) || !std::isfinite(cfg.theta_stop)) {
        throw UsageError("theta grid bounds must be finite");
    }
    if (auto v = opt.get("theta_count")) {
        cfg.theta_count = parse_count("theta_count", *v);
    }
    if (cfg.theta_count < 1) {
        throw UsageError("theta_count must be >= 1");
    }
    if (auto v = opt.get("phis")) {
        cfg.phis.clear();
        for (const auto &s : split_list(*v)) {
            cfg.phis.push_back(parse_angle(s));
            if (!std::isfinite(cfg.phis.back())) {
                throw UsageError("phi values must be finite");
            }
        }
        if (cfg.phis.empty()) {
            throw UsageError("phis must be nonempty");
        }
    }
    if (auto v = opt.get("inputs")) {
        cfg.inputs = split_list(*v);
        if (cfg.inputs.empty()) {
            throw UsageError("inputs must be nonempty");
        }
    }
    if (auto v = opt.get("n_per_point")) {
        cfg.n_per_point = parse_count("n_per_point", *v);
    }
    if (cfg.n_per_point < 1) {
        throw UsageError("n_per_point must be >= 1");
    }
    if (auto v = opt.get("seed")) {
        cfg.seed = parse_count("seed", *v);
    }
    if (auto v = opt.get("out")) {
        cfg.out = *v;
    }
    if (auto v = opt.get("format")) {
        cfg.format = *v;
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw UsageError("format must be csv or json");
    }
    if (auto v = opt.get("threads")) {
        cfg.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, parse_count("threads", *v)));
    }
    return cfg;
}

inline bool same_extended(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::abs(a - b) <= tol;
}

inline void emit_rows(const RunConfig &cfg, const std::vector<SweepRow> &rows, std::ostream &out) {
    for (const auto &r : rows) {
        if (!same_extended(r.beta_out_analytic, beta_out({r.theta, r.phi, cfg.eps}), 1e-12)) {
            throw std::logic_error("beta_out_analytic self-check failed");
        }
    }
    std::ostringstream buffer;
    if (cfg.format == "csv") {
        write_csv(buffer, rows);
    } else {
        write_json(buffer, rows);
    }
    if (cfg.out == "-") {
        out << buffer.str();
        out.flush();
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + cfg.out + "' for writing");
    }
    file << buffer.str();
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + cfg.out + "'");
    }
}

inline std::vector<SourceConfig> sources_of(const RunConfig &cfg) {
    std::vector<SourceConfig> sources;
    for (const auto &token : cfg.inputs) {
        sources.push_back(source_from_token(token, cfg.eps));
    }
    return sources;
}

}  // namespace detail

/// Analytic rows in (input, phi, theta) order with empty Monte Carlo fields.
inline std::vector<SweepRow> sweep_rows(const RunConfig &cfg) {
    const auto sources = detail::sources_of(cfg);
    const auto thetas = cfg.thetas();
    std::vector<SweepRow> rows;
    rows.reserve(sources.size() * cfg.phis.size() * thetas.size());
    for (std::size_t i = 0; i < sources.size(); i++) {
        const double beta_in = inverse_temperature(sources[i].signal_populations(), cfg.eps);
        for (double phi : cfg.phis) {
            for (double theta : thetas) {
                rows.push_back({cfg.inputs[i], sources[i].alpha, phi, theta, beta_in, beta_out({theta, phi, cfg.eps}),
                                std::nullopt});
            }
        }
    }
    return rows;
}

/// Monte Carlo rows, deterministic for a fixed seed.
inline std::vector<SweepRow> simulate_rows(const RunConfig &cfg) {
    const auto experiment = run_experiment(detail::sources_of(cfg), cfg.phis, cfg.thetas(), cfg.n_per_point, cfg.eps,
                                           RngStream(cfg.seed), cfg.threads);
    std::vector<SweepRow> rows;
    rows.reserve(experiment.size());
    for (const auto &e : experiment) {
        rows.push_back({cfg.inputs[e.input_index], e.alpha, e.phi, e.theta, e.beta_in, e.beta_out_analytic, e.counts});
    }
    return rows;
}

// Grid labels for reports: 6 significant digits.
inline std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct VerifySettings {
    std::vector<double> xis;
    std::vector<double> ps;
    double perturb = 0;
    std::uint64_t angle_count = 37;
};

/// CPTP checks on every (xi, p) plus the optics-to-channel identification
/// on an angle grid. Returns true iff everything passes.
inline bool run_verify(const VerifySettings &s, std::ostream &report) {
    bool ok = true;
    int failures = 0;
    report << "# CPTP checks (completeness residual <= " << Tolerances::cptp_residual
           << ", min Choi eigenvalue >= " << Tolerances::cptp_min_eigenvalue << ")\n";
    for (double xi : s.xis) {
        for (double p : s.ps) {
            KrausSet k = kraus_gad({xi, p});
            k.ops[0] *= (1 + s.perturb);
            const CptpReport r = verify_cptp(k);
            if (!r.pass) {
                ok = false;
                failures++;
                report << "FAIL xi=" << short_number(xi) << " p=" << short_number(p)
                       << " residual=" << format_double(r.completeness_residual)
                       << " min_choi_eig=" << format_double(r.min_choi_eigenvalue) << "\n";
            }
        }
    }
    report << "cptp: " << (s.xis.size() * s.ps.size()) << " points, " << failures << " failures\n";

    // Fixed probe states: poles, equator and a few interior Bloch vectors.
    std::vector<DensityMatrix> probes{DensityMatrix::horizontal(), DensityMatrix::vertical(),
                                      DensityMatrix::from_bloch(1, 0, 0), DensityMatrix::from_bloch(0, 1, 0),
                                      DensityMatrix::maximally_mixed()};
    RngStream rng(0x5eed);
    for (int k = 0; k < 5; k++) {
        const double z = 2 * rng.uniform() - 1;
        const double az = 2 * std::numbers::pi * rng.uniform();
        const double r = std::cbrt(rng.uniform());
        const double sxy = std::sqrt(1 - z * z);
        probes.push_back(DensityMatrix::from_bloch(r * sxy * std::cos(az), r * sxy * std::sin(az), r * z));
    }

    double worst = 0;
    const std::uint64_t n = s.angle_count;
    for (std::uint64_t i = 0; i < n; i++) {
        for (std::uint64_t j = 0; j < n; j++) {
            const double theta = n == 1 ? 0 : std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
            const double phi = n == 1 ? 0 : std::numbers::pi * static_cast<double>(j) / static_cast<double>(n - 1);
            const BathAngles angles{theta, phi, 1};
            const KrausSet k = kraus_gad({xi_from_angles(angles), 1});
            for (const auto &rho : probes) {
                worst = std::max(worst, max_abs_diff(pipeline(rho, angles).matrix(), apply_channel(k, rho).matrix()));
            }
        }
    }
    const bool optics_ok = worst <= 1e-12;
    ok = ok && optics_ok;
    report << "optics: " << n << "x" << n << " angles, " << probes.size()
           << " probe states, max deviation from channel=" << format_double(worst) << (optics_ok ? " ok" : " FAIL")
           << "\n";
    report << (ok ? "PASS" : "FAIL") << "\n";
    return ok;
}

namespace detail {

inline std::vector<double> parse_unit_grid(const std::string &key, const std::string &text) {
    std::vector<double> grid;
    for (const auto &s : split_list(text)) {
        const double v = parse_angle(s);
        if (!(v >= 0 && v <= 1)) {
            throw UsageError(key + " values must lie in [0, 1]");
        }
        grid.push_back(v);
    }
    if (grid.empty()) {
        throw UsageError(key + " grid must be nonempty");
    }
    return grid;
}

inline nlohmann::json summary_json(const DensityMatrix &rho, double eps) {
    const Populations pop = Populations::of(rho);
    nlohmann::json j = state_to_json(rho);
    j["p_h"] = pop.p_h;
    j["p_v"] = pop.p_v;
    j["beta"] = gadsim::detail::json_double(inverse_temperature(pop, eps));
    return j;
}

}  // namespace detail

/// Entry point shared by the gadsim binary and the test suites.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generalized amplitude damping channel and thermal-bath optics simulator", "gadsim"};
    app.require_subcommand(1);

    auto *apply = app.add_subcommand("apply", "apply a GAD channel to a state and print the output state");
    detail::Options apply_opt(*apply, {{"state", "H, V, D, A, mixed:<beta>, or a JSON state file"},
                                       {"xi", "bath excited population in [0,1]"},
                                       {"p", "decay probability in [0,1]"},
                                       {"lambda", "damping constant (with --t, instead of --p)"},
                                       {"t", "interaction time (with --lambda)"},
                                       {"eps", "energy gap for the printed beta (default 1)"}});

    auto *sweep = app.add_subcommand("sweep", "analytic output temperature over a (theta, phi) grid");
    detail::Options sweep_opt(*sweep, detail::kRunKeys);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo heralded-photon experiment over a (theta, phi) grid");
    detail::Options simulate_opt(*simulate, detail::kRunKeys);

    auto *verify = app.add_subcommand("verify", "check CPTP properties and the optics/channel identification");
    detail::Options verify_opt(*verify, {{"xi", "comma-separated xi grid (default 0,0.1,...,1)"},
                                         {"p", "comma-separated p grid (default 0,0.1,...,1)"},
                                         {"perturb", "scale Gamma_0 by (1 + perturb) to inject a fault"},
                                         {"angle_count", "theta and phi points over [0, pi] (default 37)"},
                                         {"out", "report path, - for stdout (default -)"}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "gadsim: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (apply->parsed()) {
            apply_opt.load();
            const double eps = apply_opt.get("eps") ? parse_angle(*apply_opt.get("eps")) : 1.0;
            if (!(eps > 0) || !std::isfinite(eps)) {
                throw UsageError("eps must be finite and > 0");
            }
            const auto state = apply_opt.get("state");
            const auto xi = apply_opt.get("xi");
            if (!state || !xi) {
                throw UsageError("apply needs --state and --xi");
            }
            GadParams params;
            params.xi = parse_angle(*xi);
            const auto p = apply_opt.get("p");
            const auto lambda = apply_opt.get("lambda");
            const auto t = apply_opt.get("t");
            if (lambda || t) {
                if (!lambda || !t) {
                    throw UsageError("--lambda and --t must be given together");
                }
                params = GadParams::from_rate(params.xi, parse_angle(*lambda), parse_angle(*t));
                if (p && std::abs(parse_angle(*p) - params.p) > Tolerances::rate_consistency) {
                    throw UsageError("--p is inconsistent with 1 - exp(-lambda t)");
                }
            } else if (p) {
                params.p = parse_angle(*p);
            } else {
                throw UsageError("apply needs --p or --lambda with --t");
            }
            const DensityMatrix rho = state_from_token(*state, eps);
            const DensityMatrix result = apply_channel(kraus_gad(params), rho);
            out << detail::summary_json(result, eps).dump(2) << "\n";
            return kExitOk;
        }

        if (sweep->parsed() || simulate->parsed()) {
            auto &opt = sweep->parsed() ? sweep_opt : simulate_opt;
            opt.load();
            const RunConfig cfg = detail::resolve_run_config(opt);
            const auto rows = sweep->parsed() ? sweep_rows(cfg) : simulate_rows(cfg);
            detail::emit_rows(cfg, rows, out);
            return kExitOk;
        }

        if (verify->parsed()) {
            verify_opt.load();
            VerifySettings s;
            const std::string default_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
            s.xis = detail::parse_unit_grid("xi", verify_opt.get("xi").value_or(default_grid));
            s.ps = detail::parse_unit_grid("p", verify_opt.get("p").value_or(default_grid));
            if (auto v = verify_opt.get("perturb")) {
                s.perturb = parse_angle(*v);
            }
            if (auto v = verify_opt.get("angle_count")) {
                s.angle_count = detail::parse_count("angle_count", *v);
                if (s.angle_count < 1) {
                    throw UsageError("angle_count must be >= 1");
                }
            }
            const std::string path = verify_opt.get("out").value_or("-");
            std::ostringstream report;
            const bool ok = run_verify(s, report);
            if (path == "-") {
                out << report.str();
            } else {
                std::ofstream file(path, std::ios::binary | std::ios::trunc);
                if (!file || !(file << report.str()) || !file.flush()) {
                    throw IoError("cannot write '" + path + "'");
                }
            }
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const UsageError &e) {
        err << "gadsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "gadsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "gadsim: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::logic_error &e) {
        err << "gadsim: internal check failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception &e) {
        err << "gadsim: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"gadsim"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gadsim::cli
