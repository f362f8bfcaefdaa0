// qsd — Connes spectral distances between one- and two-qubit states.
//
// Subcommands: distance, coherence, sweep, verify. JSON records go to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 verification failure,
// 2 parse error, 3 dimension mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include "qsd/qsd.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDimensionMismatch = 3;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleFlags {
    std::uint64_t seed = 42;
    int starts = 64;
    int iters = 2000;

    qsd::OracleConfig config() const {
        qsd::OracleConfig cfg;
        cfg.seed = seed;
        cfg.n_starts = starts;
        cfg.max_iters = iters;
        return cfg;
    }
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--seed", flags.seed, "RNG seed for the oracle multistart");
    cmd->add_option("--starts", flags.starts, "number of oracle starts");
    cmd->add_option("--iters", flags.iters, "maximum oracle iterations per start");
}

json flatten_element(const qsd::ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            rows.push_back({m(i, j).real(), m(i, j).imag()});
    return rows;
}

json echo_state(const qsd::StateSpec& s) {
    json j;
    j["spec"] = s.text;
    j["dim"] = s.rho.dim();
    if (s.bloch) {
        j["bloch"] = {s.bloch->x, s.bloch->y, s.bloch->z};
        j["pure"] = qsd::is_pure(*s.bloch);
    }
    if (s.basis2) j["basis"] = {s.basis2->first, s.basis2->second};
    return j;
}

json oracle_metadata(const OracleFlags& flags) {
    const qsd::OracleConfig cfg = flags.config();
    return {{"seed", cfg.seed},
            {"rng", qsd::kOracleRngName},
            {"n_starts", cfg.n_starts},
            {"max_iters", cfg.max_iters},
            {"step_init", cfg.step_init},
            {"tol_value", cfg.tol_value}};
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

qsd::SpectralTriple triple_for_dim(std::size_t dim, double hbar) {
    return dim == 2 ? qsd::dirac_2d(hbar) : qsd::dirac_4d(hbar);
}

// ---------------------------------- distance ---------------------------------

int run_distance(const std::string& spec_a, const std::string& spec_b, double hbar,
                 const std::string& method, const OracleFlags& flags) {
    const auto start = Clock::now();
    const qsd::StateSpec a = qsd::parse_state_spec(spec_a);
    const qsd::StateSpec b = qsd::parse_state_spec(spec_b);
    if (a.rho.dim() != b.rho.dim())
        throw DimensionError("states '" + spec_a + "' and '" + spec_b +
                             "' live on different spaces");

    std::optional<qsd::DistanceResult> closed;
    if (method == "closed" || method == "both") {
        if (a.rho.dim() == 2)
            closed = qsd::distance_1q(*a.bloch, *b.bloch, hbar);
        else
            closed = qsd::distance_2q_basis(*a.basis2, *b.basis2, hbar);
    }
    std::optional<qsd::OracleResult> oracle;
    if (method == "oracle" || method == "both")
        oracle = qsd::supremum_distance(a.rho, b.rho, triple_for_dim(a.rho.dim(), hbar),
                                        flags.config());

    json out;
    out["schema_version"] = "1";
    out["command"] = "distance";
    out["inputs"] = {{"state_a", echo_state(a)}, {"state_b", echo_state(b)}, {"hbar", hbar}};
    if (method == "both") {
        out["value"] = closed->value;
        out["method"] = "both";
        out["oracle_value"] = oracle->value;
        out["difference"] = closed->value - oracle->value;
    } else if (closed) {
        out["value"] = closed->value;
        out["method"] = qsd::to_string(qsd::DistanceMethod::closed_form);
    } else {
        out["value"] = oracle->value;
        out["method"] = qsd::to_string(qsd::DistanceMethod::oracle);
    }
    out["lower_bound_only"] = false;  // every state the grammar builds has a proven value
    if (closed && closed->optimal_element) {
        out["element"] = flatten_element(*closed->optimal_element);
        out["ball_norm"] = *closed->element_ball_norm;
    } else if (!closed && oracle) {
        out["element"] = flatten_element(oracle->element);
        out["ball_norm"] = oracle->ball_norm;
    }
    json meta;
    if (oracle) {
        meta["oracle"] = oracle_metadata(flags);
        meta["oracle"]["starts_converged"] = oracle->starts_converged;
    }
    meta["timing_ms"] = elapsed_ms(start);
    out["metadata"] = meta;
    std::cout << out.dump(2) << '\n';
    return 0;
}

// --------------------------------- coherence ---------------------------------

int run_coherence(const std::string& spec, double hbar) {
    const auto start = Clock::now();
    const qsd::StateSpec s = qsd::parse_state_spec(spec);
    if (s.rho.dim() != 2) throw DimensionError("coherence implemented for one qubit only");
    const qsd::CoherenceResult res = qsd::coherence_sd(s.rho, hbar);
    const qsd::BlochVector nearest = qsd::density_to_bloch(res.nearest);

    json out;
    out["schema_version"] = "1";
    out["command"] = "coherence";
    out["inputs"] = {{"state", echo_state(s)}, {"hbar", hbar}};
    out["value"] = res.value;
    out["method"] = "closed_form";
    out["lower_bound_only"] = false;
    out["nearest_incoherent_bloch"] = {nearest.x, nearest.y, nearest.z};
    out["metadata"] = {{"timing_ms", elapsed_ms(start)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

// ----------------------------------- sweep -----------------------------------

void csv_row(std::initializer_list<double> values) {
    std::string line;
    char buf[64];
    for (double v : values) {
        if (!line.empty()) line += ',';
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        line += buf;
    }
    std::cout << line << '\n';
}

int run_sweep(const std::string& mode, const std::string& spec_a, double r, int n, double hbar,
              bool with_oracle, const OracleFlags& flags) {
    if (n < 2) throw qsd::StateSpecError("sweep: --n must be at least 2");
    constexpr double kPi = 3.14159265358979323846;

    if (mode == "theta-scan") {
        if (!(r >= 0.0 && r <= 2.0))
            throw qsd::StateSpecError("sweep: --r must lie in [0, 2]");
        if (with_oracle)
            std::cerr << "note: --oracle applies to pair-grid mode only; emitting closed form\n";
        std::cout << "theta,r,d_closed\n";
        for (int k = 0; k < n; ++k) {
            const double theta = kPi * k / (n - 1);
            const qsd::BlochVector half{0.5 * r * std::sin(theta), 0.0,
                                        0.5 * r * std::cos(theta)};
            const double d =
                qsd::distance_1q(half, {-half.x, -half.y, -half.z}, hbar).value;
            csv_row({theta, r, d});
        }
        return 0;
    }
    if (mode != "pair-grid") throw qsd::StateSpecError("sweep: unknown mode '" + mode + "'");

    const qsd::StateSpec a = qsd::parse_state_spec(spec_a);
    if (a.rho.dim() != 2) throw DimensionError("sweep grids one-qubit states only");
    const qsd::SpectralTriple triple = qsd::dirac_2d(hbar);
    if (with_oracle)
        std::cout << "theta,phi,r,d_closed,d_oracle\n";
    else
        std::cout << "theta,phi,r,d_closed\n";
    for (int i = 0; i < n; ++i) {
        const double theta = kPi * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double phi = 2.0 * kPi * j / n;
            const qsd::BlochVector rb{std::sin(theta) * std::cos(phi),
                                      std::sin(theta) * std::sin(phi), std::cos(theta)};
            const double d = qsd::distance_1q(*a.bloch, rb, hbar).value;
            const double sep = (*a.bloch - rb).norm();
            if (with_oracle) {
                const double oracle_d =
                    qsd::supremum_distance(a.rho, qsd::bloch_to_density(rb), triple,
                                           flags.config())
                        .value;
                csv_row({theta, phi, sep, d, oracle_d});
            } else {
                csv_row({theta, phi, sep, d});
            }
        }
    }
    return 0;
}

// ----------------------------------- verify ----------------------------------

int run_verify(bool quick, std::uint64_t seed) {
    const qsd::verify::Options opts{quick, seed};
    const auto results = qsd::verify::run_all(opts);
    std::cout << qsd::verify::render_report(results, opts);
    return qsd::verify::all_passed(results) ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connes spectral distances between one- and two-qubit states"};
    app.require_subcommand(1);

    // distance
    std::string spec_a, spec_b;
    double hbar = 1.0;
    std::string method = "closed";
    OracleFlags oracle_flags;
    CLI::App* distance = app.add_subcommand("distance", "spectral distance between two states");
    distance->add_option("state_a", spec_a, "first state spec")->required();
    distance->add_option("state_b", spec_b, "second state spec")->required();
    distance->add_option("--hbar", hbar, "phase-space scale (default 1)");
    distance->add_option("--method", method, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    add_oracle_flags(distance, oracle_flags);

    // coherence
    std::string coh_spec;
    double coh_hbar = 1.0;
    CLI::App* coherence = app.add_subcommand("coherence", "spectral-distance coherence");
    coherence->add_option("state", coh_spec, "one-qubit state spec")->required();
    coherence->add_option("--hbar", coh_hbar, "phase-space scale (default 1)");

    // sweep
    std::string sweep_mode = "theta-scan";
    std::string sweep_a = "0";
    double sweep_r = 1.0;
    int sweep_n = 64;
    double sweep_hbar = 1.0;
    bool sweep_oracle = false;
    OracleFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "emit distance sweeps as CSV");
    sweep->add_option("--mode", sweep_mode, "pair-grid | theta-scan")->required();
    sweep->add_option("--a", sweep_a, "fixed state A for pair-grid");
    sweep->add_option("--r", sweep_r, "separation |dr| for theta-scan (in [0, 2])");
    sweep->add_option("--n", sweep_n, "grid points per axis (default 64)");
    sweep->add_option("--hbar", sweep_hbar, "phase-space scale (default 1)");
    sweep->add_flag("--oracle", sweep_oracle, "add an oracle column (pair-grid)");
    add_oracle_flags(sweep, sweep_flags);

    // verify
    bool quick = false;
    std::uint64_t verify_seed = 42;
    CLI::App* verify = app.add_subcommand("verify", "run the library invariant suites");
    verify->add_flag("--quick", quick, "reduced sample counts");
    verify->add_option("--seed", verify_seed, "RNG seed for the suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (distance->parsed()) return run_distance(spec_a, spec_b, hbar, method, oracle_flags);
        if (coherence->parsed()) return run_coherence(coh_spec, coh_hbar);
        if (sweep->parsed())
            return run_sweep(sweep_mode, sweep_a, sweep_r, sweep_n, sweep_hbar, sweep_oracle,
                             sweep_flags);
        if (verify->parsed()) return run_verify(quick, verify_seed);
    } catch (const qsd::StateSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDimensionMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    }
    return 0;
}
