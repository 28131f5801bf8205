// spinstar.cpp — command line interface to the spin-star toolkit

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinstar/spinstar.hpp"

namespace {

using namespace spinstar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct TrajectoryOptions {
    std::string n_text{"1"};
    double alpha{1.0};
    std::string v0_text{"1,0,1"};
    double t_max{3.0};
    std::size_t steps{301};
    std::string output{"-"};
    std::string format{"csv"};
};

void add_trajectory_options(CLI::App* cmd, TrajectoryOptions& opt, bool with_n) {
    if (with_n) cmd->add_option("--n", opt.n_text, "bath size N, or 'inf'");
    cmd->add_option("--alpha", opt.alpha, "coupling strength");
    cmd->add_option("--v0", opt.v0_text,
                    "initial Bloch vector 'v1,v2,v3' (default 1,0,1 so the v1/v3 "
                    "columns are the channel factors)");
    cmd->add_option("--tmax", opt.t_max, "final time");
    cmd->add_option("--steps", opt.steps, "number of samples (>= 2)");
    cmd->add_option("-o,--output", opt.output, "output path, '-' for stdout");
    cmd->add_option("--format", opt.format, "csv | json | svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
}

BlochVector parse_v0(const std::string& text) {
    std::istringstream is(text);
    std::string cell;
    std::vector<double> parts;
    while (std::getline(is, cell, ',')) parts.push_back(std::stod(cell));
    if (parts.size() != 3)
        throw CLI::ValidationError("--v0", "expected three comma-separated components");
    return {parts[0], parts[1], parts[2]};
}

int parse_n(const std::string& text) {
    if (text == "inf" || text == "infinite") return ModelParams::kInfinite;
    const int n = std::stoi(text);
    if (n < 0) throw CLI::ValidationError("--n", "bath size must be >= 0 or 'inf'");
    return n;
}

Channel parse_channel(const std::string& text) {
    if (text == "v3") return Channel::V3;
    if (text == "vpm") return Channel::VPM;
    throw CLI::ValidationError("--channel", "expected v3 or vpm");
}

NzConvention parse_convention(const std::string& text) {
    if (text == "paper") return NzConvention::Tabulated;
    if (text == "moment-matched" || text == "mm") return NzConvention::MomentMatched;
    throw CLI::ValidationError("--convention", "expected paper or moment-matched");
}

void emit_trajectory(const Trajectory& traj, const std::string& format,
                     const std::string& output) {
    if (format == "svg") {
        if (output == "-")
            throw CLI::ValidationError("--output", "svg output requires a file path");
        std::vector<svg::Series> series = {{"v1", traj.times, traj.v1},
                                           {"v2", traj.times, traj.v2},
                                           {"v3", traj.times, traj.v3},
                                           {"r", traj.times, traj.radius},
                                           {"entropy", traj.times, traj.entropy}};
        svg::write_line_plot(output, traj.method + " trajectory", "t", series);
        return;
    }
    std::ostringstream buffer;
    if (format == "csv") {
        io::write_trajectory_csv(traj, buffer);
    } else {
        buffer << io::trajectory_json(traj).dump(2) << '\n';
    }
    if (output == "-") {
        std::cout << buffer.str();
    } else {
        io::write_text(output, buffer.str());
    }
}

Trajectory run_solver(const SolverSpec& spec, const TrajectoryOptions& opt) {
    ModelParams params;
    params.n_bath = parse_n(opt.n_text);
    params.alpha = opt.alpha;
    params.v0 = parse_v0(opt.v0_text);
    return solve(spec, params, time_grid(opt.t_max, opt.steps));
}

int run_cli(int argc, char** argv) {
    CLI::App app{"spin-star central-spin dynamics toolkit"};
    app.require_subcommand(1);

    // --- exact -------------------------------------------------------------
    TrajectoryOptions exact_opt;
    auto* cmd_exact = app.add_subcommand("exact", "exact finite-N reduced dynamics");
    add_trajectory_options(cmd_exact, exact_opt, true);

    // --- limit -------------------------------------------------------------
    TrajectoryOptions limit_opt;
    auto* cmd_limit = app.add_subcommand("limit", "analytic N->infinity dynamics");
    add_trajectory_options(cmd_limit, limit_opt, false);

    // --- solve -------------------------------------------------------------
    TrajectoryOptions solve_opt;
    std::string method_text{"tcl"};
    int order = 2;
    std::string convention_text{"moment-matched"};
    double tolerance = 1e-12;
    auto* cmd_solve = app.add_subcommand("solve", "truncated master-equation dynamics");
    cmd_solve->add_option("--method", method_text, "exact | limit | tcl | nz | born | redfield")
        ->check(CLI::IsMember({"exact", "limit", "tcl", "nz", "born", "redfield"}));
    cmd_solve->add_option("--order", order, "even truncation order");
    cmd_solve->add_option("--convention", convention_text, "paper | moment-matched (NZ)");
    cmd_solve->add_option("--tolerance", tolerance, "NZ integrator tolerance");
    add_trajectory_options(cmd_solve, solve_opt, true);

    // --- corr --------------------------------------------------------------
    int corr_k = 1, corr_a = -1, corr_b = -1, corr_n = 0;
    bool corr_poly = false;
    auto* cmd_corr = app.add_subcommand("corr", "bath correlation functions Q_k / R(a,b)");
    cmd_corr->add_option("--k", corr_k, "power k for Q_k = R(k, 0)");
    cmd_corr->add_option("--a", corr_a, "power of J+J-");
    cmd_corr->add_option("--b", corr_b, "power of J-J+");
    cmd_corr->add_option("--n", corr_n, "evaluate at bath size N (exact rational)");
    cmd_corr->add_flag("--poly", corr_poly, "emit the polynomial in N");

    // --- coeffs ------------------------------------------------------------
    std::string coeff_method{"tcl"}, coeff_channel{"v3"}, coeff_convention{"moment-matched"};
    int coeff_order = 6;
    auto* cmd_coeffs = app.add_subcommand("coeffs", "TCL/NZ expansion coefficient tables");
    cmd_coeffs->add_option("--method", coeff_method, "tcl | nz")
        ->check(CLI::IsMember({"tcl", "nz"}));
    cmd_coeffs->add_option("--channel", coeff_channel, "v3 | vpm")
        ->check(CLI::IsMember({"v3", "vpm"}));
    cmd_coeffs->add_option("--order", coeff_order, "maximum even order");
    cmd_coeffs->add_option("--convention", coeff_convention, "paper | moment-matched (NZ)");

    // --- compare -----------------------------------------------------------
    std::string cmp_channel{"v3"}, cmp_methods{"exact,tcl2,tcl4,nz2,nz4"};
    TrajectoryOptions cmp_opt;
    cmp_opt.t_max = 0.2;
    cmp_opt.steps = 201;
    cmp_opt.n_text = "100";
    auto* cmd_compare =
        app.add_subcommand("compare", "channel factors of several methods side by side");
    cmd_compare->add_option("--channel", cmp_channel, "v3 | vpm");
    cmd_compare->add_option("--methods", cmp_methods,
                            "comma list: exact, limit, tcl<order>, nz<order>");
    cmd_compare->add_option("--n", cmp_opt.n_text, "bath size N");
    cmd_compare->add_option("--alpha", cmp_opt.alpha, "coupling strength");
    cmd_compare->add_option("--tmax", cmp_opt.t_max, "final time");
    cmd_compare->add_option("--steps", cmp_opt.steps, "number of samples");
    cmd_compare->add_option("-o,--output", cmp_opt.output, "output path, '-' for stdout");

    // --- figures -----------------------------------------------------------
    std::string fig_which{"all"};
    std::string fig_outdir{"figures"};
    auto* cmd_figures = app.add_subcommand("figures", "emit the reference figure datasets");
    cmd_figures->add_option("--which", fig_which, "all or comma list of figure ids");
    cmd_figures->add_option("--outdir", fig_outdir, "output directory");

    // --- verify ------------------------------------------------------------
    auto* cmd_verify =
        app.add_subcommand("verify", "run the brute-force oracle and consistency suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_exact->parsed()) {
            emit_trajectory(run_solver({Method::Exact}, exact_opt), exact_opt.format,
                            exact_opt.output);
        } else if (cmd_limit->parsed()) {
            limit_opt.n_text = "inf";
            emit_trajectory(run_solver({Method::Limit}, limit_opt), limit_opt.format,
                            limit_opt.output);
        } else if (cmd_solve->parsed()) {
            SolverSpec spec;
            if (method_text == "exact") spec.method = Method::Exact;
            else if (method_text == "limit") spec.method = Method::Limit;
            else if (method_text == "tcl") spec.method = Method::Tcl;
            else if (method_text == "nz") spec.method = Method::Nz;
            else if (method_text == "born") spec.method = Method::Born;
            else spec.method = Method::Redfield;
            spec.order = order;
            spec.convention = parse_convention(convention_text);
            spec.tolerance = tolerance;
            emit_trajectory(run_solver(spec, solve_opt), solve_opt.format, solve_opt.output);
        } else if (cmd_corr->parsed()) {
            int a = corr_a, b = corr_b;
            if (a < 0 && b < 0) { a = corr_k; b = 0; }
            else if (a < 0 || b < 0)
                throw CLI::ValidationError("--a/--b", "give both powers or use --k");
            nlohmann::json j;
            if (corr_poly) {
                j = io::polynomial_json(a, b, r_polynomial(a, b));
            } else {
                if (corr_n < 1)
                    throw CLI::ValidationError("--n", "value mode needs a bath size >= 1");
                j["a"] = a;
                j["b"] = b;
                j["n"] = corr_n;
                j["value"] = rational_string(r_value(a, b, corr_n));
            }
            std::cout << j.dump(2) << '\n';
        } else if (cmd_coeffs->parsed()) {
            const auto method =
                coeff_method == "tcl" ? ExpansionMethod::Tcl : ExpansionMethod::Nz;
            const auto set = coefficient_set(method, parse_channel(coeff_channel), coeff_order,
                                             parse_convention(coeff_convention));
            std::cout << io::coefficient_set_json(set).dump(2) << '\n';
        } else if (cmd_compare->parsed()) {
            const Channel channel = parse_channel(cmp_channel);
            ModelParams params;
            params.n_bath = parse_n(cmp_opt.n_text);
            params.alpha = cmp_opt.alpha;
            const auto ts = time_grid(cmp_opt.t_max, cmp_opt.steps);
            std::ostringstream os;
            os << "t";
            std::vector<std::vector<double>> cols;
            std::istringstream ms(cmp_methods);
            std::string token;
            while (std::getline(ms, token, ',')) {
                SolverSpec spec;
                if (token == "exact") spec.method = Method::Exact;
                else if (token == "limit") spec.method = Method::Limit;
                else if (token.rfind("tcl", 0) == 0) {
                    spec.method = Method::Tcl;
                    spec.order = std::stoi(token.substr(3));
                } else if (token.rfind("nz", 0) == 0) {
                    spec.method = Method::Nz;
                    spec.order = std::stoi(token.substr(2));
                } else {
                    throw CLI::ValidationError("--methods", "unknown method token: " + token);
                }
                cols.push_back(solve_factor(spec, channel, params, ts));
                os << ',' << token;
            }
            os << '\n';
            for (std::size_t i = 0; i < ts.size(); ++i) {
                os << io::format_double(ts[i]);
                for (const auto& col : cols) os << ',' << io::format_double(col[i]);
                os << '\n';
            }
            if (cmp_opt.output == "-") std::cout << os.str();
            else io::write_text(cmp_opt.output, os.str());
        } else if (cmd_figures->parsed()) {
            std::vector<std::string> ids;
            if (fig_which == "all") {
                ids = figures::figure_ids();
            } else {
                std::istringstream is(fig_which);
                std::string token;
                while (std::getline(is, token, ',')) ids.push_back(token);
            }
            const auto& known = figures::figure_ids();
            for (const auto& id : ids)
                if (std::find(known.begin(), known.end(), id) == known.end())
                    throw CLI::ValidationError("--which", "unknown figure id: " + id);
            figures::emit_all(ids, fig_outdir);
        } else if (cmd_verify->parsed()) {
            const VerifyReport report = run_verification();
            for (const auto& check : report.checks)
                std::cout << (check.ok ? "[ ok ] " : "[FAIL] ") << check.name
                          << (check.detail.empty() ? "" : " — " + check.detail) << '\n';
            if (!report.ok) {
                std::cerr << "verification failed\n";
                return kExitNumerical;
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
