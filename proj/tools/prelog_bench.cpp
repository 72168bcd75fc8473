// SPDX-License-Identifier: Apache-2.0
//
// prelog_bench — command-line experiment runner for the prelog toolkit:
// closed-form pre-log queries, Property (A) certification, channel dataset
// export, duality-bound SNR sweeps and the numerical verification suite.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prelog/channel.hpp"
#include "prelog/checks.hpp"
#include "prelog/duality.hpp"
#include "prelog/errors.hpp"
#include "prelog/prelog_formulas.hpp"
#include "prelog/property_a.hpp"
#include "prelog/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1; // property fails / verification violation
constexpr int kExitUsage = 2;

struct PrelogArgs {
    int n = 0;
    int q = 0;
    int m = 0;
    std::string matrix_path;
    double rel_tol = 1e-9;
};

int cmd_prelog(const PrelogArgs &args) {
    bool holds = true; // without a concrete root, report the Property (A) case
    if (!args.matrix_path.empty()) {
        const prelog::CorrelationRoot root =
            prelog::correlation_root_from_json(prelog::read_text_file(args.matrix_path));
        if (root.n() != static_cast<std::size_t>(args.n) ||
            root.q() != static_cast<std::size_t>(args.q)) {
            throw prelog::ValidationError("prelog: --matrix dimensions disagree with --n/--q");
        }
        holds = prelog::check_property_a(root, args.m, args.rel_tol).holds;
    }
    const prelog::PrelogReport report = prelog::make_prelog_report(args.n, args.q, args.m, holds);
    std::cout << prelog::prelog_report_to_json(report) << "\n";
    return kExitOk;
}

struct SweepArgs {
    int m = 0;
    int n = 0;
    int q = 1;
    std::vector<double> rho_db;
    long samples = 100000;
    std::uint64_t seed = 1;
    std::string input = "sphere";
    std::string out_path;
};

int cmd_bound_sweep(const SweepArgs &args) {
    if (args.q != 1) {
        throw prelog::ValidationError(
            "bound-sweep: the engineered output density covers the unit-rank channel only; "
            "reduce q >= 2 instances to rank 1 first");
    }
    const prelog::RngStream stream(args.seed, 0);
    const prelog::BoundCurve curve =
        prelog::sweep_and_fit(prelog::parse_input_kind(args.input), args.m, args.n, args.rho_db,
                              args.samples, stream);
    if (!args.out_path.empty()) {
        prelog::write_text_file(args.out_path, prelog::bound_curve_csv(curve));
    }
    std::cout << prelog::bound_curve_json(curve) << "\n";
    return kExitOk;
}

struct SimulateArgs {
    std::string matrix_path;
    int m = 0;
    double rho_db = 10.0;
    std::string input = "sphere";
    long samples = 100;
    std::uint64_t seed = 1;
    std::string out_path;
};

int cmd_simulate(const SimulateArgs &args) {
    const prelog::CorrelationRoot root =
        prelog::correlation_root_from_json(prelog::read_text_file(args.matrix_path));
    const double rho = std::pow(10.0, args.rho_db / 10.0);
    if (args.m < 1) {
        throw prelog::ValidationError("simulate: m must be >= 1");
    }
    prelog::ChannelConfig config{root.n(), root.q(), static_cast<std::size_t>(args.m), rho};
    config.validate();
    const bool zero_input = args.input == "zero";
    const prelog::InputKind kind =
        zero_input ? prelog::InputKind::sphere : prelog::parse_input_kind(args.input);

    prelog::RngStream rng(args.seed, 0);
    std::string out;
    for (long i = 0; i < args.samples; ++i) {
        std::vector<prelog::cplx> x =
            zero_input ? std::vector<prelog::cplx>(root.n(), prelog::cplx{0.0, 0.0})
                       : prelog::sample_power_input(root.n(), rho, kind, rng);
        const prelog::BlockSample sample =
            prelog::simulate_block(root, std::move(x), static_cast<std::size_t>(args.m), rng);
        out += prelog::block_sample_to_json(sample);
        out += '\n';
    }
    if (!args.out_path.empty()) {
        prelog::write_text_file(args.out_path, out);
    } else {
        std::cout << out;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t seed = 1;
    long samples = 100000;
    std::string inject = "none";
};

int cmd_verify(const VerifyArgs &args) {
    prelog::VerifyOptions opts;
    opts.master_seed = args.seed;
    opts.samples = args.samples;
    if (args.inject == "jacobian-exponent") {
        opts.jacobian_exponent_bias = 1;
    } else if (args.inject != "none") {
        throw prelog::ValidationError("verify: unknown --inject value");
    }
    const std::vector<prelog::CheckReport> reports = prelog::run_verify_suite(opts);
    std::cout << prelog::check_reports_json(reports) << "\n";
    return prelog::any_violation(reports) ? kExitFail : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"prelog — pre-log formulas, Property (A) certification and duality-bound "
                 "experiments for correlated block-fading SIMO channels"};
    app.require_subcommand(1);

    PrelogArgs prelog_args;
    CLI::App *prelog_cmd = app.add_subcommand("prelog", "closed-form pre-log report as JSON");
    prelog_cmd->add_option("--n", prelog_args.n, "block length")->required();
    prelog_cmd->add_option("--q", prelog_args.q, "correlation rank")->required();
    prelog_cmd->add_option("--m", prelog_args.m, "receive antennas")->required();
    prelog_cmd->add_option("--matrix", prelog_args.matrix_path,
                           "correlation root JSON; when given, Property (A) is certified instead "
                           "of assumed");
    prelog_cmd->add_option("--rel-tol", prelog_args.rel_tol, "rank-test threshold");

    struct {
        int n = 0;
        int q = 0;
    } antennas_args;
    CLI::App *antennas_cmd =
        app.add_subcommand("antennas", "antenna count maximizing the pre-log");
    antennas_cmd->add_option("--n", antennas_args.n, "block length")->required();
    antennas_cmd->add_option("--q", antennas_args.q, "correlation rank")->required();

    struct {
        std::string matrix_path;
        int m = 0;
        double rel_tol = 1e-9;
    } pa_args;
    CLI::App *pa_cmd = app.add_subcommand("check-pa", "certify Property (A) for a root file");
    pa_cmd->add_option("--matrix", pa_args.matrix_path, "correlation root JSON")->required();
    pa_cmd->add_option("--m", pa_args.m, "receive antennas")->required();
    pa_cmd->add_option("--rel-tol", pa_args.rel_tol, "rank-test threshold");

    SweepArgs sweep_args;
    CLI::App *sweep_cmd =
        app.add_subcommand("bound-sweep", "Monte Carlo duality-bound sweep over an SNR grid");
    sweep_cmd->add_option("--m", sweep_args.m, "receive antennas")->required();
    sweep_cmd->add_option("--n", sweep_args.n, "block length")->required();
    sweep_cmd->add_option("--q", sweep_args.q, "correlation rank (must be 1)");
    sweep_cmd->add_option("--rho-db", sweep_args.rho_db, "SNR grid in dB (comma separated)")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--samples", sweep_args.samples, "Monte Carlo samples per point");
    sweep_cmd->add_option("--seed", sweep_args.seed, "master seed");
    sweep_cmd->add_option("--input", sweep_args.input, "input law: sphere|gaussian");
    sweep_cmd->add_option("--out", sweep_args.out_path, "CSV output path");

    SimulateArgs sim_args;
    CLI::App *sim_cmd = app.add_subcommand("simulate", "export simulated blocks as JSON lines");
    sim_cmd->add_option("--matrix", sim_args.matrix_path, "correlation root JSON")->required();
    sim_cmd->add_option("--m", sim_args.m, "receive antennas")->required();
    sim_cmd->add_option("--rho-db", sim_args.rho_db, "SNR in dB");
    sim_cmd->add_option("--input", sim_args.input,
                        "input law: sphere|gaussian (or zero for noise-only blocks)");
    sim_cmd->add_option("--samples", sim_args.samples, "number of blocks");
    sim_cmd->add_option("--seed", sim_args.seed, "master seed");
    sim_cmd->add_option("--out", sim_args.out_path, "output path (default stdout)");

    VerifyArgs verify_args;
    CLI::App *verify_cmd =
        app.add_subcommand("verify", "run the numerical verification suite");
    verify_cmd->add_option("--seed", verify_args.seed, "master seed");
    verify_cmd->add_option("--samples", verify_args.samples, "Monte Carlo samples per check");
    verify_cmd->add_option("--inject", verify_args.inject, "fault injection (testing only)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);

        if (prelog_cmd->parsed()) {
            return cmd_prelog(prelog_args);
        }
        if (antennas_cmd->parsed()) {
            std::cout << prelog::optimal_antennas(antennas_args.n, antennas_args.q) << "\n";
            return kExitOk;
        }
        if (pa_cmd->parsed()) {
            const prelog::CorrelationRoot root =
                prelog::correlation_root_from_json(prelog::read_text_file(pa_args.matrix_path));
            const prelog::PropertyAReport report =
                prelog::check_property_a(root, pa_args.m, pa_args.rel_tol);
            std::cout << prelog::property_a_report_to_json(report) << "\n";
            return report.holds ? kExitOk : kExitFail;
        }
        if (sweep_cmd->parsed()) {
            return cmd_bound_sweep(sweep_args);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim_args);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_args);
        }
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const prelog::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitUsage;
    }
}
