// Command-line driver: single runs, convergence sweeps and the
// counter-propagation experiment for the over-relaxation kinetic scheme.

#include <cstdio>
#include <cmath>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orelax/harness.hpp"
#include "orelax/kernels.hpp"

namespace {

struct Options {
    orelax::ProblemSetup setup;
    double lambda = 2.0;
    double epsilon = 0.0;
    int dx_exp = 7;
    std::vector<int> dx_exps = {5, 6, 7, 8, 9};
    std::string right_bc = "neumann";
    std::string scheme = "s2";
    std::string relax = "instant";
    std::size_t snapshots = 0;
    std::string out_dir = ".";
    std::string kernel = "auto";
};

void add_common_options(CLI::App& cmd, Options& opt) {
    cmd.add_option("--c", opt.setup.c, "transport speed c > 0");
    cmd.add_option("--lambda", opt.lambda, "kinetic speed lambda > 0");
    cmd.add_option("--tmax", opt.setup.t_max, "final time");
    cmd.add_option("--alpha", opt.setup.alpha, "initial w-peak center");
    cmd.add_option("--beta", opt.setup.beta, "initial y-peak center");
    cmd.add_option("--amp-A", opt.setup.amp_a, "Gaussian sharpness A > 0");
    cmd.add_option("--amp-B", opt.setup.amp_b, "flux disequilibrium amplitude B");
    cmd.add_option("--right-bc", opt.right_bc,
                   "right closure: exact|dirichlet|neumann|periodic")
        ->check(CLI::IsMember({"exact", "dirichlet", "neumann", "periodic"}));
    cmd.add_option("--scheme", opt.scheme, "time scheme: s1|s2")
        ->check(CLI::IsMember({"s1", "s2"}));
    cmd.add_option("--relax", opt.relax,
                   "relaxation: instant|over|exact|project")
        ->check(CLI::IsMember({"instant", "over", "exact", "project"}));
    cmd.add_option("--epsilon", opt.epsilon, "relaxation time epsilon >= 0");
    cmd.add_option("--snapshots", opt.snapshots,
                   "profile snapshot cadence in steps (0 = none)");
    cmd.add_option("--out", opt.out_dir, "output directory for CSV files");
    cmd.add_option("--kernel", opt.kernel, "kernel backend: auto|scalar|avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

orelax::Scheme parse_scheme(const std::string& s) {
    return s == "s1" ? orelax::Scheme::s1 : orelax::Scheme::s2;
}

orelax::Relaxation parse_relax(const std::string& s) {
    if (s == "instant") return orelax::Relaxation::instant;
    if (s == "over") return orelax::Relaxation::over;
    if (s == "exact") return orelax::Relaxation::exact;
    return orelax::Relaxation::project;
}

orelax::BoundaryClosure parse_closure(const Options& opt) {
    if (opt.right_bc == "periodic") {
        return orelax::BoundaryClosure::periodic();
    }
    orelax::RightStrategy strategy = orelax::RightStrategy::neumann_y;
    if (opt.right_bc == "exact") strategy = orelax::RightStrategy::exact;
    if (opt.right_bc == "dirichlet") {
        strategy = orelax::RightStrategy::dirichlet_y;
    }
    return orelax::BoundaryClosure::physical(opt.setup, strategy);
}

orelax::SchemeConfig make_config(const Options& opt, int dx_exp) {
    return orelax::SchemeConfig::dyadic(dx_exp, opt.lambda,
                                        parse_scheme(opt.scheme),
                                        parse_relax(opt.relax), opt.epsilon);
}

void apply_kernel_choice(const Options& opt) {
    using orelax::kernels::Backend;
    if (opt.kernel == "scalar") {
        orelax::kernels::set_backend(Backend::scalar);
    } else if (opt.kernel == "avx2") {
        orelax::kernels::set_backend(Backend::avx2);
    }
}

int cmd_run(const Options& opt) {
    const orelax::SchemeConfig cfg = make_config(opt, opt.dx_exp);
    const orelax::BoundaryClosure closure = parse_closure(opt);
    const orelax::RunReport report =
        orelax::run_simulation(opt.setup, cfg, closure, opt.snapshots);

    std::printf("backend   %s\n",
                orelax::kernels::backend_name(orelax::kernels::active_backend()));
    std::printf("grid      N=%zu dx=%.8g dt=%.8g\n", cfg.n_interior, cfg.dx,
                cfg.dt);
    std::printf("steps     %zu (achieved time %.8g)\n", report.step_count,
                report.achieved_time);
    if (report.diverged) {
        std::printf("UNSTABLE  non-finite state at step %zu\n",
                    report.diverged_step);
        return 2;
    }
    std::printf("l2 error  %.12e\n", report.error);
    if (opt.snapshots > 0) {
        const auto file = std::filesystem::path(opt.out_dir) / "profiles.csv";
        orelax::emit_profiles(report, opt.setup, cfg, closure.kind, file);
        std::printf("profiles  %s (%zu snapshots)\n", file.string().c_str(),
                    report.series.size());
    }
    if (!std::isfinite(report.error)) {
        std::printf("UNSTABLE  error norm overflowed\n");
        return 2;
    }
    return 0;
}

int cmd_converge(const Options& opt) {
    const orelax::SchemeConfig tpl = make_config(opt, opt.dx_exps.front());
    const orelax::BoundaryClosure closure = parse_closure(opt);
    const orelax::ConvergenceTable table =
        orelax::convergence_study(opt.setup, tpl, closure, opt.dx_exps);

    std::printf("%6s %12s %14s %8s\n", "N", "dx", "l2_error", "order");
    for (const auto& row : table.rows) {
        if (row.order) {
            std::printf("%6zu %12.6g %14.6e %8.3f\n", row.n_interior, row.dx,
                        row.error, *row.order);
        } else {
            std::printf("%6zu %12.6g %14.6e %8s\n", row.n_interior, row.dx,
                        row.error, "-");
        }
    }
    if (table.ls_slope) {
        std::printf("least-squares slope: %.4f\n", *table.ls_slope);
    }
    const auto file = std::filesystem::path(opt.out_dir) / "convergence.csv";
    orelax::emit_table(table, file);
    std::printf("table     %s\n", file.string().c_str());
    if (!table.complete) {
        std::printf("UNSTABLE  sweep aborted after %zu rows\n",
                    table.rows.size());
        return 2;
    }
    return 0;
}

int cmd_wave(const Options& opt) {
    const orelax::SchemeConfig cfg = make_config(opt, opt.dx_exp);
    const orelax::BoundaryClosure closure = parse_closure(opt);
    const orelax::WaveSpeeds speeds =
        orelax::counter_propagation_test(opt.setup, cfg, closure);

    if (opt.snapshots > 0) {
        const orelax::RunReport report =
            orelax::run_simulation(opt.setup, cfg, closure, opt.snapshots);
        const auto file = std::filesystem::path(opt.out_dir) / "profiles.csv";
        orelax::emit_profiles(report, opt.setup, cfg, closure.kind, file);
        std::printf("profiles  %s\n", file.string().c_str());
    }
    if (!speeds.v_w) {
        std::printf("v_w       no fit (flat profile)\n");
        return 1;
    }
    std::printf("v_w       %+.6f\n", *speeds.v_w);
    if (speeds.v_y) {
        std::printf("v_y       %+.6f\n", *speeds.v_y);
    } else {
        std::printf("v_y       no fit (max|y| = %.3e below threshold)\n",
                    speeds.max_abs_y);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D over-relaxation kinetic transport solver"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* run = app.add_subcommand("run", "single simulation");
    add_common_options(*run, opt);
    run->add_option("--dx-exp", opt.dx_exp, "grid exponent, dx = 2^-k");

    CLI::App* converge = app.add_subcommand("converge", "resolution sweep");
    add_common_options(*converge, opt);
    converge->add_option("--dx-exps", opt.dx_exps,
                         "grid exponents, e.g. --dx-exps 5 6 7 8 9")
        ->delimiter(',');

    CLI::App* wave =
        app.add_subcommand("wave", "fit peak velocities of w and y");
    add_common_options(*wave, opt);
    wave->add_option("--dx-exp", opt.dx_exp, "grid exponent, dx = 2^-k");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_kernel_choice(opt);
        if (run->parsed()) return cmd_run(opt);
        if (converge->parsed()) return cmd_converge(opt);
        return cmd_wave(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
