#include "orelax/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace orelax {

double l2_error(const LatticeState& s, const ProblemSetup& setup, double t,
                ClosureKind kind) {
    require_valid(s);
    const std::size_t nn = s.n_interior();
    const double dx = 1.0 / static_cast<double>(nn + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.points(); ++i) {
        const double x = grid_point(i, nn);
        const double u = reference_solution(setup, kind, nn, x, t);
        const double dw = s.w[i] - u;
        const double dz = s.z[i] - setup.c * u;
        sum += dw * dw + dz * dz;
    }
    return std::sqrt(dx * sum);
}

double state_l2(const LatticeState& s) {
    require_valid(s);
    const double dx = 1.0 / static_cast<double>(s.n_interior() + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.points(); ++i) {
        sum += s.w[i] * s.w[i] + s.z[i] * s.z[i];
    }
    return std::sqrt(dx * sum);
}

namespace {

Snapshot take_snapshot(const LatticeState& s, double c) {
    Snapshot snap;
    snap.time = s.sub_time;
    snap.w = s.w;
    snap.y.resize(s.points());
    for (std::size_t i = 0; i < s.points(); ++i) {
        snap.y[i] = s.z[i] - c * s.w[i];
    }
    return snap;
}

}  // namespace

RunReport run_simulation(const ProblemSetup& setup, const SchemeConfig& cfg,
                         const BoundaryClosure& closure,
                         std::size_t snapshot_cadence) {
    validate(setup);
    validate(cfg);
    const FluxModel flux = FluxModel::linear(setup.c);

    RunReport report;
    LatticeState s = initial_state(setup, cfg, closure.kind);
    const auto n_steps =
        static_cast<std::size_t>(std::llround(setup.t_max / cfg.dt));

    if (snapshot_cadence > 0) {
        report.series.push_back(take_snapshot(s, setup.c));
    }
    for (std::size_t k = 1; k <= n_steps; ++k) {
        s = step(s, cfg, flux, closure);
        if (!s.all_finite()) {
            report.diverged = true;
            report.diverged_step = k;
            report.final_state = std::move(s);
            report.step_count = k;
            report.achieved_time = static_cast<double>(k) * cfg.dt;
            report.error = std::numeric_limits<double>::quiet_NaN();
            return report;
        }
        if (snapshot_cadence > 0 &&
            (k % snapshot_cadence == 0 || k == n_steps)) {
            report.series.push_back(take_snapshot(s, setup.c));
        }
    }
    report.step_count = n_steps;
    report.achieved_time = static_cast<double>(n_steps) * cfg.dt;
    report.error = l2_error(s, setup, report.achieved_time, closure.kind);
    report.final_state = std::move(s);
    return report;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs >= 2 matching points");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceTable finalize_table(std::vector<ConvergenceRow> rows) {
    ConvergenceTable table;
    table.rows = std::move(rows);
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& prev = table.rows[i - 1];
        auto& cur = table.rows[i];
        cur.order = std::log(prev.error / cur.error) /
                    std::log(prev.dx / cur.dx);
    }
    if (table.rows.size() >= 2) {
        std::vector<double> dxs, errs;
        for (const auto& r : table.rows) {
            dxs.push_back(r.dx);
            errs.push_back(r.error);
        }
        table.ls_slope = log_log_slope(dxs, errs);
    }
    return table;
}

ConvergenceTable convergence_study(const ProblemSetup& setup,
                                   const SchemeConfig& cfg_template,
                                   const BoundaryClosure& closure,
                                   std::span<const int> exponents) {
    std::vector<ConvergenceRow> rows;
    bool complete = true;
    for (int k : exponents) {
        const SchemeConfig cfg = SchemeConfig::dyadic(
            k, cfg_template.lambda, cfg_template.scheme,
            cfg_template.relaxation, cfg_template.epsilon);
        const RunReport report = run_simulation(setup, cfg, closure);
        if (report.diverged || !std::isfinite(report.error)) {
            complete = false;
            break;
        }
        rows.push_back({cfg.n_interior, cfg.dx, report.error, std::nullopt});
    }
    ConvergenceTable table = finalize_table(std::move(rows));
    table.complete = complete;
    return table;
}

std::optional<double> refined_argmax(std::span<const double> field,
                                     double dx) {
    if (field.size() < 3) return std::nullopt;
    const auto it = std::max_element(field.begin(), field.end());
    const auto lo = *std::min_element(field.begin(), field.end());
    if (*it - lo <= 1e-12 * std::max(1.0, std::fabs(*it))) {
        return std::nullopt;  // flat profile, argmax ambiguous
    }
    const auto i = static_cast<std::size_t>(it - field.begin());
    if (i == 0 || i + 1 == field.size()) {
        return static_cast<double>(i) * dx;
    }
    const double den = field[i - 1] - 2.0 * field[i] + field[i + 1];
    double offset = 0.0;
    if (den < 0.0) {
        offset = 0.5 * (field[i - 1] - field[i + 1]) / den;
        offset = std::clamp(offset, -0.5, 0.5);
    }
    return (static_cast<double>(i) + offset) * dx;
}

namespace {

// least-squares slope of position vs time
std::optional<double> fit_peak_velocity(const std::vector<Snapshot>& series,
                                        bool use_y, double dx) {
    double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
    std::size_t m = 0;
    for (const Snapshot& snap : series) {
        const std::vector<double>& f = use_y ? snap.y : snap.w;
        const std::optional<double> pos = refined_argmax(f, dx);
        if (!pos) return std::nullopt;
        st += snap.time;
        sx += *pos;
        stt += snap.time * snap.time;
        stx += snap.time * *pos;
        ++m;
    }
    if (m < 2) return std::nullopt;
    const auto n = static_cast<double>(m);
    return (n * stx - st * sx) / (n * stt - st * st);
}

}  // namespace

WaveSpeeds counter_propagation_test(const ProblemSetup& setup,
                                    const SchemeConfig& cfg,
                                    const BoundaryClosure& closure,
                                    double y_fit_threshold) {
    const RunReport report = run_simulation(setup, cfg, closure, 1);
    if (report.diverged) {
        throw std::runtime_error("counter-propagation run went unstable");
    }
    if (report.series.size() < 8) {
        throw std::invalid_argument(
            "peak-velocity fit needs at least 8 snapshots; lower dx or raise "
            "t_max");
    }
    WaveSpeeds speeds;
    for (const Snapshot& snap : report.series) {
        for (double v : snap.y) {
            speeds.max_abs_y = std::max(speeds.max_abs_y, std::fabs(v));
        }
    }
    speeds.v_w = fit_peak_velocity(report.series, false, cfg.dx);
    if (speeds.max_abs_y >= y_fit_threshold) {
        speeds.v_y = fit_peak_velocity(report.series, true, cfg.dx);
    }
    return speeds;
}

namespace {

void write_number(std::FILE* f, double v, char suffix) {
    std::fprintf(f, "%.17g%c", v, suffix);
}

struct FileHandle {
    std::FILE* f;
    explicit FileHandle(const std::filesystem::path& p)
        : f(std::fopen(p.string().c_str(), "w")) {
        if (!f) {
            throw std::runtime_error("cannot open output file: " + p.string());
        }
    }
    ~FileHandle() {
        if (f) std::fclose(f);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

}  // namespace

void emit_profiles(const RunReport& report, const ProblemSetup& setup,
                   const SchemeConfig& cfg, ClosureKind kind,
                   const std::filesystem::path& file) {
    FileHandle out(file);
    std::fprintf(out.f, "time,x,w,z,y,u_exact\n");
    for (const Snapshot& snap : report.series) {
        for (std::size_t i = 0; i < snap.w.size(); ++i) {
            const double x = grid_point(i, cfg.n_interior);
            const double z = setup.c * snap.w[i] + snap.y[i];
            const double u =
                reference_solution(setup, kind, cfg.n_interior, x, snap.time);
            write_number(out.f, snap.time, ',');
            write_number(out.f, x, ',');
            write_number(out.f, snap.w[i], ',');
            write_number(out.f, z, ',');
            write_number(out.f, snap.y[i], ',');
            write_number(out.f, u, '\n');
        }
    }
}

void emit_table(const ConvergenceTable& table,
                const std::filesystem::path& file) {
    FileHandle out(file);
    std::fprintf(out.f, "N,dx,error,order\n");
    for (const ConvergenceRow& row : table.rows) {
        std::fprintf(out.f, "%zu,", row.n_interior);
        write_number(out.f, row.dx, ',');
        write_number(out.f, row.error, ',');
        if (row.order) {
            write_number(out.f, *row.order, '\n');
        } else {
            std::fprintf(out.f, "\n");
        }
    }
}

}  // namespace orelax
