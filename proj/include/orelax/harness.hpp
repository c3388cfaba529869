#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "orelax/boundary.hpp"
#include "orelax/config.hpp"
#include "orelax/operators.hpp"
#include "orelax/problem.hpp"

namespace orelax {

struct Snapshot {
    double time = 0.0;
    std::vector<double> w;
    std::vector<double> y;  // flux error z - c w
};

struct RunReport {
    LatticeState final_state;
    double error = 0.0;         // discrete L2 error at the achieved time
    std::size_t step_count = 0;
    double achieved_time = 0.0;  // step_count * dt, within dt/2 of t_max
    std::vector<Snapshot> series;
    bool diverged = false;       // NaN/Inf detected; error is NaN
    std::size_t diverged_step = 0;
};

struct ConvergenceRow {
    std::size_t n_interior = 0;
    double dx = 0.0;
    double error = 0.0;
    std::optional<double> order;  // vs the previous (coarser) row
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::optional<double> ls_slope;  // least squares, log error vs log dx
    bool complete = true;            // false if a run went unstable
};

struct WaveSpeeds {
    std::optional<double> v_w;  // fitted peak velocity of w
    std::optional<double> v_y;  // fitted peak velocity of y; absent when
                                // the y amplitude is below the fit threshold
    double max_abs_y = 0.0;
};

// Discrete L2 norm of the deviation from the sampled reference solution,
//   sqrt(dx * sum_i (w_i - u_i)^2 + (z_i - c u_i)^2),  u_i = u(x_i - c t).
double l2_error(const LatticeState& s, const ProblemSetup& setup, double t,
                ClosureKind kind = ClosureKind::physical);

// sqrt(dx * sum_i w_i^2 + z_i^2); the stability monitor.
double state_l2(const LatticeState& s);

// Runs round(t_max/dt) full steps of cfg.scheme. A snapshot is recorded
// before the first step and after every snapshot_cadence-th step
// (0 = none); the final state is always included when cadence > 0.
// Aborts with report.diverged on the first non-finite state.
RunReport run_simulation(const ProblemSetup& setup, const SchemeConfig& cfg,
                         const BoundaryClosure& closure,
                         std::size_t snapshot_cadence = 0);

// One run per dyadic exponent (dx = 2^-k), pairwise observed orders and
// the least-squares slope. An unstable run leaves a partial table with
// complete = false.
ConvergenceTable convergence_study(const ProblemSetup& setup,
                                   const SchemeConfig& cfg_template,
                                   const BoundaryClosure& closure,
                                   std::span<const int> exponents);

// Orders and slope for externally produced (N, dx, error) rows.
ConvergenceTable finalize_table(std::vector<ConvergenceRow> rows);

// Slope of the least-squares line through (log x, log y).
double log_log_slope(std::span<const double> x, std::span<const double> y);

// Sub-cell peak location: grid argmax refined by a 3-point parabolic fit.
// Empty for flat profiles (ambiguous argmax).
std::optional<double> refined_argmax(std::span<const double> field, double dx);

// Runs with per-step snapshots and fits the peak trajectories of w and of
// y = z - c w by least squares. The y fit is attempted only when the
// observed y amplitude reaches y_fit_threshold; with equilibrium data the
// scheme's own flux error stays well below it (second order in dt).
WaveSpeeds counter_propagation_test(const ProblemSetup& setup,
                                    const SchemeConfig& cfg,
                                    const BoundaryClosure& closure,
                                    double y_fit_threshold = 0.1);

// Plain-text CSV emission, one header line, values at 17 significant
// digits so parsing reproduces the doubles exactly.
//   profiles:    time,x,w,z,y,u_exact   (all snapshots in one file)
//   convergence: N,dx,error,order       (order empty on the coarsest row)
void emit_profiles(const RunReport& report, const ProblemSetup& setup,
                   const SchemeConfig& cfg, ClosureKind kind,
                   const std::filesystem::path& file);
void emit_table(const ConvergenceTable& table,
                const std::filesystem::path& file);

}  // namespace orelax
